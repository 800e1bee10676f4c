"""
Run config documents

YAML in, validated RunConfig out, and back. Hypotheses of the requested
computation are checked here so a bad config fails before any numerics run.
"""

from typing import Any, Dict, Optional

import yaml
from loguru import logger
from pydantic import ValidationError

from ..carleson.measures import check_beta
from ..criteria.common import require_average_range, require_embedding_range
from ..models.config import CriterionKind, RunConfig, Task
from ..models.space import SpaceParams
from ..models.symbol import SymbolRole
from ..symbols.literal import emit_complex, emit_symbol, parse_complex, parse_symbol
from ..symbols.validate import require_self_map
from ..utils.errors import ConfigError, ParameterError

SYMBOL_ROLES = {
    "u": SymbolRole.WEIGHT,
    "v": SymbolRole.WEIGHT,
    "phi": SymbolRole.SELF_MAP,
    "psi": SymbolRole.SELF_MAP,
}


def _key_lines(text: str) -> Dict[str, int]:
    """1-based line of every top-level key"""
    try:
        node = yaml.compose(text)
    except yaml.YAMLError:
        return {}
    if not isinstance(node, yaml.MappingNode):
        return {}
    return {key.value: key.start_mark.line + 1 for key, _ in node.value}


def _located(message: str, field: Optional[str], lines: Dict[str, int]) -> ConfigError:
    top = field.split(".")[0] if field else None
    if top in lines:
        message = f"{message} (line {lines[top]})"
    return ConfigError(message, field)


def default_criterion(cfg: RunConfig) -> CriterionKind:
    """embedding when p <= q, the averaging criterion otherwise"""
    if cfg.criterion is not None:
        return CriterionKind(cfg.criterion)
    sp = cfg.space
    return CriterionKind.EMBEDDING if sp.p <= sp.target_exponent else CriterionKind.LP_AVERAGE


def check_hypotheses(cfg: RunConfig) -> None:
    """
    Raises:
        ConfigError: a hypothesis of the requested evaluator fails; the
            message cites it
    """
    for name in ("phi", "psi"):
        try:
            require_self_map(getattr(cfg, name), name)
        except ParameterError as e:
            raise ConfigError(str(e), name) from e

    task = Task(cfg.task)
    kind = default_criterion(cfg) if task == Task.CRITERIA else None
    beta = cfg.numerics.beta
    try:
        if kind == CriterionKind.EMBEDDING:
            require_embedding_range(cfg.space)
        elif kind in (CriterionKind.LP_AVERAGE, CriterionKind.ATOMIC):
            require_average_range(cfg.space)
        if beta is not None and kind in (CriterionKind.EMBEDDING, CriterionKind.LP_AVERAGE):
            check_beta(kind.value, cfg.space, beta)
        if beta is not None and (task == Task.SCHATTEN or kind == CriterionKind.SCHATTEN):
            check_beta("schatten", SpaceParams.bergman(cfg.alpha), beta)
    except ParameterError as e:
        raise ConfigError(str(e), "criterion" if "beta" not in str(e) else "numerics.beta") from e


def parse_config(text: str, task: Optional[Task] = None) -> RunConfig:
    """
    Read and validate a run config

    Args:
        text: YAML document
        task: task of the invoking command; must match the document's task
            when both are given

    Raises:
        ConfigError: malformed YAML, schema violations (with field and line)
            or failed hypotheses
    """
    lines = _key_lines(text)
    try:
        document = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        where = f"line {mark.line + 1}" if mark is not None else None
        raise ConfigError(f"malformed YAML: {getattr(e, 'problem', e)}", where) from e

    if document is None:
        document = {}
    if not isinstance(document, dict):
        raise ConfigError("a run config is a mapping of keys to values")
    document = dict(document)

    if task is not None:
        task = Task(task)
        declared = document.setdefault("task", task.value)
        if declared != task.value:
            raise _located(
                f"config is for task {declared!r}, command is {task.value!r}", "task", lines
            )

    for name, role in SYMBOL_ROLES.items():
        if name in document:
            document[name] = parse_symbol(document[name], role, name)
    for name in ("a", "b"):
        if name in document:
            document[name] = parse_complex(document[name], name)

    try:
        cfg = RunConfig.model_validate(document)
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"]) or None
        raise _located(error["msg"].removeprefix("Value error, "), field, lines) from e

    check_hypotheses(cfg)
    logger.debug(f"config parsed: task={cfg.task}, space={cfg.space.label()}")
    return cfg


def config_document(cfg: RunConfig) -> Dict[str, Any]:
    """Every field explicit, symbols and coefficients in literal syntax"""
    document = cfg.model_dump(mode="json", exclude={"u", "v", "phi", "psi", "a", "b"})
    for name in SYMBOL_ROLES:
        document[name] = emit_symbol(getattr(cfg, name))
    document["a"] = emit_complex(cfg.a)
    document["b"] = emit_complex(cfg.b)
    return document


def emit_config(cfg: RunConfig) -> str:
    return yaml.safe_dump(config_document(cfg), sort_keys=False)
