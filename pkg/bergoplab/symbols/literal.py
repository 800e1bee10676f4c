"""
Symbol literals

Config syntax:
    poly: [c0, c1, ...]          complex entries as [re, im] pairs or numbers
    lft: {a: .., b: .., c: .., d: ..}
Either a mapping or the same text as a string.
"""

from typing import Any, Dict, List

import yaml

from ..models.symbol import AnalyticSymbol, SymbolKind, SymbolRole
from ..utils.errors import ConfigError


def parse_complex(value: Any, field: str = "") -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ConfigError("complex entries are [re, im] pairs", field)
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, (int, float, complex)) and not isinstance(value, bool):
        return complex(value)
    if isinstance(value, str):
        try:
            return complex(value.replace(" ", ""))
        except ValueError as e:
            raise ConfigError(f"cannot read {value!r} as a complex number", field) from e
    raise ConfigError(f"cannot read {value!r} as a complex number", field)


def emit_complex(value: complex) -> List[float]:
    value = complex(value)
    return [float(value.real), float(value.imag)]


def parse_symbol(
    literal: Any, role: SymbolRole = SymbolRole.WEIGHT, field: str = ""
) -> AnalyticSymbol:
    """
    Read a symbol literal

    Raises:
        ConfigError: unknown representation or malformed entries
    """
    if isinstance(literal, AnalyticSymbol):
        return literal.as_role(role)
    if isinstance(literal, str):
        try:
            literal = yaml.safe_load(literal)
        except yaml.YAMLError as e:
            raise ConfigError(f"malformed symbol literal: {e}", field) from e
    if not isinstance(literal, dict) or len(literal.keys() & {"poly", "lft"}) != 1:
        raise ConfigError("symbol literal needs exactly one of 'poly' or 'lft'", field)

    if "poly" in literal:
        entries = literal["poly"]
        if not isinstance(entries, list) or not entries:
            raise ConfigError("poly needs a non-empty coefficient list", f"{field}.poly")
        coefficients = [parse_complex(c, f"{field}.poly[{i}]") for i, c in enumerate(entries)]
        tail = float(literal.get("tail_bound", 0.0))
        return AnalyticSymbol(
            kind=SymbolKind.POLY, coefficients=coefficients, role=role, tail_bound=tail
        )

    entries = literal["lft"]
    if isinstance(entries, dict):
        missing = {"a", "b", "c", "d"} - entries.keys()
        if missing:
            raise ConfigError(f"lft is missing {sorted(missing)}", f"{field}.lft")
        entries = [entries[k] for k in ("a", "b", "c", "d")]
    if not isinstance(entries, list) or len(entries) != 4:
        raise ConfigError("lft needs the four coefficients a, b, c, d", f"{field}.lft")
    a, b, c, d = (parse_complex(x, f"{field}.lft") for x in entries)
    if not abs(d) > abs(c):
        raise ConfigError("lft pole must lie outside the closed disk (|d| > |c|)", f"{field}.lft")
    return AnalyticSymbol.linear_fractional(a, b, c, d, role=role)


def emit_symbol(s: AnalyticSymbol) -> Dict[str, Any]:
    if s.kind == SymbolKind.LFT:
        return {"lft": dict(zip("abcd", (emit_complex(x) for x in s.lft)))}
    out: Dict[str, Any] = {"poly": [emit_complex(c) for c in s.coefficients]}
    if s.tail_bound:
        out["tail_bound"] = float(s.tail_bound)
    return out
