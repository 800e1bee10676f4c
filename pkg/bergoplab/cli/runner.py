"""
Task dispatch and report files

One config, one task, one report. Reports carry no timestamps, so equal
inputs and seeds give byte-identical files.
"""

import csv
import io
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

import numpy as np
from loguru import logger

from ..carleson.averaging import carleson_statistics
from ..carleson.measures import criterion_measures, default_beta
from ..criteria import (
    evaluate_atomic_criterion,
    evaluate_embedding_criterion,
    evaluate_hardy_difference,
    evaluate_linear_sum,
    evaluate_lp_average_criterion,
    evaluate_schatten_criterion,
)
from ..criteria.common import decay_verdict, provenance, tail_verdict, trend_verdict
from ..geometry.disk import pairwise_beta
from ..geometry.lattice import (
    build_lattice,
    covering_multiplicity,
    multiplicity_bound,
    nearest_center_distance,
    sample_disk,
)
from ..models.config import CriterionKind, OutputFormat, RunConfig, Task
from ..models.criteria import CriterionParams, CriterionReport, CrossCheck, Verdict
from ..models.space import SpaceParams
from ..models.symbol import AnalyticSymbol
from ..operators.hs import hs_norm_integral
from ..operators.matrices import combo_matrix, wco_matrix
from ..operators.spectrum import classify_decay, singular_values
from ..quadrature.grid import build_grid
from ..symbols.validate import validate_self_map
from ..utils.concurrency import ordered_map
from ..utils.errors import LabError
from .config_io import config_document, default_criterion

EXIT_CLEAN = 0
EXIT_ERROR = 1
EXIT_INDETERMINATE = 2


def criterion_params(cfg: RunConfig) -> CriterionParams:
    n = cfg.numerics
    return CriterionParams(
        sp=cfg.space,
        beta=n.beta,
        N=n.N,
        r=n.r,
        radii=list(n.radii),
        M=n.M,
        tol_vanish=n.tol_vanish,
        bracket_bound=n.bracket_bound,
        tol_tail=n.tol_tail,
        radial_count=n.radial_count,
        angular_count=n.angular_count,
        seed=n.seed,
        coverage_radius=n.coverage_radius,
        bounded_valence=n.bounded_valence,
    )


# ========================================
# Tasks
# ========================================


def norms_report(cfg: RunConfig, params: CriterionParams) -> CriterionReport:
    """Operator and Hilbert-Schmidt norms of both operators and the combination on A^2_alpha"""
    q4 = cfg.quadruple
    hilbert = SpaceParams.bergman(cfg.alpha)
    report = CriterionReport(criterion="norms", provenance=provenance(params))

    for name, symbol in (("phi", q4.phi), ("psi", q4.psi)):
        check = validate_self_map(symbol)
        report.add(f"{name}:sup", check.sup_value)

    operators = [
        ("C_(u,phi)", wco_matrix(q4.u, q4.phi, hilbert, hilbert, params.M)),
        ("C_(v,psi)", wco_matrix(q4.v, q4.psi, hilbert, hilbert, params.M)),
        ("combo", combo_matrix((cfg.a, cfg.b), q4, hilbert, params.M)),
    ]
    for name, matrix in operators:
        spectrum = singular_values(matrix)
        report.add(f"{name}:norm", spectrum.largest)
        report.add(f"{name}:hs_sq", matrix.frobenius_sq)
        report.add(f"{name}:tail_estimate", matrix.tail_estimate)
        if name == "combo":
            fit = classify_decay(spectrum)
            report.verdicts["combo"] = decay_verdict(fit)
            report.provenance["decay"] = fit.kind.value

    if complex(cfg.a) == 1 and complex(cfg.b) == -1:
        grid = build_grid(cfg.alpha, params.radial_count, params.angular_count)
        report.add("difference:hs_integral", hs_norm_integral(q4, cfg.alpha, grid))
    return report


def carleson_report(cfg: RunConfig, params: CriterionParams) -> CriterionReport:
    """Averaging statistics of the four measures of the difference"""
    sp = cfg.space
    q = sp.target_exponent
    branch = "embedding" if sp.p <= q else "lp_average"
    beta = params.beta if params.beta is not None else default_beta(branch, sp, params.N)
    report = CriterionReport(
        criterion="carleson",
        params={"alpha": sp.alpha, "p": sp.p, "q": q, "beta": beta, "r": params.r},
        provenance=provenance(params),
    )

    measures = criterion_measures(cfg.quadruple, sp.alpha, q, beta)
    stats = ordered_map(
        lambda mu: carleson_statistics(
            mu, sp, params.r, params.radii, tol_vanish=params.tol_vanish, tol_tail=params.tol_tail
        ),
        measures,
    )
    for item in stats:
        label = item.label.value
        report.add(f"{label}:sup", item.sup_value, item.flags)
        report.add(f"{label}:lattice_sup", item.lattice_sup)
        report.add(f"{label}:boundary", item.profile[-1][1] if item.profile else 0.0)
        if item.lp_norm is not None:
            report.add(f"{label}:lp_norm", item.lp_norm)
            report.add(f"{label}:lp_tail", item.lp_tail)
            verdict = tail_verdict(item.lp_tail, params.tol_tail)
        else:
            verdict = trend_verdict(item.trend)
        report.verdicts[label] = Verdict.INDETERMINATE if item.flags else verdict
    return report


def lattice_report(cfg: RunConfig, params: CriterionParams) -> CriterionReport:
    """Separation, covering and multiplicity of the r-lattice in both orderings"""
    report = CriterionReport(
        criterion="lattice",
        params={"r": params.r, "coverage_radius": params.coverage_radius},
        provenance=provenance(params),
    )
    factor = 4.0
    bound = multiplicity_bound(params.r, factor)
    report.add("multiplicity_bound", bound)
    counts = {}
    for ordering in ("spiral", "reversed"):
        lattice = build_lattice(params.r, params.coverage_radius, ordering=ordering)
        points = lattice.points
        distances = pairwise_beta(points, points)
        np.fill_diagonal(distances, np.inf)
        samples = sample_disk(10000, lattice.coverage_radius)
        gap = float(nearest_center_distance(lattice, samples).max())
        counts[ordering] = covering_multiplicity(lattice, factor)

        report.add(f"{ordering}:size", len(lattice))
        report.add(f"{ordering}:repaired", lattice.repaired)
        report.add(
            f"{ordering}:min_separation",
            float(distances.min()) if len(points) > 1 else None,
        )
        uncovered = ["uncovered"] if gap >= lattice.radius_r else []
        report.add(f"{ordering}:covering_gap", gap, uncovered)
        report.add(f"{ordering}:multiplicity", counts[ordering])

    report.cross_checks.append(
        CrossCheck(
            name="multiplicity across orderings",
            sides={k: str(v) for k, v in counts.items()},
            agree=all(1 <= count <= bound for count in counts.values()),
            note=f"factor {factor:g}, both within the packing bound {bound}",
        )
    )
    return report


def criteria_report(cfg: RunConfig, params: CriterionParams) -> CriterionReport:
    q4 = cfg.quadruple
    kind = default_criterion(cfg)
    if kind == CriterionKind.EMBEDDING:
        return evaluate_embedding_criterion(q4, params)
    if kind == CriterionKind.LP_AVERAGE:
        return evaluate_lp_average_criterion(q4, params)
    if kind == CriterionKind.SCHATTEN:
        return evaluate_schatten_criterion(q4, cfg.schatten_p, params)
    if kind == CriterionKind.ATOMIC:
        return evaluate_atomic_criterion(q4, params, cfg.numerics.trials)
    if kind == CriterionKind.HARDY_DIFFERENCE:
        return hardy_report(cfg, params)
    return evaluate_linear_sum(cfg.a, cfg.b, q4, cfg.schatten_p or cfg.p, params)


def schatten_report(cfg: RunConfig, params: CriterionParams) -> CriterionReport:
    return evaluate_schatten_criterion(cfg.quadruple, cfg.schatten_p, params)


def hardy_report(cfg: RunConfig, params: CriterionParams) -> CriterionReport:
    if cfg.v != AnalyticSymbol.constant(1.0):
        logger.warning("the Hardy difference uses v = 1; the configured v is ignored")
    return evaluate_hardy_difference(cfg.u, cfg.phi, cfg.psi, params)


TASKS = {
    Task.NORMS: norms_report,
    Task.SCHATTEN: schatten_report,
    Task.CARLESON: carleson_report,
    Task.CRITERIA: criteria_report,
    Task.LATTICE: lattice_report,
    Task.HARDY: hardy_report,
}


# ========================================
# Output
# ========================================


def _rows(report: CriterionReport, prefix: str = "") -> Iterator[List[str]]:
    scope = f"{prefix}{report.criterion}"
    for item in report.quantities:
        value = "" if item.value is None else repr(item.value)
        yield [scope, "quantity", item.name, value, ";".join(item.flags)]
    for name, verdict in report.verdicts.items():
        yield [scope, "verdict", name, Verdict(verdict).value, ""]
    for check in report.cross_checks:
        sides = ";".join(f"{k}={v}" for k, v in check.sides.items())
        yield [scope, "cross_check", check.name, "agree" if check.agree else "disagree", sides]
    for sub in report.sub_reports:
        yield from _rows(sub, f"{scope}/")


def render_report(
    report: CriterionReport, fmt: OutputFormat, cfg: Optional[RunConfig] = None
) -> str:
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.JSON:
        if cfg is not None:
            report.provenance["config"] = config_document(cfg)
        return report.model_dump_json(indent=2) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["scope", "kind", "name", "value", "flags"])
    writer.writerows(_rows(report))
    return buffer.getvalue()


def write_report(
    report: CriterionReport, path: str, fmt: OutputFormat, cfg: Optional[RunConfig] = None
) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(render_report(report, fmt, cfg), encoding="utf-8")
    logger.info(f"report written to {target}")


def exit_status(report: CriterionReport) -> int:
    return EXIT_INDETERMINATE if report.indeterminate else EXIT_CLEAN


def run_report(cfg: RunConfig) -> Tuple[int, Optional[CriterionReport]]:
    """
    Run the configured task and write its report

    Returns:
        (exit status, report); the report is None when the computation failed
    """
    params = criterion_params(cfg)
    task = Task(cfg.task)
    logger.info(f"task {task.value} on {cfg.space.label()}")
    try:
        report = TASKS[task](cfg, params)
    except LabError as e:
        logger.error(f"{task.value} failed in {type(e).__module__}: {e}")
        return EXIT_ERROR, None

    if cfg.output.path:
        try:
            write_report(report, cfg.output.path, cfg.output.format, cfg)
        except OSError as e:
            logger.error(f"cannot write report: {e}")
            return EXIT_ERROR, report
    return exit_status(report), report
