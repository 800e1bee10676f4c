"""
Schatten-class criterion on A^2_alpha

C_{u,phi} - C_{v,psi} lies in S_p when M_r of the four measures (beta >=
2(alpha+2), q = 2) belongs to L^{p/2}(d lambda); for p >= 2 the condition
is also necessary, and equivalent to the reproducing-kernel integrals
int ||D k_z^{[n]}||^p d lambda being finite. The truncated matrix gives an
independent reading, and at p = 2 so does the Hilbert-Schmidt integral.
"""

from typing import Optional

from loguru import logger

from ..carleson.averaging import carleson_statistics
from ..carleson.berezin import rkt_integral
from ..carleson.measures import check_beta, criterion_measures, default_beta
from ..models.criteria import CriterionParams, CriterionReport, Verdict
from ..models.operator import OperatorSpec, TruncatedOperator
from ..models.space import SpaceParams
from ..models.symbol import SymbolQuadruple
from ..operators.hs import hs_condition_integrals, hs_integral, hs_region_split
from ..operators.matrices import combo_matrix
from ..operators.spectrum import classify_decay, schatten_norm, singular_values
from ..quadrature.grid import build_grid
from ..utils.concurrency import ordered_map
from ..utils.config import config
from ..utils.errors import ParameterError
from .common import (
    agreed,
    cross_check,
    echo_params,
    joint,
    membership_verdict,
    provenance,
    tail_verdict,
)


def _hilbert_schmidt(
    report: CriterionReport,
    q4: SymbolQuadruple,
    params: CriterionParams,
    matrix: TruncatedOperator,
    matrix_side: Verdict,
) -> None:
    alpha = params.sp.alpha
    grid = build_grid(alpha, params.radial_count, params.angular_count)
    integral = hs_integral(q4, alpha, grid)
    hs_value = max(integral.real, 0.0)
    hs_side = tail_verdict(integral.tail_fraction, params.tol_tail)
    report.add("hs:integral", hs_value, ["tail"] if hs_side == Verdict.DIVERGENT else [])
    report.add("hs:tail", integral.tail_fraction)
    report.add("hs:frobenius_sq", matrix.frobenius_sq)
    report.verdicts["hs"] = hs_side

    readings = []
    for name, result in hs_condition_integrals(q4, alpha, grid).items():
        report.add(f"hs:{name}", result.real)
        readings.append(tail_verdict(result.tail_fraction, params.tol_tail))
    conditions = joint(readings)
    report.verdicts["hs_conditions"] = conditions

    inside, outside = hs_region_split(q4, alpha, grid=grid)
    report.add("hs:G_delta", inside.real)
    report.add("hs:complement", outside.real)

    if hs_side == Verdict.FINITE and matrix_side == Verdict.FINITE:
        tolerance = float(config.get("criteria", "hs_tolerance", default=1e-3))
        gap = abs(hs_value - matrix.frobenius_sq) / max(matrix.frobenius_sq, 1e-12)
        report.add("hs:relative_gap", gap)
        cross_check(
            report,
            "hilbert-schmidt integral vs matrix",
            {"integral": hs_side, "matrix": matrix_side},
            agree=gap < tolerance,
            note=f"relative gap {gap:.3g}",
        )
    else:
        cross_check(
            report,
            "hilbert-schmidt integral vs matrix",
            {"integral": hs_side, "matrix": matrix_side},
        )
    cross_check(
        report,
        "hilbert-schmidt conditions vs integral",
        {"conditions": conditions, "integral": hs_side},
    )


def evaluate_schatten_criterion(
    q4: SymbolQuadruple, p: Optional[float] = None, params: Optional[CriterionParams] = None
) -> CriterionReport:
    """
    S_p membership of C_{u,phi} - C_{v,psi} on A^2_alpha

    Args:
        q4: the symbols
        p: Schatten exponent, defaults to params.sp.p
        params: numerics; only alpha is taken from params.sp

    Returns:
        CriterionReport with measure, reproducing-kernel, matrix and (p = 2)
        Hilbert-Schmidt readings and their cross-checks
    """
    params = params or CriterionParams()
    p = params.sp.p if p is None else float(p)
    if not p > 0:
        raise ParameterError(f"Schatten exponent must be positive, got p = {p}")
    alpha = params.sp.alpha
    hilbert = SpaceParams.bergman(alpha)
    beta = params.beta if params.beta is not None else default_beta("schatten", hilbert)
    check_beta("schatten", hilbert, beta)
    necessary = p >= 2.0

    report = CriterionReport(
        criterion="schatten",
        params=echo_params(params, beta=beta, schatten_p=p),
        provenance=provenance(params, lambda_exponent=p / 2.0, necessity=necessary),
    )
    logger.info(f"Schatten criterion {q4.label or ''}: S_{p:g}(A^2_{alpha:g}), beta={beta:g}")

    spec = OperatorSpec(quadruple=q4, a=1.0, b=-1.0, source=hilbert)
    measures = criterion_measures(q4, alpha, 2.0, beta)
    jobs = [
        lambda mu=mu: carleson_statistics(
            mu, hilbert, params.r, params.radii, lambda_exponent=p / 2.0, tol_tail=params.tol_tail
        )
        for mu in measures
    ]
    jobs += [lambda n=n: rkt_integral(spec, p, n, tol_tail=params.tol_tail) for n in (0, 1)]
    *stats, rkt0, rkt1 = ordered_map(lambda job: job(), jobs)

    readings = []
    for item in stats:
        name = item.label.value
        report.add(f"{name}:lambda_norm", item.ls_lambda_norm, item.flags)
        report.add(f"{name}:lambda_tail", item.lambda_tail)
        readings.append(tail_verdict(item.lambda_tail, params.tol_tail))
    measure_side = joint(readings)
    report.verdicts["measures"] = measure_side

    for n, rkt in ((0, rkt0), (1, rkt1)):
        report.add(f"rkt[{n}]", rkt.value, [] if rkt.finite else ["lambda-tail"])
        report.add(f"rkt[{n}]:tail", rkt.tail_fraction)
        report.verdicts[f"rkt_n{n}"] = Verdict(rkt.verdict)

    matrix = combo_matrix((1.0, -1.0), q4, hilbert, params.M)
    spectrum = singular_values(matrix)
    fit = classify_decay(spectrum)
    matrix_side = membership_verdict(fit.in_schatten(p))
    report.add("matrix:schatten_norm", schatten_norm(spectrum, p))
    report.add("matrix:s1", spectrum.largest)
    report.add("matrix:tail_estimate", matrix.tail_estimate)
    report.add("matrix:decay_exponent", fit.exponent)
    report.add("matrix:decay_rate", fit.rate)
    report.verdicts["matrix"] = matrix_side
    report.provenance["decay"] = fit.kind.value

    lhs = rkt0.value ** (1.0 / p)
    rhs = report.quantity("matrix:schatten_norm")
    report.add("berezin:ratio", lhs / rhs if rhs > 0 else 0.0)

    if necessary:
        cross_check(report, "measures vs matrix", {"measures": measure_side, "matrix": matrix_side})
        for n in (0, 1):
            cross_check(
                report,
                f"reproducing kernels (n={n}) vs matrix",
                {"rkt": report.verdicts[f"rkt_n{n}"], "matrix": matrix_side},
            )
        agreed(report, "difference", measure_side, matrix_side)
    else:
        cross_check(
            report,
            "measures vs matrix",
            {"measures": measure_side, "matrix": matrix_side},
            agree=not (measure_side == Verdict.FINITE and matrix_side == Verdict.DIVERGENT),
            note="sufficient-only for p < 2",
        )
        report.verdicts["difference"] = (
            Verdict.FINITE if measure_side == Verdict.FINITE else matrix_side
        )

    if p == 2.0:
        _hilbert_schmidt(report, q4, params, matrix, matrix_side)
    return report
