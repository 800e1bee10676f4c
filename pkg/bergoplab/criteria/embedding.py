"""
Carleson-measure criteria for boundedness and compactness

For p <= q the difference C_{u,phi} - C_{v,psi}: A^p_alpha -> A^q_alpha is
bounded (compact) exactly when the four measures omega_phi_u, omega_psi_v,
sigma_phi, sigma_psi are (vanishing) (p,q)-Bergman Carleson measures, and
exactly when the normalized test functions f^{[i]}_{a,N,p}, i = 0, 1, have
bounded (vanishing) images. For q < p boundedness and compactness coincide
and are read from the L^{p/(p-q)}(dA_alpha) norms of the averaging
functions.
"""

from typing import Optional

from loguru import logger

from ..carleson.averaging import carleson_statistics
from ..carleson.measures import check_beta, criterion_measures, default_beta
from ..models.criteria import CriterionParams, CriterionReport, Verdict
from ..models.operator import OperatorSpec, Trend
from ..models.space import SpaceParams, TestFamily
from ..models.symbol import SymbolQuadruple
from ..operators.profile import testfn_compactness_profile
from ..utils.concurrency import ordered_map
from ..utils.errors import ParameterError
from .common import (
    agreed,
    combine_trends,
    cross_check,
    echo_params,
    joint,
    profile_order,
    provenance,
    require_average_range,
    require_embedding_range,
    tail_verdict,
    trend_verdict,
)


def _bergman(sp: SpaceParams) -> None:
    if sp.is_hardy:
        raise ParameterError("Carleson criteria act on weighted Bergman spaces")


def difference_spec(q4: SymbolQuadruple, sp: SpaceParams) -> OperatorSpec:
    return OperatorSpec(
        quadruple=q4,
        a=1.0,
        b=-1.0,
        source=SpaceParams.bergman(sp.alpha, sp.p),
        target=SpaceParams.bergman(sp.alpha, sp.target_exponent),
    )


def evaluate_embedding_criterion(
    q4: SymbolQuadruple, params: Optional[CriterionParams] = None
) -> CriterionReport:
    """
    Boundedness and compactness of C_{u,phi} - C_{v,psi}: A^p_alpha -> A^q_alpha, p <= q

    Measure side: carleson_statistics of the four measures with t = q/p.
    Test-function side: the compactness profile over i = 0, 1. Both sides
    must give the same verdict.
    """
    params = params or CriterionParams()
    sp = params.sp
    _bergman(sp)
    require_embedding_range(sp)
    q = sp.target_exponent
    beta = params.beta if params.beta is not None else default_beta("embedding", sp, params.N)
    check_beta("embedding", sp, beta)
    N = profile_order(TestFamily.BERGMAN_F, sp, params.N)
    # bounded weights make every C_{u,phi} bounded A^p_alpha -> A^p_alpha
    bounded_a_priori = q <= sp.p

    report = CriterionReport(
        criterion="embedding",
        params=echo_params(params, beta=beta, N=N),
        provenance=provenance(params, t=q / sp.p, bounded_a_priori=bounded_a_priori),
    )
    logger.info(f"embedding criterion {q4.label or ''}: {sp.label()} -> q={q:g}, beta={beta:g}")

    measures = criterion_measures(q4, sp.alpha, q, beta)
    jobs = [
        lambda mu=mu: carleson_statistics(
            mu, sp, params.r, params.radii, tol_vanish=params.tol_vanish, tol_tail=params.tol_tail
        )
        for mu in measures
    ]
    jobs.append(
        lambda: testfn_compactness_profile(
            difference_spec(q4, sp), N=N, i_max=1, radii=params.radii, tol_vanish=params.tol_vanish
        )
    )
    *stats, profile = ordered_map(lambda job: job(), jobs)

    flagged = False
    for item in stats:
        name = item.label.value
        report.add(f"{name}:sup", item.sup_value, item.flags)
        report.add(f"{name}:lattice_sup", item.lattice_sup)
        report.add(f"{name}:boundary", item.profile[-1][1] if item.profile else 0.0)
        flagged = flagged or bool(item.flags)
    report.add("profile:max", profile.maximum, profile.flags)
    report.add("profile:boundary", profile.values[-1] if profile.values else 0.0)
    report.add("profile:decay_exponent", profile.decay_exponent)

    measure_side = combine_trends([item.trend for item in stats], bounded_a_priori)
    if flagged:
        measure_side = Verdict.INDETERMINATE
    profile_side = trend_verdict(profile.trend, bounded_a_priori)
    report.verdicts["measures"] = measure_side
    report.verdicts["test_functions"] = profile_side

    cross_check(
        report,
        "carleson measures vs test functions",
        {"measures": measure_side, "test_functions": profile_side},
        note="equivalent characterizations for p <= q",
    )
    agreed(report, "difference", measure_side, profile_side)
    return report


def evaluate_lp_average_criterion(
    q4: SymbolQuadruple, params: Optional[CriterionParams] = None
) -> CriterionReport:
    """
    C_{u,phi} - C_{v,psi}: A^p_alpha -> A^q_alpha for q < p

    Bounded, compact, and M_r of all four measures in L^{p/(p-q)}(dA_alpha)
    are equivalent. The test-function profile gives a one-sided check: a
    compact difference cannot produce a growing profile.
    """
    params = params or CriterionParams()
    sp = params.sp
    _bergman(sp)
    require_average_range(sp)
    p, q = sp.p, sp.target_exponent
    beta = params.beta if params.beta is not None else default_beta("lp_average", sp, params.N)
    check_beta("lp_average", sp, beta)
    N = profile_order(TestFamily.BERGMAN_F, sp, params.N)
    s = p / (p - q)

    report = CriterionReport(
        criterion="lp_average",
        params=echo_params(params, beta=beta, N=N),
        provenance=provenance(params, exponent=s),
    )
    logger.info(f"averaging criterion {q4.label or ''}: {sp.label()} -> q={q:g}, L^{s:g}(dA_alpha)")

    measures = criterion_measures(q4, sp.alpha, q, beta)
    jobs = [
        lambda mu=mu: carleson_statistics(
            mu, sp, params.r, params.radii, tol_vanish=params.tol_vanish, tol_tail=params.tol_tail
        )
        for mu in measures
    ]
    jobs.append(
        lambda: testfn_compactness_profile(
            difference_spec(q4, sp), N=N, i_max=1, radii=params.radii, tol_vanish=params.tol_vanish
        )
    )
    *stats, profile = ordered_map(lambda job: job(), jobs)

    readings = []
    for item in stats:
        name = item.label.value
        report.add(f"{name}:lp_norm", item.lp_norm, item.flags)
        report.add(f"{name}:lp_tail", item.lp_tail)
        readings.append(tail_verdict(item.lp_tail, params.tol_tail))
    report.add("profile:max", profile.maximum, profile.flags)
    report.add("profile:boundary", profile.values[-1] if profile.values else 0.0)

    finite = joint(readings)
    measure_side = {
        Verdict.FINITE: Verdict.COMPACT,
        Verdict.DIVERGENT: Verdict.UNBOUNDED,
    }.get(finite, Verdict.INDETERMINATE)
    report.verdicts["measures"] = finite
    report.verdicts["difference"] = measure_side

    growing = Trend(profile.trend) == Trend.GROWING
    cross_check(
        report,
        "averaging norms vs test functions",
        {"measures": measure_side, "test_functions": trend_verdict(profile.trend)},
        agree=not (measure_side == Verdict.COMPACT and growing),
        note="one-sided: a compact difference has a non-growing profile",
    )
    return report
