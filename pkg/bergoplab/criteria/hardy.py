"""
Compactness of C_{u,phi} - C_psi on H^2

The difference is compact on H^2 exactly when C_{u',phi}: H^2 -> A^2_1 is
compact and C_{u phi',phi} - C_{psi',psi} is compact on A^2_1. Three
readings are assembled: the H^2 spectrum, the Hardy test-function profile
of C_{u',phi}, and the embedding criterion on A^2_1.
"""

from typing import Optional

from loguru import logger

from ..models.criteria import CriterionParams, CriterionReport, Verdict
from ..models.operator import OperatorSpec
from ..models.space import SpaceParams, TestFamily
from ..models.symbol import AnalyticSymbol
from ..operators.matrices import hardy_composition_matrix, hardy_to_bergman_matrix
from ..operators.profile import testfn_compactness_profile
from ..operators.spectrum import classify_decay, singular_values
from ..symbols.algebra import derivative, multiply
from ..symbols.validate import build_quadruple
from ..utils.concurrency import ordered_map
from .common import (
    cross_check,
    decay_verdict,
    echo_params,
    profile_order,
    provenance,
    trend_verdict,
)
from .embedding import evaluate_embedding_criterion


def evaluate_hardy_difference(
    u: AnalyticSymbol,
    phi: AnalyticSymbol,
    psi: AnalyticSymbol,
    params: Optional[CriterionParams] = None,
) -> CriterionReport:
    """
    Three-way compactness reading of C_{u,phi} - C_psi on H^2

    Sub-reports: (1) the H^2 matrix, (2) C_{u',phi}: H^2 -> A^2_1 on the
    normalized Hardy test functions g^{[i]}_{a,N,2}, (3) the embedding
    criterion for (u phi', psi', phi, psi) on A^2_1. Sides (2) and (3)
    jointly must match side (1).
    """
    params = params or CriterionParams()
    q4 = build_quadruple(u, AnalyticSymbol.constant(1.0), phi, psi, label="hardy difference")
    du = derivative(u)
    weighted = build_quadruple(
        multiply(u, derivative(phi)), derivative(psi), phi, psi, validate=False
    )
    bergman = SpaceParams.bergman(alpha=1.0, p=2.0, q=2.0)
    hardy = SpaceParams.hardy(2.0)

    report = CriterionReport(
        criterion="hardy_difference",
        params=echo_params(params, bounded_valence=params.bounded_valence),
        provenance=provenance(params),
    )
    logger.info("Hardy difference criterion: H^2 spectrum, C_(u',phi) profile, A^2_1 embedding")

    def h2_side() -> CriterionReport:
        sub = CriterionReport(criterion="hardy_matrix", provenance=provenance(params))
        matrix = hardy_composition_matrix(q4.u, q4.phi, q4.psi, params.M)
        spectrum = singular_values(matrix)
        fit = classify_decay(spectrum)
        sub.add("matrix:s1", spectrum.largest)
        sub.add("matrix:trailing_ratio", fit.trailing_ratio)
        sub.add("matrix:tail_estimate", matrix.tail_estimate)
        sub.provenance["decay"] = fit.kind.value
        sub.verdicts["difference"] = decay_verdict(fit)
        return sub

    def derivative_side() -> CriterionReport:
        sub = CriterionReport(criterion="hardy_derivative", provenance=provenance(params))
        derivative_q4 = build_quadruple(du, AnalyticSymbol.constant(0.0), phi, phi, validate=False)
        spec = OperatorSpec(quadruple=derivative_q4, a=1.0, b=0.0, source=hardy, target=bergman)
        profile = testfn_compactness_profile(
            spec,
            N=profile_order(TestFamily.HARDY_G, hardy, params.N),
            i_max=1,
            radii=params.radii,
            tol_vanish=params.tol_vanish,
        )
        fit = classify_decay(singular_values(hardy_to_bergman_matrix(du, phi, params.M)))
        sub.add("profile:max", profile.maximum, profile.flags)
        sub.add("profile:boundary", profile.values[-1] if profile.values else 0.0)
        sub.add("matrix:trailing_ratio", fit.trailing_ratio)
        sub.provenance["decay"] = fit.kind.value
        # bounded u' keeps C_{u',phi}: H^2 -> A^2_1 bounded
        profile_side = trend_verdict(profile.trend, bounded_a_priori=True)
        sub.verdicts["test_functions"] = profile_side
        sub.verdicts["matrix"] = decay_verdict(fit)
        cross_check(
            sub, "profile vs matrix", {"test_functions": profile_side, "matrix": decay_verdict(fit)}
        )
        sub.verdicts["difference"] = profile_side
        return sub

    def weighted_side() -> CriterionReport:
        return evaluate_embedding_criterion(
            weighted, params.model_copy(update={"sp": bergman, "beta": None, "N": None})
        )

    matrix_report, derivative_report, embedding_report = ordered_map(
        lambda job: job(), [h2_side, derivative_side, weighted_side]
    )
    report.sub_reports = [matrix_report, derivative_report, embedding_report]

    h2 = Verdict(matrix_report.verdicts["difference"])
    second = Verdict(derivative_report.verdicts["difference"])
    third = Verdict(embedding_report.verdicts["difference"])
    if Verdict.INDETERMINATE in (second, third):
        combined = Verdict.INDETERMINATE
    elif second == Verdict.COMPACT and third == Verdict.COMPACT:
        combined = Verdict.COMPACT
    else:
        combined = Verdict.BOUNDED
    report.verdicts["h2"] = h2
    report.verdicts["derivative_sides"] = combined

    cross_check(
        report,
        "H^2 spectrum vs derivative characterization",
        {"h2": h2, "derivative_sides": combined},
        note="compactness on H^2",
    )
    report.verdicts["difference"] = h2 if h2 == combined else Verdict.INDETERMINATE
    report.add("bounded_valence", 1.0 if params.bounded_valence else 0.0, ["user-asserted"])
    return report
