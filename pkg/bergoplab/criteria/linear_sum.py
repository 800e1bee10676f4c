"""
Linear combinations a C_phi + b C_psi

When neither C_phi nor C_psi lies in S_p, a C_phi + b C_psi lies in S_p
exactly when a + b = 0 and C_phi - C_psi lies in S_p. On H^2, for maps of
bounded valence, the same holds with compactness in place of S_p.
"""

from typing import Optional

from loguru import logger

from ..models.criteria import CriterionParams, CriterionReport, Verdict
from ..models.space import SpaceParams
from ..models.symbol import AnalyticSymbol, SymbolQuadruple
from ..operators.matrices import combo_matrix, wco_matrix
from ..operators.spectrum import classify_decay, schatten_norm, singular_values
from .common import cross_check, decay_verdict, echo_params, membership_verdict, provenance

UNIT = AnalyticSymbol.constant(1.0)


def evaluate_linear_sum(
    a: complex,
    b: complex,
    q4: SymbolQuadruple,
    p: float = 2.0,
    params: Optional[CriterionParams] = None,
) -> CriterionReport:
    """
    S_p reading of a C_{u,phi} + b C_{v,psi} against the difference

    The proposition applies to unweighted maps (u = v = 1) whose single
    composition operators are outside S_p; otherwise the report is a
    diagnostic and the cross-check is vacuous.
    """
    params = params or CriterionParams()
    a, b = complex(a), complex(b)
    hilbert = SpaceParams.bergman(params.sp.alpha)
    sum_vanishes = abs(a + b) < 1e-12
    unweighted = q4.u == UNIT and q4.v == UNIT

    report = CriterionReport(
        criterion="linear_sum",
        params=echo_params(params, a=[a.real, a.imag], b=[b.real, b.imag], schatten_p=p),
        provenance=provenance(params, unweighted=unweighted),
    )
    logger.info(f"linear sum ({a:g}) C_phi + ({b:g}) C_psi in S_{p:g}")

    combo = singular_values(combo_matrix((a, b), q4, hilbert, params.M))
    difference = singular_values(combo_matrix((1.0, -1.0), q4, hilbert, params.M))
    combo_fit, difference_fit = classify_decay(combo), classify_decay(difference)
    single_fits = [
        classify_decay(singular_values(wco_matrix(w, m, hilbert, hilbert, params.M)))
        for w, m in ((q4.u, q4.phi), (q4.v, q4.psi))
    ]

    combo_side = membership_verdict(combo_fit.in_schatten(p))
    difference_side = membership_verdict(difference_fit.in_schatten(p))
    singles_outside = all(fit.in_schatten(p) is False for fit in single_fits)

    report.add("combo:schatten_norm", schatten_norm(combo, p))
    report.add("combo:s1", combo.largest)
    report.add("difference:schatten_norm", schatten_norm(difference, p))
    report.add("a_plus_b", abs(a + b))
    report.verdicts["combo"] = combo_side
    report.verdicts["combo_compact"] = decay_verdict(combo_fit)
    report.verdicts["difference"] = difference_side
    report.provenance["decay"] = {
        "combo": combo_fit.kind.value,
        "difference": difference_fit.kind.value,
    }

    predicted = difference_side if sum_vanishes else Verdict.DIVERGENT
    applies = unweighted and singles_outside
    cross_check(
        report,
        "linear sum vs difference",
        {"combo": combo_side, "predicted": predicted},
        agree=None if applies else True,
        note="S_p on A^2_alpha" if applies else "hypothesis not met: diagnostic only",
    )

    if params.bounded_valence:
        hardy = SpaceParams.hardy()
        h2_combo, h2_difference = (
            decay_verdict(
                classify_decay(singular_values(combo_matrix(c, q4, hardy, params.M, hardy)))
            )
            for c in ((a, b), (1.0, -1.0))
        )
        h2_singles = [
            decay_verdict(classify_decay(singular_values(wco_matrix(w, m, hardy, hardy, params.M))))
            for w, m in ((q4.u, q4.phi), (q4.v, q4.psi))
        ]
        report.verdicts["h2_combo"] = h2_combo
        report.verdicts["h2_difference"] = h2_difference
        applies = unweighted and all(v == Verdict.BOUNDED for v in h2_singles)
        expected = h2_difference if sum_vanishes else Verdict.BOUNDED
        cross_check(
            report,
            "H^2 linear sum vs difference",
            {"combo": h2_combo, "predicted": expected},
            agree=None if applies else True,
            note="compactness on H^2, bounded valence asserted by the user"
            if applies
            else "hypothesis not met: diagnostic only",
        )
    report.add("bounded_valence", 1.0 if params.bounded_valence else 0.0, ["user-asserted"])
    return report
