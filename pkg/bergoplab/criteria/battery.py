"""
Shipped example battery

Zero, compact, bounded non-compact and unbounded differences with known
answers, shared by the CLI and the regression tests.
"""

from typing import Callable, List, Optional

from loguru import logger

from ..models.criteria import BatteryCase, CriterionParams, CriterionReport, Verdict
from ..models.space import SpaceParams
from ..models.symbol import AnalyticSymbol
from ..symbols.validate import build_quadruple
from ..utils.concurrency import ordered_map
from .hardy import evaluate_hardy_difference

Evaluator = Callable[..., CriterionReport]


def _poly(*coefficients: complex) -> AnalyticSymbol:
    return AnalyticSymbol.poly(coefficients)


ONE = _poly(1)
ZERO = _poly(0)
Z = _poly(0, 1)


def _case(
    name: str,
    u: AnalyticSymbol,
    v: AnalyticSymbol,
    phi: AnalyticSymbol,
    psi: AnalyticSymbol,
    expected: Verdict,
    sp: Optional[SpaceParams] = None,
) -> BatteryCase:
    return BatteryCase(
        name=name,
        quadruple=build_quadruple(u, v, phi, psi, label=name),
        sp=sp or SpaceParams.bergman(),
        expected=expected,
    )


def bergman_battery() -> List[BatteryCase]:
    """
    Quadruples on A^2 (p = q = 2, alpha = 0) unless a case says otherwise

    The A^4 -> A^2 cases have q < p, where bounded and compact coincide.
    """
    half, third = _poly(0, 0.5), _poly(0, 1 / 3)
    shrink = SpaceParams.bergman(alpha=0.0, p=4.0, q=2.0)
    return [
        _case("zero-half", ONE, ONE, half, half, Verdict.COMPACT),
        _case("zero-identity", ONE, ONE, Z, Z, Verdict.COMPACT),
        _case("half-minus-third", ONE, ONE, half, third, Verdict.COMPACT),
        _case("single-half", ONE, ZERO, half, half, Verdict.COMPACT),
        _case("weights-half", ONE, Z, half, half, Verdict.COMPACT),
        _case("half-minus-square", ONE, ONE, half, _poly(0, 0, 0.5), Verdict.COMPACT),
        _case("scaled-half-third", _poly(2), _poly(2), half, third, Verdict.COMPACT),
        _case("weighted-0.8", _poly(1, 0.2), ONE, _poly(0, 0.8), _poly(0, 0, 0.8), Verdict.COMPACT),
        _case("identity-minus-reflection", ONE, ONE, Z, _poly(0, -1), Verdict.BOUNDED),
        _case("identity-minus-contraction", ONE, ONE, Z, _poly(0, 0.99), Verdict.BOUNDED),
        _case("identity-minus-multiplier", ONE, Z, Z, Z, Verdict.BOUNDED),
        _case("identity", ONE, ZERO, Z, Z, Verdict.BOUNDED),
        _case("identity-minus-rotation", ONE, ONE, Z, _poly(0, 1j), Verdict.BOUNDED),
        _case(
            "identity-2-to-4",
            ONE,
            ZERO,
            Z,
            Z,
            Verdict.UNBOUNDED,
            sp=SpaceParams.bergman(alpha=0.0, p=2.0, q=4.0),
        ),
        _case("single-half-4-to-2", ONE, ZERO, half, half, Verdict.COMPACT, shrink),
        _case("half-minus-third-4-to-2", ONE, ONE, half, third, Verdict.COMPACT, shrink),
        _case("identity-4-to-2", ONE, ZERO, Z, Z, Verdict.COMPACT, shrink),
        _case("identity-minus-rotation-4-to-2", ONE, ONE, Z, _poly(0, 1j), Verdict.COMPACT, shrink),
    ]


def hardy_battery() -> List[BatteryCase]:
    """C_{u,phi} - C_psi on H^2; v is fixed to 1"""
    half, third = _poly(0, 0.5), _poly(0, 1 / 3)
    hardy = SpaceParams.hardy()
    return [
        _case("hardy-zero-half", ONE, ONE, half, half, Verdict.COMPACT, hardy),
        _case("hardy-half-third", ONE, ONE, half, third, Verdict.COMPACT, hardy),
        _case("hardy-zero-identity", ONE, ONE, Z, Z, Verdict.COMPACT, hardy),
        _case("hardy-identity-reflection", ONE, ONE, Z, _poly(0, -1), Verdict.BOUNDED, hardy),
        _case("hardy-weighted-half", Z, ONE, half, half, Verdict.COMPACT, hardy),
        _case("hardy-identity-half", ONE, ONE, Z, half, Verdict.BOUNDED, hardy),
        _case("hardy-multiplier", _poly(1, 0.5), ONE, Z, Z, Verdict.BOUNDED, hardy),
    ]


def run_battery(
    cases: List[BatteryCase],
    evaluate: Evaluator,
    params: Optional[CriterionParams] = None,
    threads: Optional[int] = None,
) -> List[CriterionReport]:
    """
    Evaluate every case with its own (alpha, p, q); reports come back in case order
    """
    params = params or CriterionParams()
    logger.info(f"running battery of {len(cases)} cases with {evaluate.__name__}")

    def run(case: BatteryCase) -> CriterionReport:
        report = evaluate(case.quadruple, params=params.model_copy(update={"sp": case.sp}))
        report.params["case"] = case.name
        return report

    return ordered_map(run, cases, threads)


def run_hardy_battery(
    cases: Optional[List[BatteryCase]] = None,
    params: Optional[CriterionParams] = None,
    threads: Optional[int] = None,
) -> List[CriterionReport]:
    cases = hardy_battery() if cases is None else cases
    params = params or CriterionParams()

    def run(case: BatteryCase) -> CriterionReport:
        q4 = case.quadruple
        report = evaluate_hardy_difference(q4.u, q4.phi, q4.psi, params)
        report.params["case"] = case.name
        return report

    return ordered_map(run, cases, threads)
