"""
Shared pieces of the criterion evaluators

Hypothesis checks, readings of trends and spectra as verdicts, and the
provenance block echoed into every report.
"""

from typing import Any, Dict, Iterable, Optional

from ..models.criteria import CriterionParams, CriterionReport, CrossCheck, Verdict
from ..models.operator import DecayFit, Trend
from ..models.space import SpaceParams, TestFamily, default_order
from ..utils.config import config
from ..utils.errors import ParameterError


def require_embedding_range(sp: SpaceParams) -> None:
    if not sp.p <= sp.target_exponent:
        raise ParameterError(
            "the Carleson embedding criterion needs 0<p<=q<inf, "
            f"got p = {sp.p:g}, q = {sp.target_exponent:g}"
        )


def require_average_range(sp: SpaceParams) -> None:
    if not sp.target_exponent < sp.p:
        raise ParameterError(
            f"the averaging criterion needs 0<q<p<inf, got p = {sp.p:g}, q = {sp.target_exponent:g}"
        )


def profile_order(family: TestFamily, sp: SpaceParams, N: Optional[int] = None) -> int:
    """
    Test-function order of the profiles

    One above the smallest admissible order, so a compact operator shows a
    boundary decay of at least (1-|a|^2)^1.
    """
    return N if N is not None else default_order(family, sp) + 1


def trend_verdict(trend: Trend, bounded_a_priori: bool = False) -> Verdict:
    """
    vanishing -> compact, bounded -> bounded non-compact, growing -> unbounded

    Growth inside the sampled radii cannot outrun an a priori norm bound, so
    it reads as non-compact when one is available.
    """
    trend = Trend(trend)
    if trend == Trend.VANISHING:
        return Verdict.COMPACT
    if trend == Trend.GROWING and not bounded_a_priori:
        return Verdict.UNBOUNDED
    return Verdict.BOUNDED


def combine_trends(trends: Iterable[Trend], bounded_a_priori: bool = False) -> Verdict:
    """Joint reading of several measures: compact iff all vanish"""
    verdicts = [trend_verdict(t, bounded_a_priori) for t in trends]
    if not verdicts or all(v == Verdict.COMPACT for v in verdicts):
        return Verdict.COMPACT
    if Verdict.UNBOUNDED in verdicts:
        return Verdict.UNBOUNDED
    return Verdict.BOUNDED


def membership_verdict(member: Optional[bool]) -> Verdict:
    if member is None:
        return Verdict.INDETERMINATE
    return Verdict.FINITE if member else Verdict.DIVERGENT


def decay_verdict(fit: DecayFit) -> Verdict:
    """Compactness reading of a truncated spectrum"""
    return Verdict.COMPACT if fit.compact else Verdict.BOUNDED


def tail_verdict(tail: Optional[float], tol_tail: float) -> Verdict:
    if tail is None:
        return Verdict.INDETERMINATE
    return Verdict.FINITE if tail <= tol_tail else Verdict.DIVERGENT


def joint(verdicts: Iterable[Verdict]) -> Verdict:
    """Conjunction of finite / divergent readings"""
    verdicts = [Verdict(v) for v in verdicts]
    if Verdict.DIVERGENT in verdicts:
        return Verdict.DIVERGENT
    if Verdict.INDETERMINATE in verdicts:
        return Verdict.INDETERMINATE
    return Verdict.FINITE


def cross_check(
    report: CriterionReport,
    name: str,
    sides: Dict[str, Verdict],
    agree: Optional[bool] = None,
    note: str = "",
) -> bool:
    """
    Record a cross-check; sides agree when their verdicts coincide unless
    `agree` is given
    """
    values = {key: Verdict(value).value for key, value in sides.items()}
    if agree is None:
        agree = len(set(values.values())) <= 1
    report.cross_checks.append(CrossCheck(name=name, sides=values, agree=agree, note=note))
    return agree


def agreed(report: CriterionReport, name: str, first: Verdict, second: Verdict) -> Verdict:
    """A combined verdict: the common value, indeterminate on disagreement"""
    verdict = first if Verdict(first) == Verdict(second) else Verdict.INDETERMINATE
    report.verdicts[name] = verdict
    return verdict


def provenance(params: CriterionParams, **extra: Any) -> Dict[str, Any]:
    """Grid sizes, truncation and tolerance policy of an evaluation"""
    block: Dict[str, Any] = {
        "radial_count": params.radial_count,
        "angular_count": params.angular_count,
        "M": params.M,
        "guard": config.guard,
        "r": params.r,
        "radii": list(params.radii),
        "tol_vanish": params.tol_vanish,
        "tol_tail": params.tol_tail,
        "bracket_bound": params.bracket_bound,
        "seed": params.seed,
        "mask_grid": [
            int(config.get("carleson", "mask_radial_count", default=128)),
            int(config.get("carleson", "mask_angular_count", default=1024)),
        ],
        "lambda_grid": [
            int(config.get("carleson", "lambda_radial_count", default=40)),
            int(config.get("carleson", "lambda_angular_count", default=96)),
        ],
        "profile_angles": int(config.get("operators", "profile_angles", default=16)),
        "version": config.get("app", "version", default="0.1.0"),
    }
    block.update(extra)
    return block


def echo_params(params: CriterionParams, **resolved: Any) -> Dict[str, Any]:
    echoed = params.model_dump(mode="json")
    echoed.update(resolved)
    return echoed
