"""
Criterion evaluators and the shipped battery
"""

import pytest

from bergoplab.criteria import (
    atom_image_norm,
    bergman_battery,
    evaluate_atomic_criterion,
    evaluate_embedding_criterion,
    evaluate_hardy_difference,
    evaluate_linear_sum,
    evaluate_lp_average_criterion,
    evaluate_schatten_criterion,
    hardy_battery,
    run_battery,
    run_hardy_battery,
)
from bergoplab.criteria.common import combine_trends, joint, profile_order, trend_verdict
from bergoplab.models import CriterionParams, SpaceParams, TestFamily, Trend, Verdict
from bergoplab.symbols import build_quadruple
from bergoplab.utils.errors import ParameterError

from conftest import poly

# the last three radii lie beyond the support of measures pushed into |w| <= 1/2
COMPACT_RADII = [0.3, 0.5, 0.7, 0.95, 0.97, 0.99]


@pytest.fixture
def compact_params(fast_params) -> CriterionParams:
    return fast_params.model_copy(update={"radii": COMPACT_RADII})


def test_trend_readings():
    assert trend_verdict(Trend.VANISHING) == Verdict.COMPACT
    assert trend_verdict(Trend.BOUNDED) == Verdict.BOUNDED
    assert trend_verdict(Trend.GROWING) == Verdict.UNBOUNDED
    assert trend_verdict(Trend.GROWING, bounded_a_priori=True) == Verdict.BOUNDED
    assert combine_trends([Trend.VANISHING, Trend.VANISHING]) == Verdict.COMPACT
    assert combine_trends([Trend.VANISHING, Trend.BOUNDED]) == Verdict.BOUNDED
    assert joint([Verdict.FINITE, Verdict.INDETERMINATE]) == Verdict.INDETERMINATE
    assert joint([Verdict.FINITE, Verdict.DIVERGENT, Verdict.INDETERMINATE]) == Verdict.DIVERGENT


def test_profile_order_is_one_above_the_minimum():
    sp = SpaceParams.bergman(0.0, 2.0)
    assert profile_order(TestFamily.BERGMAN_F, sp) == 3
    assert profile_order(TestFamily.BERGMAN_F, sp, N=5) == 5


def test_embedding_of_the_zero_difference(zero_difference, compact_params):
    report = evaluate_embedding_criterion(zero_difference, compact_params)
    assert report.verdicts["difference"] == Verdict.COMPACT.value
    assert report.coherent
    assert not report.indeterminate


@pytest.mark.slow
def test_embedding_of_the_half_map(half_map, compact_params):
    report = evaluate_embedding_criterion(half_map, compact_params)
    assert report.verdicts["measures"] == Verdict.COMPACT.value
    assert report.verdicts["test_functions"] == Verdict.COMPACT.value
    assert report.verdicts["difference"] == Verdict.COMPACT.value
    assert report.coherent


@pytest.mark.parametrize(
    "evaluate, sp, message",
    [
        (evaluate_embedding_criterion, SpaceParams.bergman(0.0, 4.0, 2.0), "0<p<=q<inf"),
        (evaluate_lp_average_criterion, SpaceParams.bergman(0.0, 2.0, 4.0), "0<q<p<inf"),
        (evaluate_lp_average_criterion, SpaceParams.bergman(0.0, 2.0, 2.0), "0<q<p<inf"),
        (evaluate_atomic_criterion, SpaceParams.bergman(0.0, 2.0, 2.0), "0<q<p<inf"),
    ],
)
def test_exponent_ranges(half_map, evaluate, sp, message):
    with pytest.raises(ParameterError, match=message):
        evaluate(half_map, CriterionParams(sp=sp))


def test_embedding_beta_hypothesis(half_map):
    params = CriterionParams(sp=SpaceParams.bergman(0.0, 2.0, 2.0), beta=1.0)
    with pytest.raises(ParameterError, match="beta must exceed"):
        evaluate_embedding_criterion(half_map, params)


def test_schatten_of_the_half_map(half_map, compact_params):
    report = evaluate_schatten_criterion(half_map, 2.0, compact_params)
    assert report.quantity("hs:frobenius_sq") == pytest.approx(4.0 / 3.0, rel=1e-10)
    assert report.quantity("hs:integral") == pytest.approx(4.0 / 3.0, abs=1e-3)
    assert report.quantity("rkt[0]") == pytest.approx(4.0 / 3.0, rel=1e-3)
    assert report.verdicts["matrix"] == Verdict.FINITE.value
    assert report.verdicts["hs"] == Verdict.FINITE.value
    assert report.verdicts["difference"] == Verdict.FINITE.value
    assert report.coherent


@pytest.mark.slow
def test_schatten_below_two_is_sufficient_only(half_map, compact_params):
    report = evaluate_schatten_criterion(half_map, 1.0, compact_params)
    assert report.verdicts["matrix"] == Verdict.FINITE.value
    assert report.verdicts["difference"] == Verdict.FINITE.value
    assert any("sufficient" in check.note for check in report.cross_checks)


def test_schatten_exponent_must_be_positive(half_map):
    with pytest.raises(ParameterError):
        evaluate_schatten_criterion(half_map, 0.0)


def test_lp_average_of_the_half_map(half_map, compact_params):
    params = compact_params.model_copy(update={"sp": SpaceParams.bergman(0.0, 4.0, 2.0)})
    report = evaluate_lp_average_criterion(half_map, params)
    assert report.verdicts["measures"] == Verdict.FINITE.value
    assert report.verdicts["difference"] == Verdict.COMPACT.value


@pytest.mark.slow
def test_atomic_test_is_deterministic(half_map, compact_params):
    params = compact_params.model_copy(update={"sp": SpaceParams.bergman(0.0, 4.0, 2.0)})
    first = evaluate_atomic_criterion(half_map, params, trials=[10, 40])
    second = evaluate_atomic_criterion(half_map, params, trials=[10, 40])
    assert first.quantity("ratio:max[40]") == second.quantity("ratio:max[40]")
    assert first.verdicts["difference"] == Verdict.COMPACT.value


def test_linear_sum_of_identities(fast_params):
    identity = build_quadruple(poly(1), poly(1), poly(0, 1), poly(0, 1))
    report = evaluate_linear_sum(1.0, 1.0, identity, 2.0, fast_params)
    # 2 I is outside S_2 while the difference vanishes
    assert report.verdicts["combo"] == Verdict.DIVERGENT.value
    assert report.verdicts["difference"] == Verdict.FINITE.value
    assert report.quantity("combo:s1") == pytest.approx(2.0)
    assert report.coherent

    cancelled = evaluate_linear_sum(1.0, -1.0, identity, 2.0, fast_params)
    assert cancelled.verdicts["combo"] == Verdict.FINITE.value
    assert cancelled.coherent


def test_linear_sum_identity_plus_square(fast_params):
    q4 = build_quadruple(poly(1), poly(1), poly(0, 1), poly(0, 0, 1))
    report = evaluate_linear_sum(1.0, 1.0, q4, 2.0, fast_params)
    assert report.verdicts["combo"] == Verdict.DIVERGENT.value
    assert report.verdicts["difference"] == Verdict.DIVERGENT.value
    assert report.coherent


def test_linear_sum_outside_the_hypothesis_is_diagnostic(half_map, fast_params):
    report = evaluate_linear_sum(1.0, 1.0, half_map, 2.0, fast_params)
    check = report.cross_checks[0]
    assert check.agree
    assert check.note == "hypothesis not met: diagnostic only"


def test_linear_sum_on_the_hardy_space(fast_params):
    q4 = build_quadruple(poly(1), poly(1), poly(0, 1), poly(0, 0, 1))
    params = fast_params.model_copy(update={"bounded_valence": True})
    report = evaluate_linear_sum(1.0, 1.0, q4, 2.0, params)
    assert report.verdicts["h2_combo"] == Verdict.BOUNDED.value
    assert "user-asserted" in report.quantities[-1].flags


def test_hardy_difference_of_equal_symbols(compact_params):
    report = evaluate_hardy_difference(poly(1), poly(0, 0.5), poly(0, 0.5), compact_params)
    assert report.verdicts["h2"] == Verdict.COMPACT.value
    assert report.verdicts["derivative_sides"] == Verdict.COMPACT.value
    assert report.verdicts["difference"] == Verdict.COMPACT.value
    assert len(report.sub_reports) == 3
    assert report.coherent


def test_battery_composition():
    cases = bergman_battery()
    assert len(cases) == 18
    assert sum(case.sp.target_exponent < case.sp.p for case in cases) == 4
    assert len({case.name for case in cases}) == len(cases)
    assert {Verdict(case.expected) for case in cases} == {
        Verdict.COMPACT,
        Verdict.BOUNDED,
        Verdict.UNBOUNDED,
    }
    assert all(case.sp.is_hardy for case in hardy_battery())


@pytest.mark.slow
def test_embedding_battery_matches_known_verdicts():
    cases = [case for case in bergman_battery() if case.sp.p <= case.sp.target_exponent]
    reports = run_battery(cases, evaluate_embedding_criterion)
    for case, report in zip(cases, reports):
        assert report.params["case"] == case.name
        assert report.coherent, case.name
        assert report.verdicts["difference"] == case.expected, case.name


@pytest.mark.slow
def test_averaging_battery_matches_known_verdicts():
    cases = [case for case in bergman_battery() if case.sp.target_exponent < case.sp.p]
    for case, report in zip(cases, run_battery(cases, evaluate_lp_average_criterion)):
        assert report.params["case"] == case.name
        assert report.verdicts["measures"] == Verdict.FINITE.value, case.name
        assert report.verdicts["difference"] == case.expected, case.name
        assert report.coherent, case.name


def test_battery_passes_each_case_space_to_the_schatten_criterion(compact_params):
    cases = [case for case in bergman_battery() if case.name == "single-half"]
    (report,) = run_battery(cases, evaluate_schatten_criterion, compact_params)
    assert report.criterion == "schatten"
    assert report.params["case"] == "single-half"
    assert report.verdicts["matrix"] == Verdict.FINITE.value


@pytest.mark.slow
def test_schatten_battery_matches_known_verdicts():
    cases = [case for case in bergman_battery() if case.sp.target_exponent == case.sp.p]
    for case, report in zip(cases, run_battery(cases, evaluate_schatten_criterion)):
        assert report.verdicts["matrix"] == case.expected_schatten.value, case.name


@pytest.mark.slow
def test_hardy_battery_matches_known_verdicts():
    cases = hardy_battery()
    for case, report in zip(cases, run_hardy_battery(cases)):
        assert report.verdicts["h2"] == case.expected, case.name
        assert report.coherent, case.name


@pytest.mark.slow
def test_battery_is_deterministic():
    cases = bergman_battery()[:3]
    first = run_battery(cases, evaluate_schatten_criterion)
    second = run_battery(cases, evaluate_schatten_criterion, threads=2)
    assert [r.model_dump_json() for r in first] == [r.model_dump_json() for r in second]


@pytest.mark.parametrize("i, expected", [(0, 1.0), (1, 0.5 * 0.5**0.5)])
def test_atom_image_of_a_centered_atom(half_map, i, expected):
    # the atom at a = 0 is z^i and C_{z/2} z^i = (z/2)^i
    value = atom_image_norm(half_map, SpaceParams.bergman(0.0), [0j], [1.0], i=i)
    assert value == pytest.approx(expected, rel=1e-10)


def test_atom_image_norm_is_homogeneous(half_map):
    sp = SpaceParams.bergman(0.0)
    centers = [0.3, -0.3j, 0.6]
    once = atom_image_norm(half_map, sp, centers, [1.0, -1.0, 0.5])
    twice = atom_image_norm(half_map, sp, centers, [-2.0, 2.0, -1.0])
    assert once > 0.0
    assert twice == pytest.approx(2.0 * once, rel=1e-12)
    assert atom_image_norm(half_map, sp, centers, [0.0, 0.0, 0.0]) == 0.0
    with pytest.raises(ParameterError, match="one coefficient per lattice point"):
        atom_image_norm(half_map, sp, centers, [1.0])
