"""
Test-function boundary profiles
"""

import numpy as np
import pytest

from bergoplab.models import OperatorSpec, SpaceParams, Trend
from bergoplab.operators import classify_trend, testfn_compactness_profile
from bergoplab.symbols import build_quadruple
from bergoplab.utils.errors import ParameterError

from conftest import poly

RADII = [0.5, 0.7, 0.9, 0.95, 0.99]


def test_zero_difference_vanishes(zero_difference):
    profile = testfn_compactness_profile(OperatorSpec(quadruple=zero_difference), radii=RADII)
    assert profile.trend == Trend.VANISHING
    assert profile.maximum == 0.0
    assert len(profile.rows) == 2 * len(RADII)


def test_half_map_vanishes(half_map):
    profile = testfn_compactness_profile(OperatorSpec(quadruple=half_map), radii=RADII, i_max=0)
    assert profile.trend == Trend.VANISHING
    assert profile.values[-1] < profile.values[0]
    assert profile.decay_exponent == pytest.approx(1.0, abs=0.2)


def test_identity_does_not_vanish():
    q4 = build_quadruple(poly(1), poly(0), poly(0, 1), poly(0))
    profile = testfn_compactness_profile(
        OperatorSpec(quadruple=q4), radii=[0.3, 0.5, 0.7, 0.8, 0.9], i_max=0
    )
    assert profile.trend == Trend.BOUNDED
    assert np.allclose(profile.values, 1.0, rtol=1e-3)


def test_hardy_half_map_vanishes(half_map):
    hardy = SpaceParams.hardy()
    profile = testfn_compactness_profile(
        OperatorSpec(quadruple=half_map, source=hardy), N=2, radii=RADII, i_max=0
    )
    assert profile.trend == Trend.VANISHING


@pytest.mark.parametrize("radii", [[0.5, 0.5, 0.9], [0.5, 1.0], [0.0, 0.5]])
def test_radii_must_increase_inside_the_disk(half_map, radii):
    with pytest.raises(ParameterError):
        testfn_compactness_profile(OperatorSpec(quadruple=half_map), radii=radii)


def test_trend_readings():
    radii = [0.5, 0.7, 0.9, 0.95, 0.99]
    decaying = [1.0 - r * r for r in radii]
    assert classify_trend(radii, decaying)[0] == Trend.VANISHING
    assert classify_trend(radii, [1.0] * 5)[0] == Trend.BOUNDED
    assert classify_trend(radii, [1.0, 2.0, 4.0, 8.0, 16.0])[0] == Trend.GROWING
    assert classify_trend(radii, [0.0] * 5)[0] == Trend.VANISHING


def test_profile_ending_at_zero_after_a_late_peak_vanishes():
    # sigma measure of phi = 0.8 z: supported in |w| <= 0.8, peaks just inside
    radii = [0.3, 0.5, 0.7, 0.8, 0.9, 0.95, 0.97, 0.99]
    values = [0.0016, 0.004, 0.009, 0.013, 0.018, 0.0229, 0.0003, 0.0]
    assert classify_trend(radii, values)[0] == Trend.VANISHING


def test_late_drop_readings():
    radii = [0.3, 0.5, 0.7, 0.9, 0.95, 0.99]
    assert classify_trend(radii, [1.0, 1.0, 1.0, 1.0, 0.005, 0.002])[0] == Trend.VANISHING
    # a single small value at the last radius is not enough
    assert classify_trend(radii, [1.0, 1.0, 1.0, 1.0, 1.0, 0.001])[0] == Trend.BOUNDED


def test_profile_entry_point_is_not_collected():
    assert testfn_compactness_profile.__test__ is False
