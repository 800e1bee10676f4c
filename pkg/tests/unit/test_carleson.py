"""
Pull-back measures, averaging functions, Berezin transforms, Toeplitz matrices
"""

import math

import numpy as np
import pytest

from bergoplab.carleson import (
    area_measure,
    averaged_measure,
    averaged_toeplitz_bound,
    averaging_function,
    averaging_values,
    berezin_schatten_bound,
    berezin_transform,
    bounded_density_battery,
    carleson_statistics,
    check_beta,
    criterion_measures,
    default_beta,
    omega_measure,
    pullback_integral,
    rkt_integral,
    toeplitz_coherence,
    toeplitz_matrix,
)
from bergoplab.models import MeasureLabel, OperatorSpec, SpaceParams, Trend
from bergoplab.operators import schatten_norm, singular_values
from bergoplab.quadrature import build_grid
from bergoplab.symbols import build_quadruple, scale
from bergoplab.utils.errors import ParameterError, SelfMapError

from conftest import poly

BOUNDARY_RADII = [0.3, 0.5, 0.7, 0.95, 0.97, 0.99]


@pytest.mark.parametrize("alpha", [0.0, 1.0, 2.5])
@pytest.mark.parametrize("r", [0.5, 1.0])
def test_averaging_function_at_the_origin(alpha, r):
    value = averaging_function(area_measure(alpha), 0.0, r)
    expected = 1.0 - (1.0 - math.tanh(r) ** 2) ** (alpha + 1.0)
    assert value == pytest.approx(expected, rel=1e-9)


@pytest.mark.parametrize("z", [0.2, 0.35j, -0.3 + 0.3j])
def test_averaging_function_of_area_measure(z):
    s2 = math.tanh(1.0) ** 2
    expected = s2 / (1.0 - s2 * abs(z) ** 2) ** 2
    assert averaging_function(area_measure(0.0), z, 1.0) == pytest.approx(expected, rel=1e-6)


@pytest.mark.parametrize("alpha", [0.0, 1.0])
def test_area_measure_bracket_is_stable(alpha):
    mu = area_measure(alpha)
    values = [averaging_function(mu, z, 1.0) for z in [0.0, 0.5, 0.9, 0.97j, -0.99]]
    assert min(values) > 0
    assert max(values) / min(values) <= 50.0


def test_pullback_integral(grid):
    mu = area_measure(0.0, transport_map=poly(0, 0.5))
    # int |tau|^2 dA = 1/8
    assert pullback_integral(lambda w: np.abs(w) ** 2, mu, grid) == pytest.approx(0.125)


def test_area_measure_checks():
    with pytest.raises(ParameterError):
        area_measure(0.0, scale=-1.0)
    with pytest.raises(SelfMapError):
        area_measure(0.0, transport_map=poly(0.5, 0.6))
    assert area_measure(0.0, scale=0.0).vanishes


def test_toeplitz_of_area_measure_is_the_identity(grid):
    T = toeplitz_matrix(area_measure(0.0), M=60, grid=grid)
    assert np.allclose(T.matrix, np.eye(60), atol=1e-11)


def test_toeplitz_of_a_contraction_is_diagonal(grid):
    c = 0.5
    T = toeplitz_matrix(area_measure(0.0, transport_map=poly(0, c)), M=40, grid=grid)
    assert np.allclose(T.matrix, np.diag(c ** (2.0 * np.arange(40))), atol=1e-12)


def test_toeplitz_grid_must_match_alpha(grid):
    with pytest.raises(ParameterError):
        toeplitz_matrix(area_measure(1.0), M=10, grid=grid)


def test_averaged_measure_of_area_measure():
    s2 = math.tanh(1.0) ** 2
    z = np.array([0.0, 0.4, -0.5j, 0.3 + 0.6j])
    nu = averaged_measure(area_measure(0.0), 1.0)
    assert np.allclose(nu.density(z), s2 / (1.0 - s2 * np.abs(z) ** 2) ** 2, rtol=1e-6)


def test_averaged_bound_needs_a_larger_outer_radius():
    with pytest.raises(ParameterError, match="outer radius"):
        averaged_toeplitz_bound(area_measure(0.0), r=1.0, R=1.0)


def test_density_battery_is_bounded():
    battery = bounded_density_battery()
    assert len({name for name, _ in battery}) == 10
    z = np.outer([0.0, 0.45, 0.79, 0.99], np.exp(2j * np.pi * np.arange(16) / 16))
    for name, mu in battery:
        values = mu.density(z)
        assert np.all(values >= 0.0), name
        assert values.max() <= 1.0, name


def test_criterion_measures_of_equal_symbols(zero_difference):
    measures = criterion_measures(zero_difference, 0.0, 2.0, 4.0)
    assert [mu.label for mu in measures] == [
        MeasureLabel.OMEGA_PHI_U,
        MeasureLabel.OMEGA_PSI_V,
        MeasureLabel.SIGMA_PHI,
        MeasureLabel.SIGMA_PSI,
    ]
    stats = carleson_statistics(measures[0], SpaceParams.bergman(), radii=BOUNDARY_RADII)
    assert stats.sup_value == 0.0
    assert stats.trend == Trend.VANISHING


def test_contracted_measure_vanishes_at_the_boundary(half_map):
    mu = omega_measure(half_map, 0.0, 2.0)
    stats = carleson_statistics(mu, SpaceParams.bergman(), radii=BOUNDARY_RADII)
    assert stats.sup_value > 0.0
    assert stats.sup_value >= stats.lattice_sup
    assert stats.sup_value >= max(value for _, value in stats.profile)
    assert stats.trend == Trend.VANISHING


def test_lp_statistics_when_q_below_p(half_map):
    mu = omega_measure(half_map, 0.0, 2.0)
    stats = carleson_statistics(mu, SpaceParams.bergman(0.0, 4.0, 2.0), radii=BOUNDARY_RADII)
    assert stats.t == 1.0
    assert stats.lp_norm is not None and stats.lp_norm > 0
    assert stats.lp_tail < 0.15


def test_beta_defaults_and_checks():
    sp = SpaceParams.bergman(0.0, 2.0, 2.0)
    assert default_beta("schatten", sp) == 4.0
    assert default_beta("embedding", sp) == 4.0
    check_beta("embedding", sp, 2.5)
    with pytest.raises(ParameterError, match="beta must exceed"):
        check_beta("embedding", sp, 2.0)


def test_berezin_of_the_identity():
    q4 = build_quadruple(poly(1), poly(0), poly(0, 1), poly(0))
    spec = OperatorSpec(quadruple=q4)
    for z in [0.0, 0.5, 0.9j]:
        assert berezin_transform(spec, z) == pytest.approx(1.0, rel=1e-6)
    with pytest.raises(ParameterError):
        berezin_transform(spec, 1.0)


def test_berezin_of_the_half_map(half_map):
    # ||C k_z||^2 = (1-|z|^2)^2 / (1-|z|^2/4)^2
    z = 0.6
    expected = (1.0 - z * z) ** 2 / (1.0 - z * z / 4.0) ** 2
    value = berezin_transform(OperatorSpec(quadruple=half_map), z)
    assert value == pytest.approx(expected, rel=1e-6)


def test_berezin_needs_a_hilbert_source(half_map):
    with pytest.raises(ParameterError):
        berezin_transform(OperatorSpec(quadruple=half_map, source=SpaceParams.hardy()), 0.3)


def test_rkt_integral_of_the_half_map(half_map):
    result = rkt_integral(OperatorSpec(quadruple=half_map), 2.0)
    assert result.finite
    assert result.value == pytest.approx(4.0 / 3.0, rel=1e-3)


def test_rkt_integral_of_the_identity_diverges():
    q4 = build_quadruple(poly(1), poly(0), poly(0, 1), poly(0))
    result = rkt_integral(OperatorSpec(quadruple=q4), 2.0)
    assert not result.finite
    assert result.verdict == "divergent-looking"


@pytest.mark.slow
def test_berezin_bound_matches_the_matrix(half_map):
    lhs, rhs, ratio = berezin_schatten_bound(OperatorSpec(quadruple=half_map), 2.0, M=120)
    assert rhs == pytest.approx(math.sqrt(4.0 / 3.0), rel=1e-10)
    assert ratio == pytest.approx(1.0, rel=1e-3)


@pytest.mark.slow
def test_toeplitz_schatten_norms_follow_the_measure(grid):
    # T_mu for mu = dA o (cz)^{-1} has eigenvalues c^{2n}
    c = 0.7
    T = toeplitz_matrix(area_measure(0.0, transport_map=poly(0, c)), M=60, grid=grid)
    s = singular_values(T)
    for p in (0.5, 1.0, 2.0):
        expected = (1.0 / (1.0 - c ** (2.0 * p))) ** (1.0 / p)
        assert schatten_norm(s, p) == pytest.approx(expected, rel=1e-5)


@pytest.mark.slow
def test_toeplitz_norms_track_the_averaging_function(grid):
    exponents = (1.0, 2.0, 4.0)
    rows = [
        toeplitz_coherence(mu, exponents, r=1.0, M=60, grid=grid)
        for _, mu in bounded_density_battery()
    ]
    for k, p in enumerate(exponents):
        ratios = [row[k][2] for row in rows]
        assert min(ratios) > 0.0, p
        assert max(ratios) / min(ratios) <= 50.0, p


@pytest.mark.slow
def test_averaged_measure_is_dominated_by_the_outer_average():
    exponents = (1.0, 2.0, 4.0)
    rows = [
        averaged_toeplitz_bound(mu, exponents, r=0.5, R=1.0, M=40)
        for _, mu in bounded_density_battery()
    ]
    for k, p in enumerate(exponents):
        ratios = [row[k][2] for row in rows]
        assert all(np.isfinite(ratios)), p
        assert min(ratios) > 0.0, p
        assert max(ratios) / min(ratios) <= 50.0, p


BEREZIN_CONSTANT = 1.05

COMPACT_DIFFERENCES = [
    (poly(1), poly(0), poly(0, 0.5), poly(0)),
    (poly(1), poly(0), poly(0, 0.3), poly(0)),
    (poly(1), poly(1), poly(0, 0.5), poly(0, 1.0 / 3.0)),
    (poly(1), poly(1), poly(0, 0.5), poly(0, -0.5)),
    (poly(0, 1), poly(0), poly(0, 0.5), poly(0)),
    (poly(1, 1), poly(1), poly(0, 0.4), poly(0.2, 0.3)),
    (poly(1), poly(0), poly(0, 0, 0.5), poly(0)),
    (poly(2), poly(1), poly(0, 0.5), poly(0, 0.5)),
    (poly(1), poly(0), poly(0.25, 0.25), poly(0)),
    (poly(1), poly(1), poly(0, 0, 0.5), poly(0, 0.5)),
]


@pytest.mark.slow
@pytest.mark.parametrize("p", [2.0, 4.0])
@pytest.mark.parametrize("symbols", COMPACT_DIFFERENCES)
def test_berezin_integral_is_dominated_by_the_schatten_norm(symbols, p):
    spec = OperatorSpec(quadruple=build_quadruple(*symbols))
    lhs, rhs, _ = berezin_schatten_bound(spec, p, M=120)
    assert rhs > 0.0
    assert lhs <= BEREZIN_CONSTANT * rhs


SAMPLE_POINTS = np.array([0.0, 0.3, -0.2 + 0.4j, 0.6j, -0.8])


@pytest.fixture
def shifted_difference():
    return build_quadruple(poly(1, 0.2), poly(1), poly(0, 0.5), poly(0.1, 1.0 / 3.0))


def test_measures_exchange_under_swapping_the_pairs(shifted_difference):
    q4 = shifted_difference
    swapped = build_quadruple(q4.v, q4.u, q4.psi, q4.phi)
    omega_phi, omega_psi, sigma_phi, sigma_psi = criterion_measures(q4, 0.0, 2.0, 4.0)
    exchanged = criterion_measures(swapped, 0.0, 2.0, 4.0)
    for original, mirror in zip([omega_psi, omega_phi, sigma_psi, sigma_phi], exchanged):
        before, _ = averaging_values(original, SAMPLE_POINTS, 1.0)
        after, _ = averaging_values(mirror, SAMPLE_POINTS, 1.0)
        np.testing.assert_allclose(after, before, rtol=1e-12, atol=1e-300)


@pytest.mark.parametrize("c", [0.5, -2.0, 3j])
def test_measure_masses_scale_with_the_weights(shifted_difference, c):
    q4 = shifted_difference
    scaled = build_quadruple(scale(q4.u, c), scale(q4.v, c), q4.phi, q4.psi)
    q = 2.0
    for original, mirror in zip(
        criterion_measures(q4, 0.0, q, 4.0), criterion_measures(scaled, 0.0, q, 4.0)
    ):
        before, _ = averaging_values(original, SAMPLE_POINTS, 1.0)
        after, _ = averaging_values(mirror, SAMPLE_POINTS, 1.0)
        np.testing.assert_allclose(after, abs(c) ** q * before, rtol=1e-10, atol=1e-300)


@pytest.mark.slow
def test_area_integrals_are_dominated_by_the_averaged_density(rng):
    # |f|^2 at w is at most its D(w, r) average over s^2 (1-|w|^2)^2, and
    # (1-|w|^2) changes by at most (1+s)/(1-s) across the disk
    r = 0.5
    s = math.tanh(r)
    bound = (1.0 + s) ** 2 / (s**2 * (1.0 - s) ** 2)
    grid = build_grid(0.0, 32, 128)
    nodes, weights = grid.nodes, grid.weights
    battery = [mu for _, mu in bounded_density_battery() if mu.transport_map is None]
    ratios = []
    for mu in battery[:4]:
        direct = mu.density(nodes) * weights
        averaged = averaged_measure(mu, r).density(nodes) * weights
        for _ in range(10):
            coefficients = rng.normal(size=6) + 1j * rng.normal(size=6)
            values = np.abs(np.polyval(coefficients, nodes)) ** 2
            ratios.append(np.sum(values * direct) / np.sum(values * averaged))
    assert max(ratios) <= bound
    assert min(ratios) > 0.0
