"""
Disk geometry: automorphisms, distances, pseudo-hyperbolic disks
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bergoplab.geometry import (
    bergman_distance,
    mobius,
    one_minus_distance_sq,
    pairwise_beta,
    pseudo_disk_euclidean,
    pseudo_distance,
)
from bergoplab.utils.errors import BoundaryProximityError, DistanceOverflowError, ParameterError


@st.composite
def disk_points(draw, max_modulus: float = 0.99):
    modulus = draw(st.floats(min_value=0.0, max_value=max_modulus))
    angle = draw(st.floats(min_value=0.0, max_value=2 * math.pi))
    return modulus * complex(math.cos(angle), math.sin(angle))


@given(disk_points(), disk_points())
def test_mobius_is_an_involution(a, w):
    assert mobius(a, mobius(a, w)) == pytest.approx(w, abs=1e-9)


@given(disk_points())
def test_mobius_exchanges_a_and_zero(a):
    assert abs(mobius(a, 0)) == pytest.approx(abs(a), abs=1e-15)
    assert abs(mobius(a, a)) == pytest.approx(0.0, abs=1e-15)


@settings(max_examples=200)
@given(disk_points(), disk_points(), disk_points())
def test_pseudo_distance_is_mobius_invariant(a, z, w):
    before = pseudo_distance(z, w)
    after = pseudo_distance(mobius(a, z), mobius(a, w))
    assert after == pytest.approx(before, rel=1e-9, abs=1e-12)


def test_one_minus_distance_identity_on_random_pairs(rng):
    modulus = 0.99 * np.sqrt(rng.random((2, 10000)))
    angle = 2 * np.pi * rng.random((2, 10000))
    z, w = modulus * np.exp(1j * angle)
    d = pseudo_distance(z, w)
    np.testing.assert_allclose(1.0 - d**2, one_minus_distance_sq(z, w), rtol=1e-12, atol=1e-15)


def test_bergman_distance_is_artanh():
    assert bergman_distance(0, 0.5) == pytest.approx(math.atanh(0.5))
    assert bergman_distance(0.3j, 0.3j) == 0.0


def test_pairwise_beta_matches_scalar_distance():
    z = np.array([0.1, 0.5j, -0.3 + 0.2j])
    w = np.array([0.0, 0.7])
    table = pairwise_beta(z, w)
    assert table.shape == (3, 2)
    for i, a in enumerate(z):
        for j, b in enumerate(w):
            assert table[i, j] == pytest.approx(bergman_distance(a, b), rel=1e-12)


def test_distance_overflow():
    with pytest.raises(DistanceOverflowError):
        bergman_distance(1 - 1e-11, -(1 - 1e-11))


def test_points_on_the_circle_are_refused():
    with pytest.raises(BoundaryProximityError):
        mobius(0.5, 1.0)


@pytest.mark.parametrize("z", [0, 0.5, 0.3 - 0.6j, 0.95j])
@pytest.mark.parametrize("s", [0.2, math.tanh(1.0), 0.9])
def test_pseudo_disk_boundary_lies_at_distance_s(z, s):
    disk = pseudo_disk_euclidean(z, s)
    boundary = disk.boundary(64)
    np.testing.assert_allclose(pseudo_distance(z, boundary), s, rtol=1e-10)
    assert disk.contains(z)


def test_pseudo_disk_radius_range():
    with pytest.raises(ParameterError):
        pseudo_disk_euclidean(0.1, 1.0)


@settings(max_examples=200)
@given(disk_points(), disk_points(), disk_points())
def test_strong_triangle_inequality(z, u, w):
    a, b = pseudo_distance(z, u), pseudo_distance(u, w)
    assert pseudo_distance(z, w) <= (a + b) / (1.0 + a * b) + 1e-12


def _near(z: complex, s: float, fraction: float, angle: float) -> complex:
    """A point at pseudo-hyperbolic distance fraction * s from z"""
    return mobius(z, fraction * s * complex(math.cos(angle), math.sin(angle)))


@pytest.mark.parametrize("s", [0.3, 0.7])
@settings(max_examples=200)
@given(
    z=disk_points(0.999),
    fraction=st.floats(0.0, 0.999),
    angle=st.floats(0.0, 2 * math.pi),
)
def test_distortion_bracket_on_pseudo_disks(s, z, fraction, angle):
    w = _near(z, s, fraction, angle)
    low, high = (1.0 - s) / (1.0 + s), (1.0 + s) / (1.0 - s)
    ratio = (1.0 - abs(z) ** 2) / (1.0 - abs(w) ** 2)
    assert low * (1 - 1e-9) <= ratio <= high * (1 + 1e-9)
    spread = abs(1.0 - z.conjugate() * w) / (1.0 - abs(z) ** 2)
    assert math.sqrt(low) * (1 - 1e-9) <= spread <= (1 + 1e-9) / (1.0 - s)


@pytest.mark.parametrize("s", [0.3, 0.7])
@settings(max_examples=200)
@given(
    z=disk_points(0.999),
    a=disk_points(0.999),
    fraction=st.floats(0.0, 0.999),
    angle=st.floats(0.0, 2 * math.pi),
)
def test_kernel_denominators_are_comparable_on_pseudo_disks(s, z, a, fraction, angle):
    w = _near(z, s, fraction, angle)
    ratio = abs(1.0 - a.conjugate() * z) / abs(1.0 - a.conjugate() * w)
    assert (1.0 - s) / (1.0 + s) * (1 - 1e-9) <= ratio <= (1.0 + s) / (1.0 - s) * (1 + 1e-9)
