"""
Polar grids, the pseudo-disk rule and masked integrals
"""

import math

import numpy as np
import pytest

from bergoplab.geometry import pseudo_disk_euclidean
from bergoplab.quadrature import build_grid, integrate
from bergoplab.quadrature.integrate import bergman_disk_mass, integrate_pseudo_disk
from bergoplab.quadrature.masks import bergman_disk_mask
from bergoplab.spaces.norms import monomial_norm_sq
from bergoplab.utils.errors import NonFiniteIntegrandError, ParameterError


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 1.0, 2.5])
def test_weights_sum_to_one(alpha):
    grid = build_grid(alpha, 32, 64)
    assert grid.weights.sum() == pytest.approx(1.0, abs=1e-13)


@pytest.mark.parametrize("alpha", [0.0, 1.0, 2.5])
@pytest.mark.parametrize("n", [0, 1, 5, 40])
def test_monomial_moments_are_exact(alpha, n):
    grid = build_grid(alpha, 48, 64)
    result = integrate(lambda z: np.abs(z) ** (2 * n), grid)
    assert result.real == pytest.approx(monomial_norm_sq(n, alpha), rel=1e-11)


def test_lambda_measure(grid):
    result = integrate(lambda z: (1.0 - np.abs(z) ** 2) ** 2, grid, measure="Lambda")
    assert result.real == pytest.approx(1.0, rel=1e-12)


def test_grids_are_cached_and_read_only():
    first = build_grid(0.0, 16, 32)
    assert build_grid(0.0, 16, 32) is first
    with pytest.raises(ValueError):
        first.weights[0, 0] = 0.0


def test_grid_parameters():
    with pytest.raises(ParameterError):
        build_grid(-1.0, 16, 16)
    with pytest.raises(ParameterError):
        build_grid(0.0, 4, 16)


def test_non_finite_integrand_names_the_node(grid):
    with pytest.raises(NonFiniteIntegrandError) as info:
        integrate(lambda z: np.where(np.abs(z) > 0.5, np.inf, 1.0), grid)
    assert abs(info.value.node) > 0.5


@pytest.mark.parametrize("alpha", [0.0, 1.0, 2.5])
@pytest.mark.parametrize("r", [0.5, 1.0])
def test_bergman_disk_mass_at_origin(alpha, r):
    s = math.tanh(r)
    rule = integrate_pseudo_disk(1.0, 0.0, s, alpha).real
    assert rule == pytest.approx(1.0 - (1.0 - s * s) ** (alpha + 1.0), rel=1e-10)


@pytest.mark.parametrize("center", [0.3, 0.6j, -0.5 + 0.2j])
def test_pseudo_disk_area_is_the_squared_radius(center):
    disk = pseudo_disk_euclidean(center, math.tanh(1.0))
    assert bergman_disk_mass(center, 1.0, 0.0) == pytest.approx(disk.radius**2, rel=1e-9)


def test_masked_integral_reports_boundary_error(grid):
    exact = bergman_disk_mass(0.4, 1.0, 0.0)
    result = integrate(1.0, grid, mask=bergman_disk_mask(0.4, 1.0))
    assert result.boundary_error > 0
    assert abs(result.real - exact) <= result.boundary_error


def test_empty_mask(grid):
    result = integrate(1.0, grid, mask=bergman_disk_mask(0.9999999, 0.001))
    assert result.value == 0
    assert result.node_count == 0
