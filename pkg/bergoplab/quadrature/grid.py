"""
Polar product grids on the unit disk

Radial Gauss-Jacobi nodes in t = |z|^2 carry the weight (1-t)^alpha exactly,
so dA_alpha-integrals of polynomials in |z|^2 are exact up to degree
2*radial_count - 1. Angles are uniform with trapezoid weights.

The radial rule is Gauss-Jacobi in t, not Gauss-Legendre in |z|; the weight
(1-t)^alpha belongs to the rule, not to the integrand. Gauss-Legendre on
[0, 1] (legendre_unit) is the radial rule of the pseudo-disk integrals.
"""

from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from ..models.quadrature import QuadGrid
from ..utils.config import config
from ..utils.errors import ParameterError


@lru_cache(maxsize=32)
def _cached_grid(alpha: float, radial_count: int, angular_count: int) -> QuadGrid:
    x, w = roots_jacobi(radial_count, alpha, 0.0)
    t = 0.5 * (1.0 + x)
    ring_weights = (alpha + 1.0) * 2.0 ** (-alpha - 1.0) * w
    ring_weights = ring_weights / ring_weights.sum()

    radii = np.sqrt(t)
    theta = 2.0 * np.pi * np.arange(angular_count) / angular_count
    nodes = radii[:, None] * np.exp(1j * theta)[None, :]
    weights = np.repeat(ring_weights[:, None] / angular_count, angular_count, axis=1)

    for array in (radii, ring_weights, nodes, weights):
        array.setflags(write=False)

    return QuadGrid(
        alpha=alpha,
        radii=radii,
        ring_weights=ring_weights,
        angular_count=angular_count,
        nodes=nodes,
        weights=weights,
    )


def build_grid(
    alpha: float = 0.0, radial_count: Optional[int] = None, angular_count: Optional[int] = None
) -> QuadGrid:
    """
    Build the dA_alpha product grid

    Args:
        alpha: weight exponent, > -1
        radial_count: Gauss-Jacobi nodes (>= 8)
        angular_count: uniform angles (>= 8)

    Returns:
        Immutable QuadGrid whose weights sum to 1
    """
    radial_count = config.radial_count if radial_count is None else int(radial_count)
    angular_count = config.angular_count if angular_count is None else int(angular_count)

    if not alpha > -1.0:
        raise ParameterError(f"alpha > -1 is required, got alpha = {alpha}")
    if radial_count < 8 or angular_count < 8:
        raise ParameterError(
            f"grid counts must be >= 8, got radial={radial_count}, angular={angular_count}"
        )
    return _cached_grid(float(alpha), radial_count, angular_count)


@lru_cache(maxsize=8)
def legendre_unit(count: int):
    """Gauss-Legendre nodes and weights mapped to [0, 1]"""
    x, w = roots_legendre(count)
    return 0.5 * (x + 1.0), 0.5 * w
