"""
Averaging functions of pull-back measures

M_{r,t}(mu)(z) = mu(D(z, r)) / (1 - |z|^2)^{t(2+alpha)}.

Identity transports integrate the density on a Mobius-pulled polar rule of
E(z, tanh r); transported measures mask a fixed grid by the preimage
tau^{-1}(E(z, tanh r)) and carry a mask-boundary error.
"""

import math
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ..geometry.disk import as_complex
from ..geometry.lattice import build_lattice
from ..models.carleson import CarlesonStats, PullbackMeasure, Transport
from ..models.operator import Trend
from ..models.quadrature import QuadGrid
from ..models.space import SpaceParams
from ..models.symbol import SymbolKind
from ..quadrature.grid import build_grid
from ..quadrature.integrate import check_finite, integrate, integrate_pseudo_disk
from ..quadrature.masks import boundary_nodes
from ..operators.trends import classify_trend
from ..utils.concurrency import ordered_map
from ..utils.config import config
from ..utils.errors import ParameterError


def _carleson_setting(key: str, default):
    return config.get("carleson", key, default=default)


def mask_grid(alpha: float) -> QuadGrid:
    return build_grid(
        alpha,
        int(_carleson_setting("mask_radial_count", 128)),
        int(_carleson_setting("mask_angular_count", 1024)),
    )


def evaluation_grid(alpha: float) -> QuadGrid:
    """Coarse grid of evaluation points for L^s norms of M_r"""
    return build_grid(
        alpha,
        int(_carleson_setting("lambda_radial_count", 40)),
        int(_carleson_setting("lambda_angular_count", 96)),
    )


def pullback_integral(
    g: Callable[[np.ndarray], np.ndarray], mu: PullbackMeasure, grid: Optional[QuadGrid] = None
) -> float:
    """
    int g d mu = int g(tau(z)) w(z) dA_alpha(z)
    """
    grid = grid or build_grid(mu.alpha)
    if mu.vanishes:
        return 0.0
    result = integrate(lambda z: g(mu.tau(z)) * mu.density(z), grid)
    return result.real


class _MaskedMeasure:
    """Transported node values and weighted densities of a measure on a fixed grid"""

    def __init__(self, mu: PullbackMeasure, grid: QuadGrid):
        self.images = mu.tau(grid.nodes)
        mass = mu.density(grid.nodes) * grid.weights
        check_finite(mass, grid.nodes)
        self.mass = mass

    def disk_mass(self, center: complex, s: float) -> Tuple[float, float]:
        inside = np.abs(self.images - center) < s * np.abs(1.0 - np.conj(center) * self.images)
        if not np.any(inside):
            return 0.0, 0.0
        edge = boundary_nodes(inside)
        return float(np.sum(self.mass[inside])), float(np.sum(np.abs(self.mass[edge])))


def disk_masses(
    mu: PullbackMeasure, centers, r: Optional[float] = None, grid: Optional[QuadGrid] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """
    mu(D(c, r)) for every center c, with mask-boundary errors

    Returns:
        (masses, boundary_errors), both shaped like centers
    """
    r = config.carleson_radius if r is None else float(r)
    if not r > 0:
        raise ParameterError(f"averaging radius must be positive, got r = {r}")
    centers = np.atleast_1d(as_complex(centers))
    flat = centers.ravel()
    if np.any(np.abs(flat) >= 1.0):
        raise ParameterError("averaging centers must lie in the open disk")
    masses = np.zeros(flat.shape)
    errors = np.zeros(flat.shape)
    if mu.vanishes:
        return masses.reshape(centers.shape), errors.reshape(centers.shape)

    s = math.tanh(r)
    if is_identity_transport(mu):
        for k, c in enumerate(flat):
            masses[k] = integrate_pseudo_disk(mu.density, c, s, mu.alpha).real
    else:
        sampled = _MaskedMeasure(mu, grid or mask_grid(mu.alpha))
        for k, c in enumerate(flat):
            masses[k], errors[k] = sampled.disk_mass(c, s)
    return masses.reshape(centers.shape), errors.reshape(centers.shape)


def is_identity_transport(mu: PullbackMeasure) -> bool:
    """tau is z -> z, either declared or as the symbol z"""
    if mu.transport == Transport.IDENTITY or mu.transport_map is None:
        return True
    tau = mu.transport_map
    if tau.kind == SymbolKind.POLY:
        coefficients = list(tau.coefficients) + [0j]
        return tau.tail_bound == 0 and coefficients[:2] == [0, 1] and not any(coefficients[2:])
    a, b, c, d = tau.lft
    return b == 0 and c == 0 and a == d


def _normalizer(z: np.ndarray, t: float, alpha: float) -> np.ndarray:
    return (1.0 - np.abs(z) ** 2) ** (t * (2.0 + alpha))


def averaging_values(
    mu: PullbackMeasure,
    points,
    r: Optional[float] = None,
    t: float = 1.0,
    grid: Optional[QuadGrid] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """M_{r,t}(mu) at many points, with normalized mask-boundary errors"""
    if not t > 0:
        raise ParameterError(f"normalization power t must be positive, got t = {t}")
    points = np.atleast_1d(as_complex(points))
    masses, errors = disk_masses(mu, points, r, grid)
    scale = _normalizer(points, t, mu.alpha)
    return masses / scale, errors / scale


def averaging_function(
    mu: PullbackMeasure,
    z,
    r: Optional[float] = None,
    t: float = 1.0,
    grid: Optional[QuadGrid] = None,
) -> float:
    """
    M_{r,t}(mu)(z) = mu(D(z, r)) / (1-|z|^2)^{t(2+alpha)}
    """
    values, errors = averaging_values(mu, [complex(z)], r, t, grid)
    if errors[0] > 0.1 * max(values[0], 1e-300):
        logger.debug(
            f"M_r({complex(z):.4g}) mask boundary error {errors[0]:.3g} vs value {values[0]:.3g}"
        )
    return float(values[0])


def averaged_measure(
    mu: PullbackMeasure, r: Optional[float] = None, grid: Optional[QuadGrid] = None
) -> PullbackMeasure:
    """
    nu = M_r(mu) dA_alpha

    The density is evaluated by disk_masses wherever nu is integrated, so
    pair it with a coarse grid.
    """
    r = config.carleson_radius if r is None else float(r)

    def density(z: np.ndarray) -> np.ndarray:
        values, _ = averaging_values(mu, z, r, 1.0, grid)
        return values

    return PullbackMeasure(
        weight=density,
        alpha=mu.alpha,
        label=mu.label,
        vanishes=mu.vanishes,
        transport=Transport.IDENTITY,
    )


@lru_cache(maxsize=8)
def _lattice_points(r: float, modulus: float) -> Tuple[complex, ...]:
    lattice = build_lattice(r, coverage_radius=modulus)
    return tuple(c for c in lattice.centers if abs(c) <= modulus)


def lattice_points(r: Optional[float] = None) -> np.ndarray:
    """Lattice points with |a_j| <= carleson.lattice_max_modulus"""
    r = config.carleson_radius if r is None else float(r)
    modulus = float(_carleson_setting("lattice_max_modulus", 0.995))
    return np.asarray(_lattice_points(r, modulus), dtype=complex)


def lambda_norm(
    values: np.ndarray, grid: QuadGrid, exponent: float, lambda_measure: bool = True
) -> Tuple[float, float]:
    """
    (int v^s d lambda)^{1/s} (or against dA_alpha) on an evaluation grid,
    with the outer-ring share of the integral
    """
    weights = grid.lambda_weights if lambda_measure else grid.weights
    powered = np.abs(values) ** exponent
    total = float(np.sum(powered * weights))
    tail = float(np.sum(powered[-1] * weights[-1])) / total if total > 0 else 0.0
    return total ** (1.0 / exponent), tail


def averaging_lambda_norms(
    mu: PullbackMeasure,
    exponents: Sequence[float],
    r: Optional[float] = None,
    grid: Optional[QuadGrid] = None,
) -> List[Tuple[float, float]]:
    """||M_r(mu)||_{L^s(d lambda)} with its tail share for each s, from one evaluation pass"""
    points = evaluation_grid(mu.alpha)
    values, _ = averaging_values(mu, points.nodes.ravel(), r, 1.0, grid)
    values = values.reshape(points.nodes.shape)
    return [lambda_norm(values, points, float(s)) for s in exponents]


def carleson_statistics(
    mu: PullbackMeasure,
    sp: SpaceParams,
    r: Optional[float] = None,
    radii: Optional[Sequence[float]] = None,
    grid: Optional[QuadGrid] = None,
    lambda_exponent: Optional[float] = None,
    t: Optional[float] = None,
    tol_vanish: Optional[float] = None,
    tol_tail: Optional[float] = None,
) -> CarlesonStats:
    """
    Averaging-function statistics of mu against A^p_alpha -> L^q

    p <= q: t = q/p, sup over lattice points and the angular maxima on the
    profile radii with their trend. q < p: additionally the
    L^{p/(p-q)}(dA_alpha) norm of M_{r,1}. lambda_exponent s: additionally
    the L^s(d lambda) norm of M_{r,1} with its tail share.
    """
    r = config.carleson_radius if r is None else float(r)
    radii = [float(x) for x in (radii if radii is not None else config.profile_radii)]
    if any(not 0.0 < x < 1.0 for x in radii) or any(b <= a for a, b in zip(radii, radii[1:])):
        raise ParameterError(f"profile radii must increase inside (0, 1), got {radii}")
    p, q = sp.p, sp.target_exponent
    if t is None:
        t = q / p if p <= q else 1.0
    tol_tail = config.tail_divergence if tol_tail is None else tol_tail
    flags: List[str] = []

    angles = int(_carleson_setting("profile_angles", 32))
    theta = 2.0 * np.pi * np.arange(angles) / angles
    ring_points = np.asarray(radii)[:, None] * np.exp(1j * theta)[None, :]
    lattice = lattice_points(r)

    blocks = ordered_map(
        lambda points: averaging_values(mu, points, r, t, grid), [lattice, ring_points.ravel()]
    )
    (lattice_values, lattice_errors), (ring_values, ring_errors) = blocks
    ring_values = ring_values.reshape(ring_points.shape)
    ring_errors = ring_errors.reshape(ring_points.shape)

    profile_max = ring_values.max(axis=1)
    lattice_sup = float(lattice_values.max()) if len(lattice_values) else 0.0
    all_values = np.concatenate([lattice_values, ring_values.ravel()])
    all_errors = np.concatenate([lattice_errors, ring_errors.ravel()])
    top = int(np.argmax(all_values))
    sup_value = float(all_values[top])
    boundary_error = float(all_errors[top])
    ratio = float(_carleson_setting("mask_boundary_ratio", 1.0))
    if sup_value > 0 and boundary_error > ratio * sup_value:
        flags.append("mask-boundary")
        logger.warning(
            f"{mu.label.value}: mask boundary error {boundary_error:.3g} "
            f"at the supremum {sup_value:.3g}"
        )

    trend, _ = classify_trend(radii, profile_max, tol_vanish=tol_vanish)

    stats = CarlesonStats(
        label=mu.label,
        r=r,
        t=t,
        sup_value=sup_value,
        lattice_sup=lattice_sup,
        profile=[(x, float(v)) for x, v in zip(radii, profile_max)],
        trend=trend,
        boundary_error=boundary_error,
        flags=flags,
    )

    if q < p or lambda_exponent is not None:
        points_grid = evaluation_grid(mu.alpha)
        values, _ = averaging_values(mu, points_grid.nodes.ravel(), r, 1.0, grid)
        values = values.reshape(points_grid.nodes.shape)
        if q < p:
            stats.lp_norm, stats.lp_tail = lambda_norm(
                values, points_grid, p / (p - q), lambda_measure=False
            )
            if stats.lp_tail > tol_tail:
                flags.append("lp-tail")
        if lambda_exponent is not None:
            stats.ls_lambda_norm, stats.lambda_tail = lambda_norm(
                values, points_grid, lambda_exponent
            )
            if stats.lambda_tail > tol_tail:
                flags.append("lambda-tail")

    if mu.vanishes:
        stats.trend = Trend.VANISHING
    logger.debug(
        f"{mu.label.value}: sup={stats.sup_value:.4g} trend={stats.trend.value} "
        f"lp={stats.lp_norm} lambda={stats.ls_lambda_norm}"
    )
    return stats
