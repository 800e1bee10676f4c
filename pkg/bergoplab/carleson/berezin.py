"""
Berezin transforms and the reproducing-kernel integrals

For D = a C_{u,phi} + b C_{v,psi} on A^2_alpha,
    B_n(z) = ||D k_z^{[n]}||^2 = <D*D k_z^{[n]}, k_z^{[n]}>,
the n-th Berezin transform of D*D. Each value is computed twice, directly on
the grid and after the substitution w = phi_z(zeta) that moves z to the
origin; the reading whose outer ring carries the smaller share is kept.
"""

from typing import Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ..geometry.disk import as_complex
from ..models.carleson import LambdaIntegral
from ..models.operator import OperatorSpec
from ..models.quadrature import QuadGrid
from ..operators.matrices import combo_matrix
from ..operators.spectrum import schatten_norm, singular_values
from ..quadrature.grid import build_grid
from ..quadrature.integrate import tail_fraction
from ..spaces.kernels import normalized_kernel
from ..utils.config import config
from ..utils.errors import ParameterError
from .averaging import evaluation_grid


def berezin_grid(alpha: float) -> QuadGrid:
    return build_grid(
        alpha,
        int(config.get("carleson", "berezin_radial_count", default=64)),
        int(config.get("carleson", "berezin_angular_count", default=256)),
    )


def _check_source(spec: OperatorSpec) -> float:
    if spec.source.is_hardy or spec.source.p != 2.0:
        raise ParameterError(
            f"Berezin transforms are taken on A^2_alpha, got {spec.source.label()}"
        )
    return spec.source.alpha


def _image(spec: OperatorSpec, kernel, w: np.ndarray) -> np.ndarray:
    q4 = spec.quadruple
    out = np.zeros(np.shape(w), dtype=complex)
    if spec.a != 0 and not q4.u.is_zero:
        out = out + spec.a * q4.u(w) * kernel(q4.phi(w))
    if spec.b != 0 and not q4.v.is_zero:
        out = out + spec.b * q4.v(w) * kernel(q4.psi(w))
    return out


def _berezin_at(spec: OperatorSpec, z: complex, n: int, grid: QuadGrid) -> Tuple[float, float]:
    alpha = grid.alpha
    kernel = normalized_kernel(z, n, alpha)

    direct = np.abs(_image(spec, kernel, grid.nodes)) ** 2
    direct_value = float(np.sum(direct * grid.weights))
    direct_tail = tail_fraction(direct, grid.weights)
    if z == 0:
        return direct_value, direct_tail

    zeta = grid.nodes
    denominator = 1.0 - np.conj(z) * zeta
    w = (z - zeta) / denominator
    jacobian = ((1.0 - abs(z) ** 2) / np.abs(denominator) ** 2) ** (2.0 + alpha)
    moved = np.abs(_image(spec, kernel, w)) ** 2 * jacobian
    moved_value = float(np.sum(moved * grid.weights))
    moved_tail = tail_fraction(moved, grid.weights)

    if moved_tail < direct_tail:
        return moved_value, moved_tail
    return direct_value, direct_tail


def berezin_values(
    spec: OperatorSpec, points: Sequence[complex], n: int = 0, grid: Optional[QuadGrid] = None
) -> np.ndarray:
    alpha = _check_source(spec)
    if n < 0:
        raise ParameterError(f"kernel order must be non-negative, got n = {n}")
    points = np.atleast_1d(as_complex(points))
    if spec.is_zero:
        return np.zeros(points.shape)
    grid = grid or berezin_grid(alpha)
    flat = points.ravel()
    out = np.array([_berezin_at(spec, complex(z), n, grid)[0] for z in flat])
    if not np.all(np.isfinite(out)):
        bad = flat[~np.isfinite(out)][0]
        raise ParameterError(f"Berezin transform is not finite at z = {bad:.6g}")
    return out.reshape(points.shape)


def berezin_transform(spec: OperatorSpec, z, n: int = 0, grid: Optional[QuadGrid] = None) -> float:
    """
    ||D k_z^{[n]}||^2 for D = a C_{u,phi} + b C_{v,psi}
    """
    if not abs(complex(z)) < 1.0:
        raise ParameterError(f"Berezin point must lie in the open disk, got z = {z}")
    return float(berezin_values(spec, [complex(z)], n, grid)[0])


def rkt_integral(
    spec: OperatorSpec,
    p: float = 2.0,
    n: int = 0,
    grid: Optional[QuadGrid] = None,
    tol_tail: Optional[float] = None,
) -> LambdaIntegral:
    """
    int ||D k_z^{[n]}||^p d lambda(z) with its finite / divergent reading

    The equivalence with D in S_p holds for p >= 2; smaller p is reported as
    a diagnostic.
    """
    if not p > 0:
        raise ParameterError(f"Schatten exponent must be positive, got p = {p}")
    alpha = _check_source(spec)
    tol_tail = config.tail_divergence if tol_tail is None else tol_tail
    if p < 2:
        logger.info(f"reproducing-kernel integral at p = {p:g} < 2 is a diagnostic only")

    points = evaluation_grid(alpha)
    values = berezin_values(spec, points.nodes, n, grid) ** (p / 2.0)
    weights = points.lambda_weights
    total = float(np.sum(values * weights))
    tail = tail_fraction(values, weights)
    return LambdaIntegral(value=total, tail_fraction=tail, finite=tail <= tol_tail)


def berezin_schatten_bound(
    spec: OperatorSpec,
    p: float = 2.0,
    n: int = 0,
    grid: Optional[QuadGrid] = None,
    M: Optional[int] = None,
) -> Tuple[float, float, float]:
    """
    (lhs, rhs, lhs / rhs) with lhs = (int ||D k_z^{[n]}||^p d lambda)^{1/p}
    and rhs = ||D||_{S_p} of the truncated matrix
    """
    rkt = rkt_integral(spec, p, n, grid)
    lhs = rkt.value ** (1.0 / p)
    matrix = combo_matrix((spec.a, spec.b), spec.quadruple, spec.source, M, spec.target)
    rhs = schatten_norm(singular_values(matrix), p)
    if rhs == 0.0:
        ratio = 0.0 if lhs == 0.0 else float("inf")
    else:
        ratio = lhs / rhs
    logger.debug(f"Berezin bound p={p:g} n={n}: {lhs:.4g} / {rhs:.4g} = {ratio:.4g}")
    return lhs, rhs, ratio
