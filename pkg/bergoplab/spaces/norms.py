"""
Norms of A^p_alpha and H^p

p = 2 norms of polynomials use exact monomial moments; everything else
goes through quadrature.
"""

from typing import Callable, Optional, Tuple, Union

import numpy as np
from loguru import logger
from scipy.special import gammaln

from ..models.quadrature import IntegralResult, QuadGrid
from ..models.space import SpaceParams
from ..models.symbol import AnalyticSymbol, SymbolKind
from ..quadrature.grid import build_grid
from ..quadrature.integrate import integrate
from ..utils.config import config

Function = Union[AnalyticSymbol, Callable[[np.ndarray], np.ndarray]]


def monomial_norm_sq(n, alpha: float = 0.0):
    """||z^n||^2 in A^2_alpha = Gamma(n+1) Gamma(2+alpha) / Gamma(n+2+alpha)"""
    n = np.asarray(n, dtype=float)
    value = np.exp(gammaln(n + 1.0) + gammaln(2.0 + alpha) - gammaln(n + 2.0 + alpha))
    return float(value) if value.ndim == 0 else value


def basis_norms(count: int, space: SpaceParams) -> np.ndarray:
    """||z^n|| for n < count (all ones in H^2)"""
    if space.is_hardy:
        return np.ones(count)
    return np.sqrt(monomial_norm_sq(np.arange(count), space.alpha))


def _exact_polynomial(f: Function) -> bool:
    return isinstance(f, AnalyticSymbol) and f.kind == SymbolKind.POLY and f.tail_bound == 0.0


def lp_integral(
    f: Function,
    space: SpaceParams,
    grid: Optional[QuadGrid] = None,
    exponent: Optional[float] = None,
) -> IntegralResult:
    """Quadrature of |f|^p against dA_alpha"""
    p = space.p if exponent is None else exponent
    grid = grid or build_grid(space.alpha)
    return integrate(lambda z: np.abs(f(z)) ** p, grid)


def bergman_p_norm(f: Function, space: SpaceParams, grid: Optional[QuadGrid] = None) -> float:
    """
    ||f||_{A^p_alpha}

    Exact for p = 2 and polynomial f; otherwise quadrature, with a warning
    when the outermost ring carries more than quadrature.tail_warning of
    the mass.
    """
    if space.p == 2.0 and _exact_polynomial(f):
        coefficients = np.asarray(f.coefficients, dtype=complex)
        moments = monomial_norm_sq(np.arange(len(coefficients)), space.alpha)
        return float(np.sqrt(np.sum(np.abs(coefficients) ** 2 * moments)))

    result = lp_integral(f, space, grid)
    if result.tail_fraction > float(config.get("quadrature", "tail_warning", default=1e-3)):
        logger.warning(
            f"A^{space.p:g}_{space.alpha:g} norm: "
            f"outer ring carries {result.tail_fraction:.3g} of the mass"
        )
    return float(max(result.real, 0.0) ** (1.0 / space.p))


def circle_mean(f: Function, p: float, radius: float, angles: int) -> float:
    theta = 2.0 * np.pi * np.arange(angles) / angles
    values = np.abs(f(radius * np.exp(1j * theta))) ** p
    return float(np.mean(values))


def hardy_norm(f: Function, p: float = 2.0, angles: Optional[int] = None) -> float:
    """
    ||f||_{H^p}

    Exact l^2 coefficient norm for p = 2 polynomials; otherwise the p-mean
    on the circle of radius spaces.hardy_circle_radius (p-means increase
    with the radius).
    """
    if p == 2.0 and _exact_polynomial(f):
        return float(np.sqrt(np.sum(np.abs(np.asarray(f.coefficients, dtype=complex)) ** 2)))

    radius = float(config.get("spaces", "hardy_circle_radius", default=0.999999))
    if angles is None:
        angles = 8192
        if isinstance(f, AnalyticSymbol) and f.degree is not None:
            angles = max(angles, 8 * (f.degree + 1))
    return circle_mean(f, p, radius, angles) ** (1.0 / p)


def littlewood_paley_check(f: AnalyticSymbol) -> Tuple[float, float, float]:
    """
    ||f||^2_{H^2} against |f(0)|^2 + int |f'|^2 (1-|z|^2) dA

    Returns (lhs, rhs, lhs / rhs); the ratio lies in [1/2, 1].
    """
    coefficients = np.abs(np.asarray(f.coefficients, dtype=complex)) ** 2
    n = np.arange(len(coefficients))
    lhs = float(np.sum(coefficients))
    rhs = float(coefficients[0] + np.sum(2.0 * n[1:] * coefficients[1:] / (n[1:] + 1.0)))
    ratio = lhs / rhs if rhs > 0 else 1.0
    return lhs, rhs, ratio


def inner_product(
    f: Function, g: Function, alpha: float = 0.0, grid: Optional[QuadGrid] = None
) -> complex:
    """
    <f, g> in A^2_alpha

    Exact coefficient pairing when both are polynomials, quadrature otherwise.
    """
    if _exact_polynomial(f) and _exact_polynomial(g):
        c = np.asarray(f.coefficients, dtype=complex)
        d = np.asarray(g.coefficients, dtype=complex)
        size = min(len(c), len(d))
        weights = monomial_norm_sq(np.arange(size), alpha)
        return complex(np.sum(c[:size] * np.conj(d[:size]) * weights))
    grid = grid or build_grid(alpha)
    return integrate(lambda z: f(z) * np.conj(g(z)), grid).value
