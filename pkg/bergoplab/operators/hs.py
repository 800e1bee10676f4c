"""
Hilbert-Schmidt integrals

||C_{u,phi} - C_{v,psi}||^2_HS on A^2_alpha in closed form:
    int |u|^2 K(phi,phi) + |v|^2 K(psi,psi) - 2 Re(u conj(v) K(phi,psi)) dA_alpha
with K(x, y) = (1 - x conj(y))^{-(2+alpha)}, plus the four pointwise
conditions that split it.
"""

from typing import Dict, Optional, Tuple

import numpy as np
from loguru import logger

from ..models.quadrature import IntegralResult, QuadGrid, RegionMask
from ..models.symbol import SymbolQuadruple
from ..quadrature.grid import build_grid
from ..quadrature.integrate import integrate
from ..symbols.validate import g_region_mask, rho
from ..utils.config import config


def hs_integrand(q4: SymbolQuadruple, alpha: float):
    c = 2.0 + alpha

    def integrand(z: np.ndarray) -> np.ndarray:
        u, v = q4.u(z), q4.v(z)
        phi, psi = q4.phi(z), q4.psi(z)
        first = np.abs(u) ** 2 / (1.0 - np.abs(phi) ** 2) ** c
        second = np.abs(v) ** 2 / (1.0 - np.abs(psi) ** 2) ** c
        cross = u * np.conj(v) * (1.0 - phi * np.conj(psi)) ** (-c)
        return first + second - 2.0 * np.real(cross)

    return integrand


def hs_integral(
    q4: SymbolQuadruple, alpha: float, grid: Optional[QuadGrid] = None
) -> IntegralResult:
    grid = grid or build_grid(alpha)
    return integrate(hs_integrand(q4, alpha), grid)


def hs_norm_integral(
    q4: SymbolQuadruple, alpha: float = 0.0, grid: Optional[QuadGrid] = None
) -> float:
    """
    ||C_{u,phi} - C_{v,psi}||^2_HS by quadrature

    A warning is logged when the outer ring dominates (non Hilbert-Schmidt).
    """
    result = hs_integral(q4, alpha, grid)
    if result.tail_fraction > config.tail_divergence:
        logger.warning(
            f"Hilbert-Schmidt integrand tail fraction {result.tail_fraction:.3g}: divergent-looking"
        )
    return max(result.real, 0.0)


def hs_condition_integrals(
    q4: SymbolQuadruple, alpha: float = 0.0, grid: Optional[QuadGrid] = None
) -> Dict[str, IntegralResult]:
    """
    The four L^1(dA_alpha) integrals
        |rho u|^2 / (1-|phi|^2)^{2+alpha},  |rho v|^2 / (1-|psi|^2)^{2+alpha},
        (1-rho)^{2+alpha} |u-v|^2 / (1-|phi|^2)^{2+alpha}, and the psi analogue.
    """
    grid = grid or build_grid(alpha)
    c = 2.0 + alpha

    def pieces(z: np.ndarray):
        r = rho(q4, z)
        u, v = q4.u(z), q4.v(z)
        kphi = (1.0 - np.abs(q4.phi(z)) ** 2) ** (-c)
        kpsi = (1.0 - np.abs(q4.psi(z)) ** 2) ** (-c)
        gap = (1.0 - r) ** c * np.abs(u - v) ** 2
        return {
            "rho_u_phi": np.abs(r * u) ** 2 * kphi,
            "rho_v_psi": np.abs(r * v) ** 2 * kpsi,
            "gap_phi": gap * kphi,
            "gap_psi": gap * kpsi,
        }

    return {name: integrate(values, grid) for name, values in pieces(grid.nodes).items()}


def hs_region_split(
    q4: SymbolQuadruple,
    alpha: float = 0.0,
    delta: Optional[float] = None,
    grid: Optional[QuadGrid] = None,
) -> Tuple[IntegralResult, IntegralResult]:
    """
    The Hilbert-Schmidt integral over G_delta = {rho < tanh delta} and its complement
    """
    delta = float(config.get("criteria", "hs_delta", default=0.5) if delta is None else delta)
    grid = grid or build_grid(alpha)
    region = g_region_mask(q4, delta)
    integrand = hs_integrand(q4, alpha)
    inside = integrate(integrand, grid, mask=region)
    complement = RegionMask(label=f"not {region.label}", predicate=lambda z: ~region(z))
    outside = integrate(integrand, grid, mask=complement)
    return inside, outside
