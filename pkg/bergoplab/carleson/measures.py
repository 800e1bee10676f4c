"""
Pull-back measure builders

The four measures of the difference criteria,
    omega_phi_u = (|rho u|^q dA_alpha) o phi^{-1}
    omega_psi_v = (|rho v|^q dA_alpha) o psi^{-1}
    sigma_phi   = ((1-rho)^beta |u-v|^q dA_alpha) o phi^{-1}
    sigma_psi   = ((1-rho)^beta |u-v|^q dA_alpha) o psi^{-1}
plus plain and derivative-weighted area measures.
"""

import math
from typing import Callable, List, Optional

import numpy as np

from ..models.carleson import MeasureLabel, PullbackMeasure, Transport
from ..models.space import SpaceParams, TestFamily, default_order
from ..models.symbol import AnalyticSymbol, SymbolQuadruple
from ..symbols.algebra import derivative
from ..symbols.validate import require_self_map, rho
from ..utils.errors import ParameterError


def area_measure(
    alpha: float = 0.0,
    scale: float = 1.0,
    transport_map: Optional[AnalyticSymbol] = None,
    density: Optional[Callable[[np.ndarray], np.ndarray]] = None,
) -> PullbackMeasure:
    """
    (scale * density * dA_alpha) o tau^{-1}, tau = identity when transport_map is None
    """
    if scale < 0:
        raise ParameterError(f"measure scale must be nonnegative, got {scale}")
    if transport_map is not None:
        require_self_map(transport_map, "tau")

    if density is None:
        weight = lambda z: np.full(np.shape(z), float(scale))  # noqa: E731
    else:
        weight = lambda z: scale * np.real(np.asarray(density(z)))  # noqa: E731

    return PullbackMeasure(
        weight=weight,
        transport=Transport.IDENTITY if transport_map is None else Transport.PHI,
        transport_map=transport_map,
        alpha=alpha,
        label=MeasureLabel.CUSTOM,
        vanishes=scale == 0,
    )


def omega_measure(
    q4: SymbolQuadruple, alpha: float, q: float, transport: Transport = Transport.PHI
) -> PullbackMeasure:
    """omega_phi_u (transport phi) or omega_psi_v (transport psi)"""
    if transport == Transport.PHI:
        weight_symbol, tau, label = q4.u, q4.phi, MeasureLabel.OMEGA_PHI_U
    elif transport == Transport.PSI:
        weight_symbol, tau, label = q4.v, q4.psi, MeasureLabel.OMEGA_PSI_V
    else:
        raise ParameterError("omega measures are transported by phi or psi")

    def weight(z: np.ndarray) -> np.ndarray:
        return np.abs(rho(q4, z) * weight_symbol(z)) ** q

    return PullbackMeasure(
        weight=weight,
        transport=transport,
        transport_map=tau,
        alpha=alpha,
        label=label,
        vanishes=weight_symbol.is_zero or q4.phi == q4.psi,
    )


def sigma_measure(
    q4: SymbolQuadruple, alpha: float, q: float, beta: float, transport: Transport = Transport.PHI
) -> PullbackMeasure:
    """sigma_phi (transport phi) or sigma_psi (transport psi)"""
    if transport == Transport.PHI:
        tau, label = q4.phi, MeasureLabel.SIGMA_PHI
    elif transport == Transport.PSI:
        tau, label = q4.psi, MeasureLabel.SIGMA_PSI
    else:
        raise ParameterError("sigma measures are transported by phi or psi")

    def weight(z: np.ndarray) -> np.ndarray:
        return (1.0 - rho(q4, z)) ** beta * np.abs(q4.u(z) - q4.v(z)) ** q

    return PullbackMeasure(
        weight=weight,
        transport=transport,
        transport_map=tau,
        alpha=alpha,
        label=label,
        vanishes=q4.u == q4.v,
    )


def criterion_measures(
    q4: SymbolQuadruple, alpha: float, q: float, beta: float
) -> List[PullbackMeasure]:
    """[omega_phi_u, omega_psi_v, sigma_phi, sigma_psi]"""
    return [
        omega_measure(q4, alpha, q, Transport.PHI),
        omega_measure(q4, alpha, q, Transport.PSI),
        sigma_measure(q4, alpha, q, beta, Transport.PHI),
        sigma_measure(q4, alpha, q, beta, Transport.PSI),
    ]


def derivative_measure(
    u: AnalyticSymbol, phi: AnalyticSymbol, alpha: float = 1.0
) -> PullbackMeasure:
    """(|u'|^2 dA_alpha) o phi^{-1}"""
    du = derivative(u)
    return PullbackMeasure(
        weight=lambda z: np.abs(du(z)) ** 2,
        transport=Transport.PHI,
        transport_map=phi,
        alpha=alpha,
        label=MeasureLabel.CUSTOM,
        vanishes=du.is_zero,
    )


def default_beta(branch: str, sp: SpaceParams, N: Optional[int] = None) -> float:
    """
    Smallest customary beta of a criterion branch

    embedding: q N with N the f-family order, so beta > (q/p)(alpha+2)
    lp_average: q N with N the atom order, so beta > (q/p)(alpha+1+max{1,p})
    schatten: 2(alpha+2)
    """
    q = sp.target_exponent
    if branch == "schatten":
        return 2.0 * (sp.alpha + 2.0)
    family = TestFamily.BERGMAN_F if branch == "embedding" else TestFamily.ATOM_H
    return q * (N if N is not None else default_order(family, sp))


def check_beta(branch: str, sp: SpaceParams, beta: float) -> None:
    """
    Raises:
        ParameterError: beta below the hypothesis of the branch
    """
    p, q, alpha = sp.p, sp.target_exponent, sp.alpha
    if branch == "embedding" and not beta > q / p * (alpha + 2.0):
        raise ParameterError(
            f"beta must exceed (q/p)(alpha+2) = {q / p * (alpha + 2.0):g}, got beta = {beta:g}"
        )
    if branch == "lp_average":
        bound = q / p * (alpha + 1.0 + max(1.0, p))
        if not beta > bound:
            raise ParameterError(
                f"beta must exceed (q/p)(alpha+1+max{{1,p}}) = {bound:g}, got beta = {beta:g}"
            )
    if branch == "schatten" and not beta >= 2.0 * (alpha + 2.0) - 1e-12:
        raise ParameterError(
            f"beta must be at least 2(alpha+2) = {2.0 * (alpha + 2.0):g}, got {beta:g}"
        )
    if not math.isfinite(beta):
        raise ParameterError(f"beta must be finite, got {beta}")
