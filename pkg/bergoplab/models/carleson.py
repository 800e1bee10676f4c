"""
Measure models

Pull-back measures (w dA_alpha) o tau^{-1} and the statistics of their
averaging functions.
"""

from enum import Enum
from typing import Callable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field

from .operator import Trend
from .symbol import AnalyticSymbol


class Transport(str, Enum):
    PHI = "phi"
    PSI = "psi"
    IDENTITY = "identity"


class MeasureLabel(str, Enum):
    OMEGA_PHI_U = "omega_phi_u"  # (|rho u|^q dA_alpha) o phi^{-1}
    OMEGA_PSI_V = "omega_psi_v"  # (|rho v|^q dA_alpha) o psi^{-1}
    SIGMA_PHI = "sigma_phi"  # ((1-rho)^beta |u-v|^q dA_alpha) o phi^{-1}
    SIGMA_PSI = "sigma_psi"  # ((1-rho)^beta |u-v|^q dA_alpha) o psi^{-1}
    CUSTOM = "custom"


class PullbackMeasure(BaseModel):
    """
    A weighted area measure transported through a self-map

    `transport_map` is None exactly when transport is IDENTITY.
    """

    weight: Callable[[np.ndarray], np.ndarray] = Field(..., description="nonnegative density w(z)")
    transport: Transport = Field(Transport.IDENTITY, description="which map pushes the measure")
    transport_map: Optional[AnalyticSymbol] = Field(None, description="tau")
    alpha: float = Field(0.0, gt=-1.0, description="weight exponent of dA_alpha")
    label: MeasureLabel = Field(MeasureLabel.CUSTOM, description="measure name")
    vanishes: bool = Field(False, description="weight is identically zero")

    class Config:
        arbitrary_types_allowed = True

    def tau(self, z: np.ndarray) -> np.ndarray:
        if self.transport_map is None:
            return np.asarray(z, dtype=complex)
        return self.transport_map(z)

    def density(self, z: np.ndarray) -> np.ndarray:
        if self.vanishes:
            return np.zeros(np.shape(z))
        return np.real(np.asarray(self.weight(z)))


class LambdaIntegral(BaseModel):
    """A d(lambda)-integral with its tail reading"""

    value: float = Field(..., description="truncated integral")
    tail_fraction: float = Field(..., description="share of the outermost ring")
    finite: bool = Field(..., description="finite-looking")

    @property
    def verdict(self) -> str:
        return "finite-looking" if self.finite else "divergent-looking"


class CarlesonStats(BaseModel):
    """
    Averaging-function statistics of one measure

    sup_value dominates every profile entry and the lattice maximum.
    """

    label: MeasureLabel = Field(MeasureLabel.CUSTOM, description="measure")
    r: float = Field(..., description="Bergman radius of the averaging disks")
    t: float = Field(..., description="normalization power t")
    sup_value: float = Field(0.0, description="max over lattice points and profile")
    lattice_sup: float = Field(0.0, description="max over lattice points")
    profile: List[Tuple[float, float]] = Field(default_factory=list, description="(radius, max M)")
    trend: Trend = Field(Trend.BOUNDED, description="boundary behaviour of the profile")
    lp_norm: Optional[float] = Field(None, description="L^{p/(p-q)}(dA_alpha) norm of M_r")
    lp_tail: Optional[float] = Field(
        None, description="tail fraction of the L^s(dA_alpha) integral"
    )
    ls_lambda_norm: Optional[float] = Field(None, description="L^s(d lambda) norm of M_r")
    lambda_tail: Optional[float] = Field(None, description="tail fraction of the lambda integral")
    boundary_error: float = Field(0.0, description="mask-boundary error at the maximizer")
    flags: List[str] = Field(default_factory=list, description="numerical warnings")
