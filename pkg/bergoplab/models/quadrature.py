"""
Quadrature models
"""

from enum import Enum
from typing import Callable

import numpy as np
from pydantic import BaseModel, Field


class Measure(str, Enum):
    """Measure an integral is taken against"""

    A_ALPHA = "A_alpha"  # (alpha+1)(1-|z|^2)^alpha dA
    LAMBDA = "Lambda"  # dA / (1-|z|^2)^2


class QuadGrid(BaseModel):
    """
    Polar product rule on the disk

    Radial Gauss-Jacobi nodes in t = |z|^2 for the weight (1-t)^alpha,
    uniform angles with trapezoid weights. Weights integrate dA_alpha, so
    they sum to 1.
    """

    alpha: float = Field(..., gt=-1.0, description="Bergman weight exponent")
    radii: np.ndarray = Field(..., description="radial nodes r_k, increasing")
    ring_weights: np.ndarray = Field(..., description="dA_alpha mass of ring k (sums to 1)")
    angular_count: int = Field(..., ge=8, description="number of uniform angles")
    nodes: np.ndarray = Field(..., description="complex nodes, shape (radial, angular)")
    weights: np.ndarray = Field(..., description="dA_alpha node weights, shape (radial, angular)")

    class Config:
        arbitrary_types_allowed = True

    @property
    def radial_count(self) -> int:
        return len(self.radii)

    @property
    def lambda_weights(self) -> np.ndarray:
        """Node weights of d(lambda) = dA / (1-|z|^2)^2"""
        t = (1.0 - self.radii**2)[:, None]
        return self.weights / ((self.alpha + 1.0) * t ** (2.0 + self.alpha))


class RegionMask(BaseModel):
    """Deterministic pure predicate selecting a region of the disk"""

    label: str = Field(..., description="human readable description")
    predicate: Callable[[np.ndarray], np.ndarray] = Field(..., description="z -> bool array")

    class Config:
        arbitrary_types_allowed = True

    def __call__(self, z: np.ndarray) -> np.ndarray:
        return np.asarray(self.predicate(z), dtype=bool)


class IntegralResult(BaseModel):
    """Value of a quadrature with its numerical diagnostics"""

    value: complex = Field(..., description="weighted node sum")
    boundary_error: float = Field(0.0, description="estimated mask-boundary error")
    tail_fraction: float = Field(0.0, description="share of |integrand| mass in the outermost ring")
    node_count: int = Field(0, description="nodes that entered the sum")

    @property
    def real(self) -> float:
        return float(self.value.real)
