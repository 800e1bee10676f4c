"""
Symbol models

Analytic weights u, v and analytic self-maps phi, psi of the unit disk.
"""

from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import BaseModel, Field, field_validator, model_validator

from ..utils.errors import OrderOverflowError


class SymbolKind(str, Enum):
    """Representation of an analytic symbol"""

    POLY = "poly"  # finite Taylor polynomial c_0 + c_1 z + ...
    LFT = "lft"  # (az + b) / (cz + d)


class SymbolRole(str, Enum):
    WEIGHT = "weight"
    SELF_MAP = "self_map"


class AnalyticSymbol(BaseModel):
    """
    Analytic function on the disk

    Either a Taylor polynomial or a linear-fractional map whose pole lies
    outside the closed disk (|d| > |c|). `tail_bound` is nonzero only for
    polynomials obtained by truncating an infinite expansion; it bounds the
    sup norm of the dropped part on the closed disk.
    """

    kind: SymbolKind = Field(SymbolKind.POLY, description="representation")
    coefficients: List[complex] = Field(default_factory=lambda: [0j], description="c_0..c_d")
    lft: Optional[List[complex]] = Field(None, description="(a, b, c, d)")
    role: SymbolRole = Field(SymbolRole.WEIGHT, description="weight or self-map")
    tail_bound: float = Field(0.0, ge=0.0, description="sup-norm bound of a truncated tail")

    @field_validator("coefficients")
    @classmethod
    def _non_empty(cls, value: List[complex]) -> List[complex]:
        return value if value else [0j]

    @model_validator(mode="after")
    def _check_lft(self) -> "AnalyticSymbol":
        if self.kind == SymbolKind.LFT:
            if self.lft is None or len(self.lft) != 4:
                raise ValueError("lft symbols need exactly four coefficients (a, b, c, d)")
            _, _, c, d = self.lft
            if not abs(d) > abs(c):
                raise ValueError("lft pole must lie outside the closed disk (|d| > |c|)")
        return self

    # ----------------------------------------
    # Constructors
    # ----------------------------------------

    @classmethod
    def poly(cls, coefficients, role: SymbolRole = SymbolRole.WEIGHT) -> "AnalyticSymbol":
        return cls(kind=SymbolKind.POLY, coefficients=[complex(c) for c in coefficients], role=role)

    @classmethod
    def linear_fractional(
        cls, a: complex, b: complex, c: complex, d: complex, role: SymbolRole = SymbolRole.SELF_MAP
    ) -> "AnalyticSymbol":
        return cls(
            kind=SymbolKind.LFT, lft=[complex(a), complex(b), complex(c), complex(d)], role=role
        )

    @classmethod
    def constant(cls, value: complex, role: SymbolRole = SymbolRole.WEIGHT) -> "AnalyticSymbol":
        return cls.poly([value], role=role)

    def as_role(self, role: SymbolRole) -> "AnalyticSymbol":
        return self.model_copy(update={"role": role})

    # ----------------------------------------
    # Evaluation
    # ----------------------------------------

    def evaluate(self, z, order: int = 0):
        """
        Value of the order-th derivative at z (scalar or array)
        """
        if order < 0:
            raise ValueError("derivative order must be non-negative")
        z = np.asarray(z, dtype=complex)

        if self.kind == SymbolKind.POLY:
            coefficients = np.asarray(self.coefficients, dtype=complex)
            if order > 0:
                coefficients = P.polyder(coefficients, order) if len(coefficients) > order else [0j]
            return P.polyval(z, coefficients)

        a, b, c, d = self.lft
        denominator = c * z + d
        if order == 0:
            return (a * z + b) / denominator
        if order > 2:
            raise OrderOverflowError(
                f"linear-fractional derivatives are closed-form up to order 2, got {order}"
            )
        det = a * d - b * c
        if order == 1:
            return det / denominator**2
        return -2.0 * c * det / denominator**3

    def __call__(self, z):
        return self.evaluate(z)

    @property
    def degree(self) -> Optional[int]:
        if self.kind == SymbolKind.POLY:
            return len(self.coefficients) - 1
        return None

    @property
    def is_zero(self) -> bool:
        if self.kind == SymbolKind.POLY:
            return all(c == 0 for c in self.coefficients) and self.tail_bound == 0.0
        a, b, _, _ = self.lft
        return a == 0 and b == 0

    def taylor(self, degree: int) -> Tuple[np.ndarray, float]:
        """
        Taylor coefficients c_0..c_degree and a sup-norm bound of the rest
        """
        out = np.zeros(degree + 1, dtype=complex)

        if self.kind == SymbolKind.POLY:
            coefficients = np.asarray(self.coefficients, dtype=complex)
            keep = min(len(coefficients), degree + 1)
            out[:keep] = coefficients[:keep]
            dropped = float(np.sum(np.abs(coefficients[keep:])))
            return out, dropped + self.tail_bound

        a, b, c, d = self.lft
        if c == 0:
            out[0] = b / d
            if degree >= 1:
                out[1] = a / d
            return out, (abs(a / d) if degree < 1 else 0.0)

        ratio = -c / d
        powers = ratio ** np.arange(degree + 1)
        out[0] = b / d
        out[1:] = (a * powers[:-1] + b * powers[1:]) / d
        q = abs(ratio)
        tail = (abs(a) + abs(b) * q) / abs(d) * q**degree / (1.0 - q)
        return out, float(tail)

    def sup_bound(self) -> float:
        """Upper bound of |s| on the closed disk"""
        if self.kind == SymbolKind.POLY:
            return float(np.sum(np.abs(self.coefficients))) + self.tail_bound
        a, b, c, d = self.lft
        return (abs(a) + abs(b)) / (abs(d) - abs(c))


class SymbolQuadruple(BaseModel):
    """The data (u, v, phi, psi) of a difference C_{u,phi} - C_{v,psi}"""

    u: AnalyticSymbol = Field(..., description="weight of the first operator")
    v: AnalyticSymbol = Field(..., description="weight of the second operator")
    phi: AnalyticSymbol = Field(..., description="self-map of the first operator")
    psi: AnalyticSymbol = Field(..., description="self-map of the second operator")
    label: str = Field("", description="battery label")

    def swapped(self) -> "SymbolQuadruple":
        """(v, u, psi, phi): the same difference up to sign"""
        return SymbolQuadruple(u=self.v, v=self.u, phi=self.psi, psi=self.phi, label=self.label)


class SelfMapReport(BaseModel):
    """Outcome of sampling a symbol on circles approaching the boundary"""

    passed: bool = Field(..., description="every sampled value has modulus < 1")
    sup_value: float = Field(..., description="largest sampled modulus")
    sup_location: complex = Field(..., description="where the largest modulus occurred")
    witness: Optional[complex] = Field(None, description="first sampled point leaving the disk")
    samples: int = Field(..., description="number of sampled points")
