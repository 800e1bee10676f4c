"""
Operator models

Truncated matrices of weighted composition operators, their spectra and
the profiles/decay fits used to read compactness and Schatten membership.
"""

from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator

from .space import SpaceParams
from .symbol import SymbolQuadruple


class TruncatedOperator(BaseModel):
    """
    M x M matrix of an operator between monomial orthonormal bases

    Entry (m, n) is <T e_n, e_m> with e_n = z^n / ||z^n||.
    """

    matrix: np.ndarray = Field(..., description="complex M x M matrix")
    source_space: SpaceParams = Field(..., description="domain")
    target_space: SpaceParams = Field(..., description="codomain")
    truncation_order: int = Field(..., gt=0, description="M")
    tail_estimate: float = Field(0.0, ge=0.0, description="largest dropped-row column norm")
    label: str = Field("", description="operator description")

    class Config:
        arbitrary_types_allowed = True

    @property
    def frobenius_sq(self) -> float:
        return float(np.sum(np.abs(self.matrix) ** 2))


class SingularSpectrum(BaseModel):
    """Nonincreasing singular values of a truncation"""

    values: np.ndarray = Field(..., description="s_0 >= s_1 >= ... >= 0")

    class Config:
        arbitrary_types_allowed = True

    @field_validator("values")
    @classmethod
    def _sorted(cls, values: np.ndarray) -> np.ndarray:
        values = np.asarray(values, dtype=float)
        slack = 1e-12 * max(1.0, values[0] if len(values) else 1.0)
        if np.any(values < 0) or np.any(np.diff(values) > slack):
            raise ValueError("singular values must be nonnegative and nonincreasing")
        return values

    def __len__(self) -> int:
        return len(self.values)

    @property
    def largest(self) -> float:
        return float(self.values[0]) if len(self.values) else 0.0


class DecayKind(str, Enum):
    ZERO = "zero"  # all singular values vanish
    GEOMETRIC = "geometric"  # s_k ~ C rho^k
    POWER = "power"  # s_k ~ C k^{-gamma}
    FLAT = "flat"  # no decay inside the truncation


class DecayFit(BaseModel):
    """Decay-rate classification of a spectrum"""

    kind: DecayKind = Field(..., description="fitted decay family")
    rate: Optional[float] = Field(None, description="geometric ratio rho")
    exponent: Optional[float] = Field(None, description="power-law exponent gamma")
    trailing_ratio: float = Field(..., description="s at the reliable end / s_0")
    fitted_count: int = Field(..., description="singular values used in the fit")

    def in_schatten(self, p: float) -> Optional[bool]:
        """
        Membership reading of S_p; None when the fit cannot decide
        """
        if self.kind in (DecayKind.ZERO, DecayKind.GEOMETRIC):
            return True
        if self.kind == DecayKind.FLAT:
            return False
        if self.exponent is None:
            return None
        margin = self.exponent * p - 1.0
        if abs(margin) < 0.1:
            return None
        return margin > 0

    @property
    def compact(self) -> bool:
        return self.kind != DecayKind.FLAT


class Trend(str, Enum):
    VANISHING = "vanishing"
    BOUNDED = "bounded"
    GROWING = "growing"


class ProfileRow(BaseModel):
    radius: float = Field(..., description="|a|")
    i: int = Field(0, description="test-function shift")
    value: float = Field(..., description="max over angles")
    angle: float = Field(0.0, description="maximizing angle")


class CompactnessProfile(BaseModel):
    """Boundary profile of a quantity as |a| -> 1 with its trend reading"""

    rows: List[ProfileRow] = Field(default_factory=list, description="per radius and shift")
    radii: List[float] = Field(default_factory=list, description="sampled radii")
    values: List[float] = Field(default_factory=list, description="max over shifts per radius")
    trend: Trend = Field(Trend.BOUNDED, description="vanishing / bounded / growing")
    decay_exponent: Optional[float] = Field(None, description="fitted exponent in (1-r^2)")
    flags: List[str] = Field(default_factory=list, description="numerical warnings")

    @property
    def maximum(self) -> float:
        return max(self.values) if self.values else 0.0


class OperatorSpec(BaseModel):
    """
    The linear combination a*C_{u,phi} + b*C_{v,psi} between two spaces

    The difference of the criteria is (a, b) = (1, -1).
    """

    quadruple: SymbolQuadruple = Field(..., description="(u, v, phi, psi)")
    a: complex = Field(1.0, description="coefficient of C_{u,phi}")
    b: complex = Field(-1.0, description="coefficient of C_{v,psi}")
    source: SpaceParams = Field(default_factory=SpaceParams, description="domain")
    target: Optional[SpaceParams] = Field(None, description="codomain, defaults to the domain")

    @property
    def codomain(self) -> SpaceParams:
        if self.target is not None:
            return self.target
        return self.source.model_copy(update={"p": self.source.target_exponent, "q": None})

    def apply(self, f, z: np.ndarray) -> np.ndarray:
        """Values of (a C_{u,phi} + b C_{v,psi}) f at z"""
        q4 = self.quadruple
        out = np.zeros(np.shape(z), dtype=complex)
        if self.a != 0 and not q4.u.is_zero:
            out = out + self.a * q4.u(z) * f(q4.phi(z))
        if self.b != 0 and not q4.v.is_zero:
            out = out + self.b * q4.v(z) * f(q4.psi(z))
        return out

    @property
    def is_zero(self) -> bool:
        q4 = self.quadruple
        first = self.a == 0 or q4.u.is_zero
        second = self.b == 0 or q4.v.is_zero
        if first and second:
            return True
        same = q4.u == q4.v and q4.phi == q4.psi
        return same and self.a + self.b == 0
