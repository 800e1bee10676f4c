"""
Function space models

SpaceParams identifies A^p_alpha or H^p; KernelSpec and TestFunctionSpec
describe reproducing kernels and the normalized test-function families.
"""

import math
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator


class SpaceKind(str, Enum):
    BERGMAN = "bergman"
    HARDY = "hardy"


class SpaceParams(BaseModel):
    """
    Space parameters

    alpha is ignored for Hardy spaces. q is the optional target exponent of
    an operator A^p_alpha -> A^q_alpha.
    """

    kind: SpaceKind = Field(SpaceKind.BERGMAN, description="Bergman or Hardy")
    alpha: float = Field(0.0, description="weight exponent, > -1")
    p: float = Field(2.0, gt=0.0, description="exponent")
    q: Optional[float] = Field(None, gt=0.0, description="target exponent")

    @model_validator(mode="after")
    def _check_alpha(self) -> "SpaceParams":
        if self.kind == SpaceKind.BERGMAN and not self.alpha > -1.0:
            raise ValueError(f"alpha > -1 is required, got alpha = {self.alpha}")
        return self

    @classmethod
    def bergman(
        cls, alpha: float = 0.0, p: float = 2.0, q: Optional[float] = None
    ) -> "SpaceParams":
        return cls(kind=SpaceKind.BERGMAN, alpha=alpha, p=p, q=q)

    @classmethod
    def hardy(cls, p: float = 2.0) -> "SpaceParams":
        return cls(kind=SpaceKind.HARDY, alpha=0.0, p=p)

    @property
    def is_hardy(self) -> bool:
        return self.kind == SpaceKind.HARDY

    @property
    def target_exponent(self) -> float:
        return self.q if self.q is not None else self.p

    def with_exponent(self, p: float) -> "SpaceParams":
        return self.model_copy(update={"p": p, "q": None})

    def label(self) -> str:
        if self.is_hardy:
            return f"H^{self.p:g}"
        return f"A^{self.p:g}_{self.alpha:g}"


class KernelSpec(BaseModel):
    """Reproducing kernel K_z^{[n]} of A^2_alpha"""

    base_point: complex = Field(..., description="z")
    order: int = Field(0, ge=0, description="derivative order n")
    alpha: float = Field(0.0, gt=-1.0, description="weight exponent")

    @model_validator(mode="after")
    def _inside(self) -> "KernelSpec":
        if not abs(self.base_point) < 1.0:
            raise ValueError("kernel base point must lie in the open disk")
        return self


class TestFamily(str, Enum):
    __test__ = False

    BERGMAN_F = "bergman_f"  # (1-|a|^2)^{N+i-(2+alpha)/p} z^i / (1 - conj(a) z)^{N+i}
    HARDY_G = "hardy_g"  # (1-|a|^2)^{N+i-1/p} z^i / (1 - conj(a) z)^{N+i}
    ATOM_H = "atom_H"  # lattice sum of unnormalized f-type atoms


def default_order(family: TestFamily, space: SpaceParams) -> int:
    """Smallest admissible integer N for a family"""
    p = space.p
    if family == TestFamily.BERGMAN_F:
        return math.floor((2.0 + space.alpha) / p) + 1
    if family == TestFamily.HARDY_G:
        return math.floor(1.0 / p) + 1
    return math.floor(max(1.0, 1.0 / p) + (1.0 + space.alpha) / p) + 1


def order_lower_bound(family: TestFamily, space: SpaceParams) -> float:
    p = space.p
    if family == TestFamily.BERGMAN_F:
        return (2.0 + space.alpha) / p
    if family == TestFamily.HARDY_G:
        return 1.0 / p
    return max(1.0, 1.0 / p) + (1.0 + space.alpha) / p


class TestFunctionSpec(BaseModel):
    """
    A member of a test-function family

    N defaults to the smallest admissible integer for the family.
    """

    __test__ = False

    family: TestFamily = Field(TestFamily.BERGMAN_F, description="family")
    a: complex = Field(0j, description="center a (unused for atoms)")
    centers: List[complex] = Field(default_factory=list, description="lattice points for atoms")
    coefficients: List[complex] = Field(default_factory=list, description="atom coefficients c_j")
    N: Optional[int] = Field(None, description="order N")
    i: int = Field(0, ge=0, description="shift i")
    space: SpaceParams = Field(default_factory=SpaceParams, description="source space")

    @model_validator(mode="after")
    def _check_order(self) -> "TestFunctionSpec":
        if self.N is None:
            self.N = default_order(self.family, self.space)
        bound = order_lower_bound(self.family, self.space)
        if not self.N > bound:
            raise ValueError(f"{self.family.value} requires N > {bound:g}, got N = {self.N}")
        if not abs(self.a) < 1.0:
            raise ValueError("test-function center must lie in the open disk")
        if self.family == TestFamily.ATOM_H and len(self.centers) != len(self.coefficients):
            raise ValueError(
                f"atom needs one coefficient per lattice point: "
                f"{len(self.coefficients)} coefficients for {len(self.centers)} points"
            )
        return self

    @property
    def normalizing_exponent(self) -> float:
        """Power of (1-|a|^2) multiplying F^{[i]}_{a,N}"""
        if self.family == TestFamily.HARDY_G:
            return self.N + self.i - 1.0 / self.space.p
        return self.N + self.i - (2.0 + self.space.alpha) / self.space.p
