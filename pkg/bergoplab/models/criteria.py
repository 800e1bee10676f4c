"""
Criterion models

Parameters and reports of the characterization evaluators.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..utils.config import config
from .space import SpaceParams
from .symbol import SymbolQuadruple


class Verdict(str, Enum):
    COMPACT = "compact-looking"
    BOUNDED = "bounded-non-compact-looking"
    UNBOUNDED = "unbounded-looking"
    INDETERMINATE = "indeterminate"
    FINITE = "finite-looking"
    DIVERGENT = "divergent-looking"


class CriterionParams(BaseModel):
    """
    Numerical and theoretical parameters of a criterion evaluation

    Branch-specific constraints on beta are checked by the evaluators.
    """

    sp: SpaceParams = Field(default_factory=SpaceParams, description="(alpha, p, q)")
    beta: Optional[float] = Field(None, description="exponent of (1-rho) in the sigma measures")
    N: Optional[int] = Field(None, description="test-function order")
    r: float = Field(default_factory=lambda: config.carleson_radius, gt=0.0)
    radii: List[float] = Field(default_factory=lambda: config.profile_radii)
    M: int = Field(default_factory=lambda: config.truncation, gt=0)
    tol_vanish: float = Field(default_factory=lambda: config.tol_vanish, gt=0.0)
    bracket_bound: float = Field(default_factory=lambda: config.bracket_bound, gt=1.0)
    tol_tail: float = Field(default_factory=lambda: config.tail_divergence, gt=0.0)
    radial_count: int = Field(default_factory=lambda: config.radial_count, ge=8)
    angular_count: int = Field(default_factory=lambda: config.angular_count, ge=8)
    seed: int = Field(default_factory=lambda: config.seed)
    coverage_radius: float = Field(
        default_factory=lambda: float(
            config.get("geometry", "lattice", "coverage_radius", default=0.95)
        ),
        gt=0.0,
        lt=1.0,
        description="lattice coverage of the atomic test",
    )
    bounded_valence: bool = Field(False, description="user asserts the maps have bounded valence")


class Quantity(BaseModel):
    name: str = Field(..., description="quantity name")
    value: Optional[float] = Field(None, description="numeric value")
    flags: List[str] = Field(default_factory=list, description="numerical flags")


class CrossCheck(BaseModel):
    name: str = Field(..., description="which equivalence is checked")
    sides: Dict[str, str] = Field(default_factory=dict, description="verdict of each side")
    agree: bool = Field(..., description="sides give the same verdict")
    note: str = Field("", description="scope of the check")


class CriterionReport(BaseModel):
    """
    Quantities, verdicts and cross-checks of one evaluation

    Every verdict names the quantities it was derived from in `provenance`.
    """

    criterion: str = Field(..., description="evaluator name")
    params: Dict[str, Any] = Field(default_factory=dict, description="echoed parameters")
    quantities: List[Quantity] = Field(default_factory=list)
    verdicts: Dict[str, Verdict] = Field(default_factory=dict)
    cross_checks: List[CrossCheck] = Field(default_factory=list)
    provenance: Dict[str, Any] = Field(default_factory=dict)
    sub_reports: List["CriterionReport"] = Field(default_factory=list)

    class Config:
        use_enum_values = True

    def add(self, name: str, value: Optional[float], flags: Optional[List[str]] = None) -> None:
        self.quantities.append(
            Quantity(name=name, value=None if value is None else float(value), flags=flags or [])
        )

    def quantity(self, name: str) -> Optional[float]:
        for item in self.quantities:
            if item.name == name:
                return item.value
        raise KeyError(name)

    @property
    def coherent(self) -> bool:
        return all(check.agree for check in self.cross_checks) and all(
            sub.coherent for sub in self.sub_reports
        )

    @property
    def indeterminate(self) -> bool:
        if any(v == Verdict.INDETERMINATE.value for v in self.verdicts.values()):
            return True
        return any(sub.indeterminate for sub in self.sub_reports)


class BatteryCase(BaseModel):
    """A shipped example with its known compactness verdict"""

    name: str = Field(..., description="case identifier")
    quadruple: SymbolQuadruple = Field(..., description="(u, v, phi, psi)")
    sp: SpaceParams = Field(default_factory=SpaceParams, description="(alpha, p, q)")
    expected: Verdict = Field(..., description="compact, bounded non-compact or unbounded")

    class Config:
        use_enum_values = True

    @property
    def expected_schatten(self) -> Verdict:
        """Compact battery maps stay inside a disk of radius < 1, so every S_p holds"""
        return Verdict.FINITE if Verdict(self.expected) == Verdict.COMPACT else Verdict.DIVERGENT
