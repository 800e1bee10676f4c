"""
Run configuration models

One config document describes one task and one report file.
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator

from ..utils.config import config
from .space import SpaceParams
from .symbol import AnalyticSymbol, SymbolQuadruple, SymbolRole


class Task(str, Enum):
    NORMS = "norms"
    SCHATTEN = "schatten"
    CARLESON = "carleson"
    CRITERIA = "criteria"
    LATTICE = "lattice"
    HARDY = "hardy"


class CriterionKind(str, Enum):
    EMBEDDING = "embedding"  # p <= q Carleson characterization
    LP_AVERAGE = "lp_average"  # q < p, L^{p/(p-q)} averages
    SCHATTEN = "schatten"
    ATOMIC = "atomic"
    HARDY_DIFFERENCE = "hardy_difference"
    LINEAR_SUM = "linear_sum"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class NumericsConfig(BaseModel):
    """Numerical knobs; every field is filled from the defaults table"""

    radial_count: int = Field(default_factory=lambda: config.radial_count, ge=8)
    angular_count: int = Field(default_factory=lambda: config.angular_count, ge=8)
    M: int = Field(default_factory=lambda: config.truncation, gt=0)
    radii: List[float] = Field(default_factory=lambda: config.profile_radii)
    r: float = Field(default_factory=lambda: config.carleson_radius, gt=0.0)
    beta: Optional[float] = Field(None, description="defaults per criterion branch")
    N: Optional[int] = Field(None, description="defaults per test-function family")
    seed: int = Field(default_factory=lambda: config.seed)
    tol_vanish: float = Field(default_factory=lambda: config.tol_vanish, gt=0.0)
    tol_tail: float = Field(default_factory=lambda: config.tail_divergence, gt=0.0)
    bracket_bound: float = Field(default_factory=lambda: config.bracket_bound, gt=1.0)
    trials: List[int] = Field(
        default_factory=lambda: [
            int(t) for t in config.get("criteria", "trials", default=[50, 200])
        ]
    )
    coverage_radius: float = Field(
        default_factory=lambda: float(
            config.get("geometry", "lattice", "coverage_radius", default=0.95)
        ),
        gt=0.0,
        lt=1.0,
    )
    bounded_valence: bool = Field(False, description="user-asserted hypothesis")

    class Config:
        extra = "forbid"


class OutputConfig(BaseModel):
    path: Optional[str] = Field(None, description="report file, stdout summary only when None")
    format: OutputFormat = Field(OutputFormat.JSON, description="json or csv")

    class Config:
        extra = "forbid"
        use_enum_values = True


class RunConfig(BaseModel):
    """
    A validated run description

    Symbols default to the zero difference C_{1,z} - C_{1,z}.
    """

    task: Task = Field(..., description="what to compute")
    criterion: Optional[CriterionKind] = Field(None, description="evaluator for task=criteria")
    u: AnalyticSymbol = Field(default_factory=lambda: AnalyticSymbol.constant(1.0))
    v: AnalyticSymbol = Field(default_factory=lambda: AnalyticSymbol.constant(1.0))
    phi: AnalyticSymbol = Field(
        default_factory=lambda: AnalyticSymbol.poly([0, 1], role=SymbolRole.SELF_MAP)
    )
    psi: AnalyticSymbol = Field(
        default_factory=lambda: AnalyticSymbol.poly([0, 1], role=SymbolRole.SELF_MAP)
    )
    alpha: float = Field(0.0, description="weight exponent")
    p: float = Field(2.0, gt=0.0, description="source exponent")
    q: Optional[float] = Field(None, gt=0.0, description="target exponent")
    schatten_p: Optional[float] = Field(None, gt=0.0, description="S_p exponent, defaults to p")
    a: complex = Field(1.0, description="coefficient of C_{u,phi}")
    b: complex = Field(-1.0, description="coefficient of C_{v,psi}")
    numerics: NumericsConfig = Field(default_factory=NumericsConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    class Config:
        extra = "forbid"

    @field_validator("alpha")
    @classmethod
    def _alpha_range(cls, value: float) -> float:
        if not value > -1.0:
            raise ValueError(f"alpha > -1 is required, got alpha = {value}")
        return value

    @property
    def quadruple(self) -> SymbolQuadruple:
        return SymbolQuadruple(u=self.u, v=self.v, phi=self.phi, psi=self.psi)

    @property
    def space(self) -> SpaceParams:
        return SpaceParams.bergman(alpha=self.alpha, p=self.p, q=self.q)
