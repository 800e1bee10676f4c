"""
Data models

Re-exports every pydantic model of the package.
"""

from .carleson import CarlesonStats, LambdaIntegral, MeasureLabel, PullbackMeasure, Transport
from .config import CriterionKind, NumericsConfig, OutputConfig, OutputFormat, RunConfig, Task
from .criteria import BatteryCase, CriterionParams, CriterionReport, CrossCheck, Quantity, Verdict
from .geometry import DiskPoint, EuclideanDisk, Lattice
from .operator import (
    CompactnessProfile,
    DecayFit,
    DecayKind,
    OperatorSpec,
    ProfileRow,
    SingularSpectrum,
    Trend,
    TruncatedOperator,
)
from .quadrature import IntegralResult, Measure, QuadGrid, RegionMask
from .space import (
    KernelSpec,
    SpaceKind,
    SpaceParams,
    TestFamily,
    TestFunctionSpec,
    default_order,
    order_lower_bound,
)
from .symbol import AnalyticSymbol, SelfMapReport, SymbolKind, SymbolQuadruple, SymbolRole

__all__ = [
    # Geometry
    "DiskPoint",
    "EuclideanDisk",
    "Lattice",
    # Quadrature
    "IntegralResult",
    "Measure",
    "QuadGrid",
    "RegionMask",
    # Symbols
    "AnalyticSymbol",
    "SelfMapReport",
    "SymbolKind",
    "SymbolQuadruple",
    "SymbolRole",
    # Spaces
    "KernelSpec",
    "SpaceKind",
    "SpaceParams",
    "TestFamily",
    "TestFunctionSpec",
    "default_order",
    "order_lower_bound",
    # Operators
    "CompactnessProfile",
    "DecayFit",
    "DecayKind",
    "OperatorSpec",
    "ProfileRow",
    "SingularSpectrum",
    "Trend",
    "TruncatedOperator",
    # Measures
    "CarlesonStats",
    "LambdaIntegral",
    "MeasureLabel",
    "PullbackMeasure",
    "Transport",
    # Criteria
    "BatteryCase",
    "CriterionParams",
    "CriterionReport",
    "CrossCheck",
    "Quantity",
    "Verdict",
    # Run config
    "CriterionKind",
    "NumericsConfig",
    "OutputConfig",
    "OutputFormat",
    "RunConfig",
    "Task",
]
