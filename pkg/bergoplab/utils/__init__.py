from .config import Config, config, get_config, reload_config
from .errors import (
    BoundaryProximityError,
    ConfigError,
    DistanceOverflowError,
    LabError,
    LatticeSizeError,
    NonFiniteIntegrandError,
    NumericalFailureError,
    OrderOverflowError,
    ParameterError,
    SelfMapError,
    SpectrumError,
    TruncationError,
)
from .concurrency import ordered_map
from .logging import setup_logging

__all__ = [
    "Config",
    "config",
    "get_config",
    "reload_config",
    "setup_logging",
    "ordered_map",
    "LabError",
    "ParameterError",
    "ConfigError",
    "BoundaryProximityError",
    "DistanceOverflowError",
    "LatticeSizeError",
    "NonFiniteIntegrandError",
    "SelfMapError",
    "OrderOverflowError",
    "TruncationError",
    "SpectrumError",
    "NumericalFailureError",
]
