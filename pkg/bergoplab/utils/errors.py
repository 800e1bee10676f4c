"""
Exception hierarchy shared by every module
"""

from typing import Any, Optional


class LabError(Exception):
    """Base class of all berg-op-lab errors"""


class ParameterError(LabError, ValueError):
    """A precondition or hypothesis of a computation is violated"""


class ConfigError(ParameterError):
    """A run config does not match the schema"""

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class BoundaryProximityError(LabError, ValueError):
    """A point is too close to the unit circle for the requested formula"""


class DistanceOverflowError(BoundaryProximityError):
    """Pseudo-hyperbolic distance too close to 1 for artanh"""


class LatticeSizeError(LabError):
    """Requested lattice exceeds the configured point cap"""


class NonFiniteIntegrandError(LabError):
    """An integrand produced NaN or infinity at a quadrature node"""

    def __init__(self, node: complex, value: Any):
        self.node = node
        self.value = value
        super().__init__(f"integrand is not finite at node z={node!r}: {value!r}")


class SelfMapError(ParameterError):
    """A symbol used as a self-map leaves the disk"""

    def __init__(self, message: str, witness: Optional[complex] = None):
        self.witness = witness
        super().__init__(message)


class OrderOverflowError(ParameterError):
    """Derivative order not available in closed form"""


class TruncationError(LabError):
    """Truncation tail exceeds the requested tolerance"""


class SpectrumError(LabError):
    """SVD did not converge"""

    def __init__(self, message: str, diagnostics: Optional[dict] = None):
        self.diagnostics = diagnostics or {}
        super().__init__(f"{message} {self.diagnostics}" if diagnostics else message)


class NumericalFailureError(LabError):
    """A structural property (symmetry, positivity) failed beyond tolerance"""
