"""
Hyperbolic geometry of the unit disk

Mobius involutions, pseudo-hyperbolic and Bergman distances, and the
Euclidean parameters of pseudo-hyperbolic disks. Every function accepts
scalars, DiskPoint instances or numpy arrays and broadcasts.
"""

import numpy as np

from ..models.geometry import DiskPoint, EuclideanDisk
from ..utils.config import config
from ..utils.errors import BoundaryProximityError, DistanceOverflowError, ParameterError


def as_complex(z) -> np.ndarray:
    if isinstance(z, DiskPoint):
        return np.asarray(z.z, dtype=complex)
    return np.asarray(z, dtype=complex)


def _scalar_or_array(value: np.ndarray):
    if np.ndim(value) == 0:
        return value.item()
    return value


def check_inside(z: np.ndarray, name: str = "z") -> None:
    """Raise when a point is not at least boundary_epsilon inside the disk"""
    limit = 1.0 - config.boundary_epsilon
    modulus = np.abs(z)
    if np.any(modulus > limit):
        worst = np.max(modulus)
        raise BoundaryProximityError(
            f"{name} must satisfy |{name}| <= 1 - eps, got |{name}| = {worst!r}"
        )


def kernel_denominator(z: np.ndarray, w: np.ndarray) -> np.ndarray:
    """1 - conj(z) w"""
    return 1.0 - np.conj(z) * w


def mobius(a, w):
    """
    The involutive automorphism phi_a(w) = (a - w) / (1 - conj(a) w)

    Exchanges a and 0 and satisfies mobius(a, mobius(a, w)) = w.
    """
    a = as_complex(a)
    w = as_complex(w)
    check_inside(a, "a")
    check_inside(w, "w")

    denominator = kernel_denominator(a, w)
    if np.any(np.abs(denominator) < config.boundary_epsilon):
        raise BoundaryProximityError("1 - conj(a) w underflows; points too close to the boundary")
    return _scalar_or_array((a - w) / denominator)


def pseudo_distance(z, w):
    """d(z, w) = |phi_z(w)|"""
    z = as_complex(z)
    w = as_complex(w)
    check_inside(z, "z")
    check_inside(w, "w")
    return _scalar_or_array(np.abs(z - w) / np.abs(kernel_denominator(z, w)))


def one_minus_distance_sq(z, w):
    """1 - d(z, w)^2 = (1 - |z|^2)(1 - |w|^2) / |1 - conj(z) w|^2"""
    z = as_complex(z)
    w = as_complex(w)
    numerator = (1.0 - np.abs(z) ** 2) * (1.0 - np.abs(w) ** 2)
    return _scalar_or_array(numerator / np.abs(kernel_denominator(z, w)) ** 2)


def bergman_distance(z, w):
    """
    beta(z, w) = artanh d(z, w)

    Raises DistanceOverflowError when d >= 1 - distance_overflow.
    """
    d = np.asarray(pseudo_distance(z, w), dtype=float)
    overflow = float(config.get("geometry", "distance_overflow", default=1e-15))
    if np.any(d >= 1.0 - overflow):
        raise DistanceOverflowError(
            f"pseudo-hyperbolic distance {np.max(d)!r} too close to 1 for the Bergman metric"
        )
    return _scalar_or_array(np.arctanh(d))


def pairwise_beta(z: np.ndarray, w: np.ndarray) -> np.ndarray:
    """
    Bergman distances between two point sets, shape (len(z), len(w))

    No boundary checks; callers hold points well inside the disk.
    """
    z = np.asarray(z, dtype=complex)[:, None]
    w = np.asarray(w, dtype=complex)[None, :]
    d = np.abs(z - w) / np.abs(1.0 - np.conj(z) * w)
    return np.arctanh(np.minimum(d, 1.0 - 1e-16))


def pseudo_disk_euclidean(z, s: float) -> EuclideanDisk:
    """
    Euclidean center and radius of E(z, s) = {w : d(z, w) < s}

    center = z (1 - s^2) / (1 - s^2 |z|^2), radius = s (1 - |z|^2) / (1 - s^2 |z|^2).
    """
    if not 0.0 < s < 1.0:
        raise ParameterError(f"pseudo-hyperbolic radius must lie in (0, 1), got s = {s}")
    z = complex(as_complex(z))
    check_inside(np.asarray(z), "z")

    modulus_sq = abs(z) ** 2
    scale = 1.0 - s**2 * modulus_sq
    center = z * (1.0 - s**2) / scale
    radius = s * (1.0 - modulus_sq) / scale
    return EuclideanDisk(center=DiskPoint.from_complex(center), radius=radius)


def pseudo_disk_arrays(z: np.ndarray, s: float):
    """Vectorized pseudo_disk_euclidean: (centers, radii)"""
    z = np.asarray(z, dtype=complex)
    modulus_sq = np.abs(z) ** 2
    scale = 1.0 - s**2 * modulus_sq
    return z * (1.0 - s**2) / scale, s * (1.0 - modulus_sq) / scale
