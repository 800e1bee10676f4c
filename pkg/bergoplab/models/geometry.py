"""
Disk geometry models

Points, Euclidean disks and r-lattices of the unit disk.
"""

from typing import List

import numpy as np
from pydantic import BaseModel, Field


class DiskPoint(BaseModel):
    """A point z = re + i*im of the unit disk"""

    re: float = Field(..., description="real part")
    im: float = Field(..., description="imaginary part")

    @classmethod
    def from_complex(cls, z: complex) -> "DiskPoint":
        z = complex(z)
        return cls(re=z.real, im=z.imag)

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    def __complex__(self) -> complex:
        return self.z


class EuclideanDisk(BaseModel):
    """
    Euclidean parameters of a pseudo-hyperbolic disk E(z, s)

    The closure is contained in the unit disk.
    """

    center: DiskPoint = Field(..., description="Euclidean center")
    radius: float = Field(..., gt=0.0, description="Euclidean radius")

    def contains(self, w) -> np.ndarray:
        return np.abs(np.asarray(w, dtype=complex) - self.center.z) < self.radius

    def boundary(self, count: int = 256) -> np.ndarray:
        """Equispaced points on the boundary circle"""
        theta = 2.0 * np.pi * np.arange(count) / count
        return self.center.z + self.radius * np.exp(1j * theta)


class Lattice(BaseModel):
    """
    r-lattice in the Bergman metric

    Centers are pairwise at Bergman distance >= radius_r, and every point
    with |z| <= coverage_radius lies in some D(a_j, radius_r).
    """

    centers: List[complex] = Field(default_factory=list, description="lattice points a_j")
    radius_r: float = Field(..., gt=0.0, description="Bergman radius r")
    coverage_radius: float = Field(..., gt=0.0, lt=1.0, description="certified Euclidean coverage")
    ordering: str = Field("spiral", description="candidate traversal used by the greedy pass")
    repaired: int = Field(0, description="centers added by the covering repair pass")

    @property
    def points(self) -> np.ndarray:
        return np.asarray(self.centers, dtype=complex)

    def __len__(self) -> int:
        return len(self.centers)
