"""
Region masks

Predicates selecting pseudo-hyperbolic disks, their preimages under a
self-map, and the sublevel sets of rho.
"""

import math
from typing import Callable

import numpy as np

from ..models.quadrature import RegionMask


def pseudo_disk_mask(center: complex, s: float) -> RegionMask:
    """E(center, s) = {w : d(w, center) < s}"""
    center = complex(center)

    def predicate(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=complex)
        return np.abs(w - center) < s * np.abs(1.0 - np.conj(center) * w)

    return RegionMask(label=f"E({center:.6g}, {s:.6g})", predicate=predicate)


def bergman_disk_mask(center: complex, r: float) -> RegionMask:
    """D(center, r) = E(center, tanh r)"""
    mask = pseudo_disk_mask(center, math.tanh(r))
    return RegionMask(label=f"D({complex(center):.6g}, {r:g})", predicate=mask.predicate)


def preimage_mask(tau: Callable[[np.ndarray], np.ndarray], center: complex, s: float) -> RegionMask:
    """tau^{-1}(E(center, s))"""
    disk = pseudo_disk_mask(center, s)
    return RegionMask(
        label=f"tau^-1({disk.label})", predicate=lambda w: disk(tau(np.asarray(w, dtype=complex)))
    )


def boundary_nodes(inside: np.ndarray) -> np.ndarray:
    """Grid nodes whose radial or angular neighbour lies on the other side of the mask"""
    inside = np.asarray(inside, dtype=bool)
    edge = inside != np.roll(inside, 1, axis=1)
    edge |= inside != np.roll(inside, -1, axis=1)
    edge[1:] |= inside[1:] != inside[:-1]
    edge[:-1] |= inside[:-1] != inside[1:]
    return edge
