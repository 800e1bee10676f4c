"""
r-lattices in the Bergman metric

Greedy maximal r-separated sets over a spiral candidate net, followed by a
gap-closing pass that inserts a center at every exposed vertex of the
union of covering disks until the coverage disk is covered.
"""

import math
from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from ..models.geometry import Lattice
from ..utils.config import config
from ..utils.errors import LatticeSizeError, ParameterError
from .disk import pairwise_beta, pseudo_disk_arrays

ORDERINGS = ("spiral", "reversed")
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))
# exposed-vertex tolerance in the Bergman metric
VERTEX_TOLERANCE = 1e-9


def _lattice_setting(key: str, default):
    return config.get("geometry", "lattice", key, default=default)


def estimated_size(r: float, coverage_radius: float) -> float:
    """Hyperbolic-area lower bound on the number of centers"""
    covered = math.sinh(math.atanh(coverage_radius)) ** 2
    return covered / math.sinh(r) ** 2


def multiplicity_bound(r: float, factor: float) -> int:
    """
    Packing bound on #{j : beta(z, a_j) < factor * r} for any r-separated set

    The disks D(a_j, r/2) are disjoint and lie in D(z, (factor + 1/2) r); the
    invariant area of D(a, R) is sinh(R)^2.
    """
    return int(math.floor(math.sinh((factor + 0.5) * r) ** 2 / math.sinh(0.5 * r) ** 2))


def spiral_candidates(r: float, extent: float, step: float) -> np.ndarray:
    """
    Candidate net: rings at Bergman radius k*h with golden-angle offsets

    Points on a ring are spaced by h in the Bergman metric.
    """
    h = step * r
    rings = int(math.ceil(extent / h))
    pieces: List[np.ndarray] = [np.zeros(1, dtype=complex)]
    for k in range(1, rings + 1):
        t = math.tanh(k * h)
        count = max(1, int(math.ceil(2.0 * math.pi * t / ((1.0 - t * t) * h))))
        theta = 2.0 * math.pi * np.arange(count) / count + k * GOLDEN_ANGLE
        pieces.append(t * np.exp(1j * theta))
    return np.concatenate(pieces)


def _greedy(candidates: np.ndarray, r: float, max_points: int) -> np.ndarray:
    kept = np.empty(min(len(candidates), max_points + 1), dtype=complex)
    count = 0
    for c in candidates:
        if count == 0 or pairwise_beta(np.array([c]), kept[:count]).min() >= r:
            if count == max_points:
                raise LatticeSizeError(f"lattice exceeds the cap of {max_points} points")
            kept[count] = c
            count += 1
    return kept[:count].copy()


def _circle_intersections(
    c1: np.ndarray, r1: np.ndarray, c2: np.ndarray, r2: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Intersection points of circle pairs (c1, r1), (c2, r2)

    Returns (first, second, chord midpoints, mask of intersecting pairs).
    """
    delta = c2 - c1
    dist = np.abs(delta)
    mask = (dist > np.abs(r1 - r2)) & (dist < r1 + r2) & (dist > 0)
    dist = np.where(mask, dist, 1.0)

    along = (dist**2 + r1**2 - r2**2) / (2.0 * dist)
    half_chord = np.sqrt(np.maximum(r1**2 - along**2, 0.0))
    unit = delta / dist
    perp = np.empty_like(unit)
    perp.real = -unit.imag
    perp.imag = unit.real

    middle = c1 + along * unit
    offset = half_chord * perp
    return middle + offset, middle - offset, middle, mask


def _exposed_vertices(
    points: np.ndarray, r: float, coverage_radius: float
) -> List[Tuple[complex, complex]]:
    """
    Boundary vertices of the union of D(a_j, r) inside the coverage disk

    Each entry is (vertex, outward unit direction), ordered by center index.
    """
    centers, radii = pseudo_disk_arrays(points, math.tanh(r))
    found: List[Tuple[complex, complex]] = []

    for i in range(len(points) - 1):
        first, second, middle, mask = _circle_intersections(
            centers[i], radii[i], centers[i + 1 :], radii[i + 1 :]
        )
        for j in np.flatnonzero(mask):
            for vertex in (first[j], second[j]):
                if abs(vertex) < coverage_radius and vertex != middle[j]:
                    direction = (vertex - middle[j]) / abs(vertex - middle[j])
                    found.append((complex(vertex), complex(direction)))

    # circles crossing the coverage circle
    first, second, _, mask = _circle_intersections(
        np.zeros(len(points), dtype=complex),
        np.full(len(points), coverage_radius),
        centers,
        radii,
    )
    for j in np.flatnonzero(mask):
        for vertex in (first[j], second[j]):
            direction = (vertex - centers[j]) / abs(vertex - centers[j])
            found.append((complex(vertex), complex(direction)))

    found.append((complex(coverage_radius), 0j))

    if not found:
        return found
    vertices = np.array([v for v, _ in found])
    nearest = np.min(pairwise_beta(vertices, points), axis=1)
    return [entry for entry, gap in zip(found, nearest) if gap >= r - VERTEX_TOLERANCE]


def _close_gaps(
    points: np.ndarray, r: float, coverage_radius: float, max_points: int
) -> Tuple[np.ndarray, int]:
    push = float(_lattice_setting("closure_push", 1e-9))
    rounds = int(_lattice_setting("closure_rounds", 50))
    added = 0

    for round_index in range(rounds):
        inserted = 0
        for vertex, direction in _exposed_vertices(points, r, coverage_radius):
            candidate = vertex + push * (1.0 - abs(vertex) ** 2) * direction
            if pairwise_beta(np.array([candidate]), points).min() >= r:
                if len(points) >= max_points:
                    raise LatticeSizeError(f"lattice exceeds the cap of {max_points} points")
                points = np.append(points, candidate)
                inserted += 1
        logger.debug(f"gap closing round {round_index}: {inserted} centers inserted")
        added += inserted
        if inserted == 0:
            return points, added

    logger.warning(f"gap closing stopped after {rounds} rounds; coverage may have holes")
    return points, added


def build_lattice(
    r: Optional[float] = None,
    coverage_radius: Optional[float] = None,
    ordering: str = "spiral",
    max_points: Optional[int] = None,
) -> Lattice:
    """
    Build an r-lattice covering {|z| <= coverage_radius}

    Args:
        r: Bergman radius, in (0, 5]
        coverage_radius: Euclidean radius certified to be covered
        ordering: "spiral" (origin outward) or "reversed" (outermost ring inward)
        max_points: size cap, defaults to geometry.lattice.max_points

    Returns:
        Lattice whose centers are pairwise at Bergman distance >= r
    """
    r = float(_lattice_setting("radius", 1.0) if r is None else r)
    if coverage_radius is None:
        coverage_radius = _lattice_setting("coverage_radius", 0.95)
    coverage_radius = float(coverage_radius)
    max_points = int(_lattice_setting("max_points", 100000) if max_points is None else max_points)

    if not 0.0 < r <= 5.0:
        raise ParameterError(f"lattice radius must lie in (0, 5], got r = {r}")
    if not 0.0 < coverage_radius <= 1.0 - 1e-6:
        raise ParameterError(f"coverage radius must lie in (0, 1 - 1e-6], got {coverage_radius}")
    if ordering not in ORDERINGS:
        raise ParameterError(f"unknown ordering {ordering!r}, expected one of {ORDERINGS}")

    estimate = estimated_size(r, coverage_radius)
    if estimate > max_points:
        raise LatticeSizeError(
            f"coverage radius {coverage_radius} needs about {estimate:.3g} points at r = {r}, "
            f"cap is {max_points}"
        )

    extent = math.atanh(coverage_radius) + 0.5 * r
    step = float(_lattice_setting("candidate_step", 0.125))
    candidates = spiral_candidates(r, extent, step)
    if len(candidates) > 20 * max_points:
        raise LatticeSizeError(f"{len(candidates)} lattice candidates exceed the search budget")

    if ordering == "reversed":
        candidates = candidates[::-1]

    logger.debug(f"greedy pass over {len(candidates)} candidates (r={r}, ordering={ordering})")
    points = _greedy(candidates, r, max_points)
    points, added = _close_gaps(points, r, coverage_radius, max_points)
    logger.info(
        f"lattice r={r} coverage={coverage_radius}: {len(points)} centers ({added} inserted)"
    )

    return Lattice(
        centers=[complex(p) for p in points],
        radius_r=r,
        coverage_radius=coverage_radius,
        ordering=ordering,
        repaired=added,
    )


def sample_disk(count: int, radius: float, seed: Optional[int] = None) -> np.ndarray:
    """Area-uniform random points of {|z| <= radius}, the origin first"""
    seed = int(_lattice_setting("samples_seed", 20240611) if seed is None else seed)
    rng = np.random.default_rng(seed)
    modulus = radius * np.sqrt(rng.random(max(count - 1, 0)))
    theta = 2.0 * np.pi * rng.random(max(count - 1, 0))
    return np.concatenate([np.zeros(1, dtype=complex), modulus * np.exp(1j * theta)])


def nearest_center_distance(lattice: Lattice, z, chunk: int = 4096) -> np.ndarray:
    """Bergman distance from each point of z to its nearest lattice center"""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    centers = lattice.points
    out = np.empty(len(z))
    for start in range(0, len(z), chunk):
        out[start : start + chunk] = pairwise_beta(z[start : start + chunk], centers).min(axis=1)
    return out


def covering_multiplicity(
    lattice: Lattice,
    factor: float,
    samples: int = 10000,
    seed: Optional[int] = None,
    chunk: int = 2048,
) -> int:
    """
    max over sampled z of #{j : beta(z, a_j) < factor * r}

    Samples are area-uniform in the coverage disk and include the origin.
    """
    if factor <= 0:
        raise ParameterError(f"multiplicity factor must be positive, got {factor}")
    points = sample_disk(samples, lattice.coverage_radius, seed)

    threshold = factor * lattice.radius_r
    centers = lattice.points
    best = 0
    for start in range(0, len(points), chunk):
        counts = (pairwise_beta(points[start : start + chunk], centers) < threshold).sum(axis=1)
        best = max(best, int(counts.max()))
    return best
