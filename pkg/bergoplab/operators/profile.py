"""
Test-function compactness profiles

For each |a| = r and shift i, the largest value over sampled angles of
||(a C_{u,phi} + b C_{v,psi}) f^{[i]}_{a,N,p}|| in the codomain, followed by
the vanishing / bounded / growing trend reading.
"""

from typing import List, Optional, Sequence

import numpy as np
from loguru import logger

from ..models.operator import CompactnessProfile, OperatorSpec, ProfileRow, Trend
from ..models.quadrature import QuadGrid
from ..models.space import TestFamily, TestFunctionSpec
from ..quadrature.grid import build_grid
from ..quadrature.integrate import check_finite, tail_fraction
from ..spaces.testfunctions import test_function_values
from ..utils.concurrency import ordered_map
from ..utils.config import config
from ..utils.errors import ParameterError
from .trends import classify_trend


class _SampledOperator:
    """Symbol values of an OperatorSpec frozen on a set of nodes"""

    def __init__(self, spec: OperatorSpec, nodes: np.ndarray):
        q4 = spec.quadruple
        self.first = None
        self.second = None
        if spec.a != 0 and not q4.u.is_zero:
            self.first = (spec.a * q4.u(nodes), q4.phi(nodes))
        if spec.b != 0 and not q4.v.is_zero:
            self.second = (spec.b * q4.v(nodes), q4.psi(nodes))
        self.shape = np.shape(nodes)

    def apply(self, test: TestFunctionSpec) -> np.ndarray:
        out = np.zeros(self.shape, dtype=complex)
        for part in (self.first, self.second):
            if part is not None:
                weight, transport = part
                out = out + weight * test_function_values(test, transport)
        return out


def _profile_nodes(spec: OperatorSpec, grid: Optional[QuadGrid]):
    """Nodes and weights on which the codomain norm is evaluated"""
    codomain = spec.codomain
    if codomain.is_hardy:
        angles = int(config.get("operators", "profile_angular_count", default=1024)) * 4
        radius = float(config.get("spaces", "hardy_circle_radius", default=0.999999))
        theta = 2.0 * np.pi * np.arange(angles) / angles
        nodes = (radius * np.exp(1j * theta))[None, :]
        return nodes, np.full(nodes.shape, 1.0 / angles)
    if grid is None:
        grid = build_grid(
            codomain.alpha,
            int(config.get("operators", "profile_radial_count", default=128)),
            int(config.get("operators", "profile_angular_count", default=1024)),
        )
    elif grid.alpha != codomain.alpha:
        raise ParameterError(
            f"profile grid has alpha = {grid.alpha:g}, codomain needs alpha = {codomain.alpha:g}"
        )
    return grid.nodes, grid.weights


def testfn_compactness_profile(
    spec: OperatorSpec,
    N: Optional[int] = None,
    i_max: int = 1,
    radii: Optional[Sequence[float]] = None,
    angles: Optional[int] = None,
    grid: Optional[QuadGrid] = None,
    tol_vanish: Optional[float] = None,
) -> CompactnessProfile:
    """
    Boundary profile of the operator on normalized test functions

    The family is f^{[i]}_{a,N,p} on a Bergman source and g^{[i]}_{a,N,p} on a
    Hardy source; norms are taken in spec.codomain (A^q_alpha by quadrature,
    H^q on a circle close to the boundary).

    Args:
        spec: the combination a C_{u,phi} + b C_{v,psi} and its spaces
        N: test-function order, defaults to the smallest admissible integer
        i_max: shifts i = 0..i_max are sampled
        radii: increasing radii in (0, 1)
        angles: angles per radius
        grid: quadrature grid of the codomain

    Returns:
        CompactnessProfile with per-(radius, i) rows and the trend reading
    """
    radii = [float(r) for r in (radii if radii is not None else config.profile_radii)]
    if any(not 0.0 < r < 1.0 for r in radii) or any(b <= a for a, b in zip(radii, radii[1:])):
        raise ParameterError(f"profile radii must increase inside (0, 1), got {radii}")
    if i_max < 0:
        raise ParameterError(f"i_max must be non-negative, got {i_max}")
    angles = angles or int(config.get("operators", "profile_angles", default=16))

    source = spec.source
    family = TestFamily.HARDY_G if source.is_hardy else TestFamily.BERGMAN_F
    exponent = spec.codomain.target_exponent
    tail_warning = float(config.get("quadrature", "tail_warning", default=1e-3))

    if spec.is_zero:
        rows = [ProfileRow(radius=r, i=i, value=0.0) for r in radii for i in range(i_max + 1)]
        return CompactnessProfile(
            rows=rows,
            radii=radii,
            values=[0.0] * len(radii),
            trend=Trend.VANISHING,
            decay_exponent=None,
        )

    nodes, weights = _profile_nodes(spec, grid)
    sampled = _SampledOperator(spec, nodes)
    theta = 2.0 * np.pi * np.arange(angles) / angles

    flagged: List[str] = []

    def at_radius(r: float) -> List[ProfileRow]:
        rows = []
        for i in range(i_max + 1):
            best, best_angle, worst_tail = -1.0, 0.0, 0.0
            for angle in theta:
                try:
                    test = TestFunctionSpec(
                        family=family, a=r * np.exp(1j * angle), N=N, i=i, space=source
                    )
                except ValueError as e:
                    raise ParameterError(str(e)) from e
                values = np.abs(sampled.apply(test)) ** exponent
                check_finite(values, nodes)
                norm = float(np.sum(values * weights)) ** (1.0 / exponent)
                worst_tail = max(worst_tail, tail_fraction(values, weights))
                if norm > best:
                    best, best_angle = norm, float(angle)
            rows.append(ProfileRow(radius=r, i=i, value=best, angle=best_angle))
            if worst_tail > tail_warning:
                logger.warning(
                    f"profile |a|={r:g}, i={i}: outer ring carries {worst_tail:.3g} of the norm"
                )
                flagged.append(f"quadrature-tail |a|={r:g} i={i}")
        return rows

    per_radius = ordered_map(at_radius, radii)
    rows = [row for block in per_radius for row in block]
    values = [max(row.value for row in block) for block in per_radius]

    trend, decay = classify_trend(radii, values, tol_vanish=tol_vanish)
    logger.debug(f"profile {values} -> {trend.value}")
    return CompactnessProfile(
        rows=rows,
        radii=radii,
        values=values,
        trend=trend,
        decay_exponent=decay,
        flags=sorted(set(flagged)),
    )


testfn_compactness_profile.__test__ = False
