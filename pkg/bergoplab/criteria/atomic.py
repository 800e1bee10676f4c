"""
Atomic boundedness test for q < p

Lattice atoms H^{[i]}_{N,p} = sum_j c_j f^{[i]}_{a_j,N,p} with random signs
and random l^p coefficients; the difference is bounded A^p_alpha ->
A^q_alpha when ||(C_{u,phi} - C_{v,psi}) H|| / ||c||_{l^p} stays bounded.
"""

from typing import List, Optional, Sequence

import numpy as np
from loguru import logger

from ..geometry.lattice import build_lattice
from ..models.criteria import CriterionParams, CriterionReport, Verdict
from ..models.operator import Trend
from ..models.quadrature import QuadGrid
from ..models.space import SpaceParams, TestFamily, TestFunctionSpec, default_order
from ..models.symbol import SymbolQuadruple
from ..operators.profile import testfn_compactness_profile
from ..quadrature.grid import build_grid
from ..spaces.testfunctions import test_function_values
from ..utils.config import config
from ..utils.errors import ParameterError
from .common import (
    cross_check,
    echo_params,
    profile_order,
    provenance,
    require_average_range,
    trend_verdict,
)
from .embedding import difference_spec


class AtomImages:
    """
    Values of u f_j(phi) and v f_j(psi) on a grid for every lattice atom f_j

    Any coefficient vector c then gives (C_{u,phi} - C_{v,psi}) H = c @ images.
    """

    def __init__(
        self,
        q4: SymbolQuadruple,
        sp: SpaceParams,
        centers: Sequence[complex],
        N: int,
        i: int,
        grid: QuadGrid,
    ):
        nodes = grid.nodes.ravel()
        self.weights = grid.weights.ravel()
        self.exponent = sp.target_exponent
        self.images = np.zeros((len(centers), len(nodes)), dtype=complex)
        u, v = q4.u(nodes), q4.v(nodes)
        phi, psi = q4.phi(nodes), q4.psi(nodes)
        for j, a in enumerate(centers):
            try:
                atom = TestFunctionSpec(
                    family=TestFamily.ATOM_H, centers=[a], coefficients=[1.0], N=N, i=i, space=sp
                )
            except ValueError as e:
                raise ParameterError(str(e)) from e
            self.images[j] = (
                u * test_function_values(atom, phi) - v * test_function_values(atom, psi)
            )

    def norm(self, coefficients: np.ndarray) -> float:
        values = np.abs(np.asarray(coefficients) @ self.images) ** self.exponent
        return float(np.sum(values * self.weights)) ** (1.0 / self.exponent)


def atom_image_norm(
    q4: SymbolQuadruple,
    sp: SpaceParams,
    centers: Sequence[complex],
    coefficients: Sequence[complex],
    N: Optional[int] = None,
    i: int = 0,
    grid: Optional[QuadGrid] = None,
) -> float:
    """||(C_{u,phi} - C_{v,psi}) H^{[i]}_{N,p}||_{A^q_alpha} for given atom coefficients"""
    if len(coefficients) != len(centers):
        raise ParameterError(
            f"atom needs one coefficient per lattice point: "
            f"{len(coefficients)} coefficients for {len(centers)} points"
        )
    N = default_order(TestFamily.ATOM_H, sp) if N is None else N
    grid = grid or build_grid(sp.alpha)
    return AtomImages(q4, sp, centers, N, i, grid).norm(np.asarray(coefficients, dtype=complex))


def random_coefficients(rng: np.random.Generator, size: int) -> np.ndarray:
    """Rademacher signs times uniform magnitudes"""
    signs = rng.choice([-1.0, 1.0], size=size)
    return signs * rng.random(size)


def evaluate_atomic_criterion(
    q4: SymbolQuadruple,
    params: Optional[CriterionParams] = None,
    trials: Optional[Sequence[int]] = None,
) -> CriterionReport:
    """
    Randomized-sign atomic test of C_{u,phi} - C_{v,psi}: A^p_alpha -> A^q_alpha, q < p

    For each trial count the largest ratio over trials and i = 0, 1 is
    recorded; the difference reads bounded (here equivalently compact) when
    the maximum grows by at most criteria.trial_stability between counts.
    """
    params = params or CriterionParams()
    sp = params.sp
    if sp.is_hardy:
        raise ParameterError("the atomic test acts on weighted Bergman spaces")
    require_average_range(sp)
    trials = [int(t) for t in (trials or config.get("criteria", "trials", default=[50, 200]))]
    if any(t <= 0 for t in trials):
        raise ParameterError(f"trial counts must be positive, got {trials}")
    stability = float(config.get("criteria", "trial_stability", default=2.0))
    N = params.N if params.N is not None else default_order(TestFamily.ATOM_H, sp)

    lattice = build_lattice(params.r, params.coverage_radius)
    grid = build_grid(sp.alpha, params.radial_count, params.angular_count)
    report = CriterionReport(
        criterion="atomic",
        params=echo_params(params, N=N, trials=trials),
        provenance=provenance(params, lattice_size=len(lattice), trial_stability=stability),
    )
    logger.info(f"atomic test {q4.label or ''}: {len(lattice)} atoms, trials {trials}")

    images = [AtomImages(q4, sp, lattice.centers, N, i, grid) for i in (0, 1)]
    maxima: List[float] = []
    for count in trials:
        rng = np.random.default_rng([params.seed, count])
        best = 0.0
        for _ in range(count):
            c = random_coefficients(rng, len(lattice))
            size = float(np.sum(np.abs(c) ** sp.p) ** (1.0 / sp.p))
            if size == 0.0:
                continue
            best = max(best, max(block.norm(c) for block in images) / size)
        maxima.append(best)
        report.add(f"ratio:max[{count}]", best)
    report.add("lattice:size", len(lattice))

    if maxima[0] > 0:
        growth = max(maxima) / maxima[0]
    else:
        growth = 1.0 if max(maxima) == 0 else float("inf")
    report.add("ratio:growth", growth)
    verdict = Verdict.COMPACT if growth <= stability else Verdict.UNBOUNDED
    report.verdicts["difference"] = verdict

    profile = testfn_compactness_profile(
        difference_spec(q4, sp),
        N=profile_order(TestFamily.BERGMAN_F, sp),
        i_max=1,
        radii=params.radii,
        tol_vanish=params.tol_vanish,
    )
    report.add("profile:max", profile.maximum, profile.flags)
    cross_check(
        report,
        "atomic test vs test functions",
        {"atoms": verdict, "test_functions": trend_verdict(profile.trend)},
        agree=not (verdict == Verdict.COMPACT and Trend(profile.trend) == Trend.GROWING),
        note="one-sided: a bounded difference for q < p has a non-growing profile",
    )
    return report
