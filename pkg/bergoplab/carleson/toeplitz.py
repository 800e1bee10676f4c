"""
Toeplitz matrices of pull-back measures

(T_mu)_{m,n} = int e_n conj(e_m) d mu with e_n = z^n / ||z^n||_{A^2_alpha}.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ..models.carleson import PullbackMeasure
from ..models.symbol import AnalyticSymbol
from ..models.operator import TruncatedOperator
from ..models.quadrature import QuadGrid
from ..models.space import SpaceParams
from ..operators.spectrum import schatten_norm, singular_values
from ..quadrature.grid import build_grid
from ..quadrature.integrate import check_finite
from ..spaces.norms import basis_norms
from ..utils.config import config
from ..utils.errors import NumericalFailureError, ParameterError
from .averaging import averaged_measure, averaging_lambda_norms
from .measures import area_measure

PSD_TOLERANCE = 1e-10


def toeplitz_matrix(
    mu: PullbackMeasure, M: Optional[int] = None, grid: Optional[QuadGrid] = None
) -> TruncatedOperator:
    """
    M x M Toeplitz matrix of mu on A^2_alpha (alpha = mu.alpha)

    Raises:
        NumericalFailureError: Hermitian or PSD violation beyond 1e-10
    """
    M = int(config.get("carleson", "toeplitz_truncation", default=60) if M is None else M)
    if M <= 0:
        raise ParameterError(f"truncation order must be positive, got M = {M}")
    space = SpaceParams.bergman(alpha=mu.alpha)
    grid = grid or build_grid(mu.alpha)
    if grid.alpha != mu.alpha:
        raise ParameterError(
            f"grid alpha {grid.alpha:g} differs from the measure alpha {mu.alpha:g}"
        )

    if mu.vanishes:
        matrix = np.zeros((M, M), dtype=complex)
    else:
        images = mu.tau(grid.nodes).ravel()
        mass = (mu.density(grid.nodes) * grid.weights).ravel()
        check_finite(mass, grid.nodes.ravel())
        basis = images[:, None] ** np.arange(M)[None, :] / basis_norms(M, space)[None, :]
        matrix = np.conj(basis).T @ (mass[:, None] * basis)

    scale = max(1.0, float(np.max(np.abs(matrix))) if matrix.size else 1.0)
    asymmetry = float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0
    if asymmetry > PSD_TOLERANCE * scale:
        raise NumericalFailureError(f"Toeplitz matrix is not Hermitian: deviation {asymmetry:.3g}")
    matrix = 0.5 * (matrix + matrix.conj().T)
    smallest = float(np.linalg.eigvalsh(matrix).min())
    if smallest < -PSD_TOLERANCE * scale:
        raise NumericalFailureError(
            f"Toeplitz matrix is not positive semidefinite: eigenvalue {smallest:.3g}"
        )

    trace = float(np.trace(matrix).real)
    logger.debug(f"Toeplitz matrix of {mu.label.value}: M={M}, trace={trace:.4g}")
    return TruncatedOperator(
        matrix=matrix,
        source_space=space,
        target_space=space,
        truncation_order=M,
        label=f"T_{mu.label.value}",
    )


def _ratio(lhs: float, rhs: float) -> float:
    if rhs == 0.0:
        return 0.0 if lhs == 0.0 else float("inf")
    return lhs / rhs


def toeplitz_coherence(
    mu: PullbackMeasure,
    exponents: Sequence[float] = (1.0, 2.0, 4.0),
    r: Optional[float] = None,
    M: Optional[int] = None,
    grid: Optional[QuadGrid] = None,
) -> List[Tuple[float, float, float]]:
    """
    ||T_mu||_{S_p} against ||M_r(mu)||_{L^p(d lambda)} for each p

    The two sides are comparable for every p > 0, so over a family of
    measures the ratios should stay inside one bracket.

    Returns:
        (matrix side, averaging side, ratio) per exponent
    """
    spectrum = singular_values(toeplitz_matrix(mu, M, grid))
    averages = averaging_lambda_norms(mu, exponents, r)
    rows = []
    for p, (average, tail) in zip(exponents, averages):
        lhs = schatten_norm(spectrum, p)
        rows.append((lhs, average, _ratio(lhs, average)))
        logger.debug(f"Toeplitz coherence p={p:g}: {lhs:.4g} / {average:.4g} (tail {tail:.3g})")
    return rows


def averaged_toeplitz_bound(
    mu: PullbackMeasure,
    exponents: Sequence[float] = (1.0, 2.0, 4.0),
    r: Optional[float] = None,
    R: Optional[float] = None,
    M: Optional[int] = None,
    grid: Optional[QuadGrid] = None,
) -> List[Tuple[float, float, float]]:
    """
    ||T_nu||_{S_p} against ||M_R(mu)||_{L^p(d lambda)} for nu = M_r(mu) dA_alpha

    R defaults to 2r and must exceed r. nu evaluates disk masses at every
    node of `grid`, which defaults to the evaluation-sized 32 x 128 grid.
    """
    r = config.carleson_radius if r is None else float(r)
    R = 2.0 * r if R is None else float(R)
    if not R > r:
        raise ParameterError(f"outer radius must exceed r = {r:g}, got R = {R:g}")
    grid = grid or build_grid(mu.alpha, 32, 128)
    spectrum = singular_values(toeplitz_matrix(averaged_measure(mu, r), M, grid))
    rows = []
    for p, (average, _) in zip(exponents, averaging_lambda_norms(mu, exponents, R)):
        lhs = schatten_norm(spectrum, p)
        rows.append((lhs, average, _ratio(lhs, average)))
    return rows


def bounded_density_battery() -> List[Tuple[str, PullbackMeasure]]:
    """Ten measures with bounded densities on A^2, eight of them untransported"""

    def defect(k: int):
        return lambda z: (1.0 - np.abs(z) ** 2) ** k

    def below(c: float):
        return lambda z: (np.abs(z) < c).astype(float)

    def lifted(z):
        return 0.5 * (1.0 + np.abs(z) ** 2) * (1.0 - np.abs(z) ** 2) ** 2

    def ring(z):
        return np.abs(z) ** 2 * (1.0 - np.abs(z) ** 2) ** 3

    def tilted(z):
        return 0.25 * np.abs(1.0 + z) ** 2 * (1.0 - np.abs(z) ** 2) ** 2

    shifted = AnalyticSymbol.poly([0.1, 0.7])
    return [
        ("defect-2", area_measure(0.0, density=defect(2))),
        ("defect-3", area_measure(0.0, density=defect(3))),
        ("defect-4", area_measure(0.0, density=defect(4))),
        ("disk-half", area_measure(0.0, density=below(0.5))),
        ("disk-0.8", area_measure(0.0, scale=0.5, density=below(0.8))),
        ("lifted-defect", area_measure(0.0, density=lifted)),
        ("ring-defect", area_measure(0.0, density=ring)),
        ("tilted-defect", area_measure(0.0, density=tilted)),
        ("pushed-0.6", area_measure(0.0, transport_map=AnalyticSymbol.poly([0, 0.6]))),
        ("pushed-defect", area_measure(0.0, density=defect(2), transport_map=shifted)),
    ]
