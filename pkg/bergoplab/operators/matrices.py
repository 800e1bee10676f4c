"""
Truncated matrices of weighted composition operators

Column n of C_{u,phi} holds the Taylor coefficients of u * phi^n, built by
lower-triangular Toeplitz products truncated at degree K = M + guard - 1.
Truncated products are exact in every row <= K, so rows M..K give the
tail estimate.
"""

from typing import Optional, Tuple

import numpy as np
from loguru import logger
from scipy.linalg import toeplitz

from ..models.operator import TruncatedOperator
from ..models.space import SpaceParams
from ..models.symbol import AnalyticSymbol, SymbolQuadruple
from ..spaces.norms import basis_norms
from ..symbols.validate import require_self_map
from ..utils.config import config
from ..utils.errors import ParameterError, TruncationError


def multiplication_matrix(s: AnalyticSymbol, degree: int) -> np.ndarray:
    """(degree+1) x (degree+1) lower-triangular Toeplitz matrix of f -> s f"""
    coefficients, _ = s.taylor(degree)
    return toeplitz(coefficients, np.zeros(degree + 1, dtype=complex))


def power_coefficients(
    u: AnalyticSymbol, phi: AnalyticSymbol, columns: int, degree: int
) -> np.ndarray:
    """
    Taylor coefficients of u * phi^n, n < columns, rows 0..degree
    """
    U = multiplication_matrix(u, degree)
    Phi = multiplication_matrix(phi, degree)

    out = np.zeros((degree + 1, columns), dtype=complex)
    power = np.zeros(degree + 1, dtype=complex)
    power[0] = 1.0
    for n in range(columns):
        out[:, n] = U @ power
        power = Phi @ power
    return out


def _check_hilbert(source: SpaceParams, target: SpaceParams) -> None:
    if source.p != 2.0 or target.p != 2.0:
        raise ParameterError(
            "matrix realizations need p = 2 on both sides, "
            f"got {source.label()} -> {target.label()}"
        )


def wco_matrix(
    u: AnalyticSymbol,
    phi: AnalyticSymbol,
    source: Optional[SpaceParams] = None,
    target: Optional[SpaceParams] = None,
    M: Optional[int] = None,
    guard: Optional[int] = None,
    max_tail: Optional[float] = None,
    validate: bool = True,
    label: str = "",
) -> TruncatedOperator:
    """
    M x M matrix of C_{u,phi} between monomial orthonormal bases

    Entry (m, n) = c_m(u phi^n) ||z^m||_target / ||z^n||_source.

    Raises:
        ParameterError: p != 2
        SelfMapError: phi leaves the disk
        TruncationError: tail estimate above max_tail
    """
    source = source or SpaceParams.bergman()
    target = target or source
    _check_hilbert(source, target)
    M = config.truncation if M is None else int(M)
    guard = config.guard if guard is None else int(guard)
    if M <= 0:
        raise ParameterError(f"truncation order must be positive, got M = {M}")
    if validate:
        require_self_map(phi, "phi")

    degree = M + guard - 1
    if u.is_zero:
        matrix = np.zeros((M, M), dtype=complex)
        return TruncatedOperator(
            matrix=matrix, source_space=source, target_space=target, truncation_order=M, label=label
        )

    coefficients = power_coefficients(u, phi, M, degree)
    row_norms = basis_norms(degree + 1, target)
    column_norms = basis_norms(M, source)
    full = coefficients * row_norms[:, None] / column_norms[None, :]

    tail = float(np.max(np.linalg.norm(full[M:], axis=0))) if guard > 0 else 0.0
    # truncated symbol tails: ||e phi^n|| <= sup|e| in both spaces
    if u.tail_bound > 0:
        tail += u.tail_bound / float(column_norms.min())
    if phi.tail_bound > 0:
        n = np.arange(M)
        tail += float(np.max(n * phi.tail_bound * u.sup_bound() / column_norms))

    if max_tail is not None and tail > max_tail:
        raise TruncationError(f"truncation tail {tail:.3g} exceeds {max_tail:.3g} at M = {M}")
    logger.debug(f"wco matrix {label or 'C_{u,phi}'}: M={M}, tail={tail:.3g}")

    return TruncatedOperator(
        matrix=full[:M],
        source_space=source,
        target_space=target,
        truncation_order=M,
        tail_estimate=tail,
        label=label,
    )


def combo_matrix(
    coeffs: Tuple[complex, complex],
    q4: SymbolQuadruple,
    source: Optional[SpaceParams] = None,
    M: Optional[int] = None,
    target: Optional[SpaceParams] = None,
    max_tail: Optional[float] = None,
) -> TruncatedOperator:
    """a C_{u,phi} + b C_{v,psi}; the difference is (a, b) = (1, -1)"""
    a, b = (complex(c) for c in coeffs)
    source = source or SpaceParams.bergman()
    first = wco_matrix(q4.u, q4.phi, source, target, M, max_tail=max_tail)
    second = wco_matrix(q4.v, q4.psi, source, target, M, max_tail=max_tail)
    return TruncatedOperator(
        matrix=a * first.matrix + b * second.matrix,
        source_space=first.source_space,
        target_space=first.target_space,
        truncation_order=first.truncation_order,
        tail_estimate=abs(a) * first.tail_estimate + abs(b) * second.tail_estimate,
        label=q4.label or f"({a:g}) C_(u,phi) + ({b:g}) C_(v,psi)",
    )


def hardy_to_bergman_matrix(
    u: AnalyticSymbol, phi: AnalyticSymbol, M: Optional[int] = None, alpha: float = 1.0
) -> TruncatedOperator:
    """C_{u,phi}: H^2 -> A^2_alpha (alpha = 1 in the Hardy difference criterion)"""
    return wco_matrix(
        u, phi, SpaceParams.hardy(), SpaceParams.bergman(alpha=alpha), M, label="H^2 -> A^2_1"
    )


def hardy_composition_matrix(
    u: AnalyticSymbol, phi: AnalyticSymbol, psi: AnalyticSymbol, M: Optional[int] = None
) -> TruncatedOperator:
    """C_{u,phi} - C_psi on H^2"""
    hardy = SpaceParams.hardy()
    first = wco_matrix(u, phi, hardy, hardy, M)
    second = wco_matrix(AnalyticSymbol.constant(1.0), psi, hardy, hardy, M)
    return TruncatedOperator(
        matrix=first.matrix - second.matrix,
        source_space=hardy,
        target_space=hardy,
        truncation_order=first.truncation_order,
        tail_estimate=first.tail_estimate + second.tail_estimate,
        label="C_(u,phi) - C_psi on H^2",
    )
