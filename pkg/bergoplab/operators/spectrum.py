"""
Singular values, Schatten norms and decay classification
"""

from typing import Optional, Tuple, Union

import numpy as np
import scipy.linalg as sla
from loguru import logger

from ..models.operator import DecayFit, DecayKind, SingularSpectrum, TruncatedOperator
from ..utils.config import config
from ..utils.errors import ParameterError, SpectrumError


def singular_values(T: Union[TruncatedOperator, np.ndarray]) -> SingularSpectrum:
    """
    SVD of the truncation

    gesdd first, gesvd as fallback; raises SpectrumError with diagnostics
    when neither converges.
    """
    matrix = T.matrix if isinstance(T, TruncatedOperator) else np.asarray(T)
    diagnostics = {"shape": matrix.shape}

    if not np.all(np.isfinite(matrix)):
        raise SpectrumError("matrix has non-finite entries", diagnostics)
    if not np.any(matrix):
        return SingularSpectrum(values=np.zeros(min(matrix.shape)))

    for driver in ("gesdd", "gesvd"):
        try:
            values = sla.svd(matrix, compute_uv=False, lapack_driver=driver)
            return SingularSpectrum(values=np.maximum.accumulate(values[::-1])[::-1])
        except np.linalg.LinAlgError as e:
            logger.warning(f"SVD ({driver}) did not converge: {e}")

    diagnostics["frobenius"] = float(np.linalg.norm(matrix))
    diagnostics["one_norm"] = float(np.linalg.norm(matrix, 1))
    raise SpectrumError("SVD did not converge", diagnostics)


def schatten_norm(s: Union[SingularSpectrum, np.ndarray], p: float) -> float:
    """(sum s_k^p)^{1/p}, evaluated relative to s_1 to avoid overflow"""
    if not p > 0:
        raise ParameterError(f"Schatten exponent must be positive, got p = {p}")
    values = s.values if isinstance(s, SingularSpectrum) else np.asarray(s, dtype=float)
    top = float(values.max()) if len(values) else 0.0
    if top == 0.0:
        return 0.0
    return top * float(np.sum((values / top) ** p)) ** (1.0 / p)


def _fit(x: np.ndarray, y: np.ndarray) -> Tuple[float, float]:
    """Slope and RMS residual of a least-squares line"""
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    return float(slope), float(np.sqrt(np.mean(residual**2)))


def classify_decay(
    spectrum: SingularSpectrum,
    flat_ratio: Optional[float] = None,
    fit_floor: Optional[float] = None,
    flat_rate: Optional[float] = None,
) -> DecayFit:
    """
    Geometric, power-law or flat reading of a spectrum

    Only the first half of the spectrum is fitted (the second half feels the
    truncation) and only values above fit_floor * s_1. The trailing ratio is
    read at the last value of that half, or one past it when the numerical
    rank stops earlier. Above flat_ratio it reads as no decay, and so does a
    full half whose fitted geometric rate reaches flat_rate. A spectrum that
    drops to zero inside the half is a finite-rank reading and is fitted as
    usual.
    """
    if flat_ratio is None:
        flat_ratio = float(config.get("operators", "flat_ratio", default=0.05))
    if fit_floor is None:
        fit_floor = float(config.get("operators", "fit_floor", default=1e-13))
    if flat_rate is None:
        flat_rate = float(config.get("operators", "flat_rate", default=0.999))

    values = spectrum.values
    top = spectrum.largest
    if top == 0.0:
        return DecayFit(kind=DecayKind.ZERO, trailing_ratio=0.0, fitted_count=0)

    half = max(1, len(values) // 2)
    rank = int(np.count_nonzero(values > fit_floor * top))
    index = half - 1 if rank >= half else min(half, len(values) - 1)
    trailing = float(values[index] / top)
    if trailing > flat_ratio:
        logger.debug(f"flat spectrum: rank {rank} of {len(values)}, trailing ratio {trailing:.3g}")
        return DecayFit(kind=DecayKind.FLAT, trailing_ratio=trailing, fitted_count=0)

    head = values[:half]
    usable = min(rank, len(head))
    if usable < 3:
        rate = float(head[usable - 1] / top) ** (1.0 / (usable - 1)) if usable == 2 else 0.0
        return DecayFit(
            kind=DecayKind.GEOMETRIC, rate=rate, trailing_ratio=trailing, fitted_count=usable
        )

    k = np.arange(usable, dtype=float)
    logs = np.log(head[:usable])
    geometric_slope, geometric_residual = _fit(k, logs)
    power_slope, power_residual = _fit(np.log(k + 1.0), logs)

    rate = float(np.exp(geometric_slope))
    if usable == len(head) and rate >= flat_rate:
        return DecayFit(
            kind=DecayKind.FLAT, rate=rate, trailing_ratio=trailing, fitted_count=usable
        )

    if geometric_residual <= power_residual:
        return DecayFit(
            kind=DecayKind.GEOMETRIC,
            rate=rate,
            trailing_ratio=trailing,
            fitted_count=usable,
        )
    return DecayFit(
        kind=DecayKind.POWER,
        exponent=float(-power_slope),
        trailing_ratio=trailing,
        fitted_count=usable,
    )
