"""
Reproducing kernels of A^2_alpha

K_z(w) = (1 - conj(z) w)^{-(2+alpha)} and K_z^{[n]} = d^n K_z / d conj(z)^n.
"""

import math

import numpy as np
from scipy.special import comb, poch

from ..geometry.disk import as_complex
from ..models.space import KernelSpec
from ..models.symbol import AnalyticSymbol
from .norms import monomial_norm_sq


def kernel_values(z: complex, order: int, alpha: float, w: np.ndarray) -> np.ndarray:
    c = 2.0 + alpha
    w = np.asarray(w, dtype=complex)
    base = (1.0 - np.conj(z) * w) ** (-(c + order))
    if order == 0:
        return base
    return poch(c, order) * w**order * base


def kernel_eval(k: KernelSpec, w):
    """
    K_z^{[n]}(w) = (2+alpha)_n w^n (1 - conj(z) w)^{-(2+alpha+n)}
    """
    value = kernel_values(k.base_point, k.order, k.alpha, as_complex(w))
    return value.item() if np.ndim(value) == 0 else value


def kernel_norm_sq(k: KernelSpec) -> float:
    """
    ||K_z^{[n]}||^2 = (K_z^{[n]})^{(n)}(z)

    Expanding the n-th w-derivative of w^n F^{(n)}(conj(z) w) with
    F(x) = (1-x)^{-(2+alpha)} gives
        sum_k C(n,k) n!/k! |z|^{2k} (2+alpha)_{n+k} (1-|z|^2)^{-(2+alpha+n+k)}.
    """
    c = 2.0 + k.alpha
    n = k.order
    x = abs(k.base_point) ** 2
    total = 0.0
    for j in range(n + 1):
        term = comb(n, j, exact=True) * math.factorial(n) / math.factorial(j)
        total += term * x**j * poch(c, n + j) * (1.0 - x) ** (-(c + n + j))
    return float(total)


def kernel_taylor(k: KernelSpec, degree: int) -> AnalyticSymbol:
    """
    Taylor polynomial of K_z^{[n]} in w up to `degree`

    The coefficient of w^m is m!/(m-n)! conj(z)^{m-n} / ||w^m||^2.
    """
    m = np.arange(degree + 1)
    coefficients = np.zeros(degree + 1, dtype=complex)
    tail = m[k.order :]
    falling = poch(tail - k.order + 1.0, k.order)
    coefficients[k.order :] = (
        falling * np.conj(k.base_point) ** (tail - k.order) / monomial_norm_sq(tail, k.alpha)
    )
    return AnalyticSymbol.poly(coefficients)


def kernel_norm_series(k: KernelSpec, degree: int) -> float:
    """Coefficient-series value of ||K_z^{[n]}||^2 truncated at `degree`"""
    coefficients = np.asarray(kernel_taylor(k, degree).coefficients, dtype=complex)
    moments = monomial_norm_sq(np.arange(degree + 1), k.alpha)
    return float(np.sum(np.abs(coefficients) ** 2 * moments))


def normalized_kernel(z: complex, order: int, alpha: float):
    """k_z^{[n]} = K_z^{[n]} / ||K_z^{[n]}|| as a vectorized callable"""
    norm = math.sqrt(kernel_norm_sq(KernelSpec(base_point=z, order=order, alpha=alpha)))
    return lambda w: kernel_values(z, order, alpha, w) / norm
