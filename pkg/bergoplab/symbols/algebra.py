"""
Symbol algebra

Derivatives, products, scalings and Taylor truncations. Results involving a
linear-fractional factor are Taylor polynomials carrying a certified
sup-norm bound of the dropped tail.
"""

from typing import Optional

import numpy as np
from numpy.polynomial import polynomial as P

from ..models.symbol import AnalyticSymbol, SymbolKind, SymbolRole
from ..utils.config import config


def _default_degree() -> int:
    return config.truncation + config.guard


def to_taylor(s: AnalyticSymbol, degree: Optional[int] = None) -> AnalyticSymbol:
    """Taylor polynomial of degree `degree` with the tail bound attached"""
    if s.kind == SymbolKind.POLY and (degree is None or s.degree <= degree):
        return s
    degree = _default_degree() if degree is None else degree
    coefficients, tail = s.taylor(degree)
    return AnalyticSymbol(
        kind=SymbolKind.POLY, coefficients=list(coefficients), role=s.role, tail_bound=tail
    )


def derivative(s: AnalyticSymbol, degree: Optional[int] = None) -> AnalyticSymbol:
    """
    s'

    Exact for polynomials. For (az+b)/(cz+d) the derivative
    (ad-bc)/d^2 * sum (k+1) q^k z^k, q = -c/d, is truncated at `degree`.
    """
    if s.kind == SymbolKind.POLY:
        if s.tail_bound > 0:
            raise ValueError("derivative of a truncated series has no sup-norm tail bound")
        coefficients = np.asarray(s.coefficients, dtype=complex)
        if len(coefficients) == 1:
            return AnalyticSymbol.constant(0.0, role=SymbolRole.WEIGHT)
        return AnalyticSymbol.poly(P.polyder(coefficients), role=SymbolRole.WEIGHT)

    degree = _default_degree() if degree is None else degree
    a, b, c, d = s.lft
    det = a * d - b * c
    q = -c / d
    k = np.arange(degree + 1)
    coefficients = det / d**2 * (k + 1) * q**k

    qa = abs(q)
    n = degree
    tail = 0.0
    if qa:
        tail = abs(det / d**2) * qa ** (n + 1) * ((n + 2) - (n + 1) * qa) / (1.0 - qa) ** 2
    return AnalyticSymbol(
        kind=SymbolKind.POLY,
        coefficients=list(coefficients),
        role=SymbolRole.WEIGHT,
        tail_bound=tail,
    )


def scale(s: AnalyticSymbol, factor: complex) -> AnalyticSymbol:
    factor = complex(factor)
    if s.kind == SymbolKind.LFT:
        a, b, c, d = s.lft
        return s.model_copy(update={"lft": [factor * a, factor * b, c, d]})
    return s.model_copy(
        update={
            "coefficients": [factor * c for c in s.coefficients],
            "tail_bound": abs(factor) * s.tail_bound,
        }
    )


def multiply(
    s1: AnalyticSymbol, s2: AnalyticSymbol, degree: Optional[int] = None
) -> AnalyticSymbol:
    """
    s1 * s2 as a Taylor polynomial

    With f_i = p_i + e_i the product tail is bounded by
    |p1| e2 + e1 |p2| + e1 e2 on the closed disk.
    """
    t1 = to_taylor(s1, degree)
    t2 = to_taylor(s2, degree)
    coefficients = P.polymul(
        np.asarray(t1.coefficients, dtype=complex), np.asarray(t2.coefficients, dtype=complex)
    )
    e1, e2 = t1.tail_bound, t2.tail_bound
    p1 = float(np.sum(np.abs(t1.coefficients)))
    p2 = float(np.sum(np.abs(t2.coefficients)))
    return AnalyticSymbol(
        kind=SymbolKind.POLY,
        coefficients=list(coefficients),
        role=SymbolRole.WEIGHT,
        tail_bound=p1 * e2 + e1 * p2 + e1 * e2,
    )
