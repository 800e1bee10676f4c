"""
Pointwise estimates as measurable ratios

Each function returns the ratio whose boundedness is the estimate; callers
record the observed bracket.
"""

import math

import numpy as np

from ..models.space import SpaceParams
from ..models.symbol import AnalyticSymbol
from ..geometry.disk import pseudo_distance
from ..quadrature.integrate import integrate_pseudo_disk


def local_mass(f: AnalyticSymbol, z: complex, r: float, space: SpaceParams) -> float:
    """int_{D(z, r)} |f|^p dA_alpha"""
    p = space.p
    return integrate_pseudo_disk(lambda w: np.abs(f(w)) ** p, z, math.tanh(r), space.alpha).real


def derivative_estimate_ratio(
    f: AnalyticSymbol, z: complex, r: float, n: int, space: SpaceParams
) -> float:
    """
    |f^{(n)}(z)|^p (1-|z|^2)^{2+alpha+np} / int_{D(z,r)} |f|^p dA_alpha
    """
    p = space.p
    mass = local_mass(f, z, r, space)
    value = abs(complex(f.evaluate(z, n))) ** p * (1.0 - abs(z) ** 2) ** (2.0 + space.alpha + n * p)
    return value / mass if mass > 0 else 0.0


def oscillation_estimate_ratio(
    f: AnalyticSymbol, z: complex, w: complex, r2: float, space: SpaceParams
) -> float:
    """
    |f(z) - f(w)|^p / (d(z,w)^p (1-|z|^2)^{-(2+alpha)} int_{D(z,r2)} |f|^p dA_alpha)

    Meaningful for beta(z, w) < r1 < r2.
    """
    p = space.p
    d = pseudo_distance(z, w)
    if d == 0:
        return 0.0
    mass = local_mass(f, z, r2, space)
    bound = d**p * (1.0 - abs(z) ** 2) ** (-(2.0 + space.alpha)) * mass
    return abs(complex(f(z)) - complex(f(w))) ** p / bound if bound > 0 else 0.0
