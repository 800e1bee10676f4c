"""
Boundary trend test for profiles sampled at radii approaching 1
"""

from typing import Optional, Sequence, Tuple

import numpy as np

from ..models.operator import Trend
from ..utils.config import config


def decay_exponent(
    radii: Sequence[float], values: Sequence[float], tail: int = 4
) -> Optional[float]:
    """
    Least-squares exponent e of values ~ (1 - r^2)^e over the last radii

    None when fewer than two positive values are available.
    """
    r = np.asarray(radii, dtype=float)[-tail:]
    v = np.asarray(values, dtype=float)[-tail:]
    keep = v > 0
    if np.count_nonzero(keep) < 2:
        return None
    slope, _ = np.polyfit(np.log(1.0 - r[keep] ** 2), np.log(v[keep]), 1)
    return float(slope)


def classify_trend(
    radii: Sequence[float],
    values: Sequence[float],
    tol_vanish: Optional[float] = None,
    decay_exponent_min: Optional[float] = None,
    growth_factor: Optional[float] = None,
) -> Tuple[Trend, Optional[float]]:
    """
    vanishing / bounded / growing reading of a boundary profile

    Vanishing: the last two values lie below tol_vanish * max without
    increasing, or the values decrease over the last radii with fitted
    exponent at least decay_exponent_min, or the profile ends at zero after
    its maximum (a measure supported away from the circle). Growing:
    last / first >= growth_factor.
    """
    tol_vanish = config.tol_vanish if tol_vanish is None else tol_vanish
    if decay_exponent_min is None:
        decay_exponent_min = float(config.get("operators", "decay_exponent_min", default=0.5))
    if growth_factor is None:
        growth_factor = float(config.get("operators", "growth_factor", default=4.0))

    v = np.asarray(values, dtype=float)
    peak = float(v.max()) if len(v) else 0.0
    if peak <= 0.0:
        return Trend.VANISHING, None

    exponent = decay_exponent(radii, v)
    if len(v) >= 2 and np.all(v[-2:] < tol_vanish * peak) and v[-1] <= v[-2]:
        return Trend.VANISHING, exponent
    if v[-1] == 0.0 and int(np.argmax(v)) < len(v) - 1:
        return Trend.VANISHING, exponent

    tail = v[-4:]
    decreasing = bool(np.all(np.diff(tail) < 0))
    if decreasing and exponent is not None and exponent >= decay_exponent_min:
        return Trend.VANISHING, exponent

    if v[0] > 0 and v[-1] / v[0] >= growth_factor:
        return Trend.GROWING, exponent
    return Trend.BOUNDED, exponent
