"""
Pull-back measures, averaging functions, Berezin transforms and Toeplitz matrices
"""

from .averaging import (
    averaged_measure,
    averaging_function,
    averaging_lambda_norms,
    averaging_values,
    carleson_statistics,
    disk_masses,
    lambda_norm,
    lattice_points,
    pullback_integral,
)
from .berezin import berezin_schatten_bound, berezin_transform, berezin_values, rkt_integral
from .measures import (
    area_measure,
    check_beta,
    criterion_measures,
    default_beta,
    derivative_measure,
    omega_measure,
    sigma_measure,
)
from .toeplitz import (
    averaged_toeplitz_bound,
    bounded_density_battery,
    toeplitz_coherence,
    toeplitz_matrix,
)

__all__ = [
    "pullback_integral",
    "disk_masses",
    "averaging_values",
    "averaging_function",
    "averaged_measure",
    "averaging_lambda_norms",
    "lattice_points",
    "lambda_norm",
    "carleson_statistics",
    "berezin_values",
    "berezin_transform",
    "rkt_integral",
    "berezin_schatten_bound",
    "area_measure",
    "omega_measure",
    "sigma_measure",
    "criterion_measures",
    "derivative_measure",
    "default_beta",
    "check_beta",
    "toeplitz_matrix",
    "toeplitz_coherence",
    "averaged_toeplitz_bound",
    "bounded_density_battery",
]
