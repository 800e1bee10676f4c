"""
Operator truncations, spectra and boundary profiles
"""

from .hs import hs_condition_integrals, hs_integral, hs_integrand, hs_norm_integral, hs_region_split
from .matrices import (
    combo_matrix,
    hardy_composition_matrix,
    hardy_to_bergman_matrix,
    multiplication_matrix,
    wco_matrix,
)
from .profile import testfn_compactness_profile
from .spectrum import classify_decay, schatten_norm, singular_values
from .trends import classify_trend, decay_exponent

__all__ = [
    "wco_matrix",
    "combo_matrix",
    "hardy_to_bergman_matrix",
    "hardy_composition_matrix",
    "multiplication_matrix",
    "singular_values",
    "schatten_norm",
    "classify_decay",
    "hs_integrand",
    "hs_integral",
    "hs_norm_integral",
    "hs_condition_integrals",
    "hs_region_split",
    "testfn_compactness_profile",
    "classify_trend",
    "decay_exponent",
]
