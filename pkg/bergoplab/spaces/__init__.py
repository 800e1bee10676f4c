from .estimates import derivative_estimate_ratio, local_mass, oscillation_estimate_ratio
from .kernels import (
    kernel_eval,
    kernel_norm_series,
    kernel_norm_sq,
    kernel_taylor,
    kernel_values,
    normalized_kernel,
)
from .norms import (
    basis_norms,
    bergman_p_norm,
    circle_mean,
    hardy_norm,
    inner_product,
    littlewood_paley_check,
    lp_integral,
    monomial_norm_sq,
)
from .testfunctions import (
    atom_function,
    test_function,
    test_function_callable,
    test_function_norm,
    test_function_values,
)

__all__ = [
    "derivative_estimate_ratio",
    "local_mass",
    "oscillation_estimate_ratio",
    "kernel_eval",
    "kernel_norm_series",
    "kernel_norm_sq",
    "kernel_taylor",
    "kernel_values",
    "normalized_kernel",
    "basis_norms",
    "bergman_p_norm",
    "circle_mean",
    "hardy_norm",
    "inner_product",
    "littlewood_paley_check",
    "lp_integral",
    "monomial_norm_sq",
    "atom_function",
    "test_function",
    "test_function_callable",
    "test_function_norm",
    "test_function_values",
]
