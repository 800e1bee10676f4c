from .algebra import derivative, multiply, scale, to_taylor
from .literal import emit_complex, emit_symbol, parse_complex, parse_symbol
from .validate import (
    build_quadruple,
    eval_symbol,
    g_region_mask,
    pseudo_distance_values,
    require_self_map,
    rho,
    rho_at,
    validate_self_map,
    validation_points,
)

__all__ = [
    "derivative",
    "multiply",
    "scale",
    "to_taylor",
    "emit_complex",
    "emit_symbol",
    "parse_complex",
    "parse_symbol",
    "build_quadruple",
    "eval_symbol",
    "g_region_mask",
    "pseudo_distance_values",
    "require_self_map",
    "rho",
    "rho_at",
    "validate_self_map",
    "validation_points",
]
