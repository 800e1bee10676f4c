from .grid import build_grid, legendre_unit
from .integrate import (
    bergman_disk_mass,
    check_finite,
    evaluate_integrand,
    integrate,
    integrate_pseudo_disk,
    measure_weights,
    pseudo_disk_rule,
    tail_fraction,
)
from .masks import bergman_disk_mask, boundary_nodes, preimage_mask, pseudo_disk_mask

__all__ = [
    "build_grid",
    "legendre_unit",
    "bergman_disk_mass",
    "check_finite",
    "evaluate_integrand",
    "integrate",
    "integrate_pseudo_disk",
    "measure_weights",
    "pseudo_disk_rule",
    "tail_fraction",
    "bergman_disk_mask",
    "boundary_nodes",
    "preimage_mask",
    "pseudo_disk_mask",
]
