from .disk import (
    as_complex,
    bergman_distance,
    check_inside,
    mobius,
    one_minus_distance_sq,
    pairwise_beta,
    pseudo_disk_arrays,
    pseudo_disk_euclidean,
    pseudo_distance,
)
from .lattice import (
    build_lattice,
    covering_multiplicity,
    multiplicity_bound,
    nearest_center_distance,
    sample_disk,
)

__all__ = [
    "as_complex",
    "bergman_distance",
    "check_inside",
    "mobius",
    "one_minus_distance_sq",
    "pairwise_beta",
    "pseudo_disk_arrays",
    "pseudo_disk_euclidean",
    "pseudo_distance",
    "build_lattice",
    "covering_multiplicity",
    "multiplicity_bound",
    "nearest_center_distance",
    "sample_disk",
]
