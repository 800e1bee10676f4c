"""
r-lattices: separation, covering and bounded multiplicity
"""

import numpy as np
import pytest

from bergoplab.geometry import (
    build_lattice,
    covering_multiplicity,
    multiplicity_bound,
    nearest_center_distance,
    pairwise_beta,
    sample_disk,
)
from bergoplab.utils.errors import LatticeSizeError, ParameterError


@pytest.fixture(scope="module")
def lattice():
    return build_lattice(1.0, 0.95)


def test_centers_are_separated(lattice):
    distances = pairwise_beta(lattice.points, lattice.points)
    np.fill_diagonal(distances, np.inf)
    assert distances.min() >= lattice.radius_r - 1e-9


def test_coverage_on_samples(lattice):
    samples = sample_disk(10000, lattice.coverage_radius)
    assert nearest_center_distance(lattice, samples).max() < lattice.radius_r


@pytest.fixture(scope="module")
def reversed_lattice():
    return build_lattice(1.0, 0.95, ordering="reversed")


def test_packing_bound():
    # sinh(1.5)^2 / sinh(0.5)^2
    assert multiplicity_bound(1.0, 1.0) == 16
    assert multiplicity_bound(1.0, 4.0) > multiplicity_bound(1.0, 2.0)


def test_reversed_ordering_is_an_independent_construction(lattice, reversed_lattice):
    assert reversed_lattice.ordering == "reversed"
    assert set(np.round(reversed_lattice.points, 9)) != set(np.round(lattice.points, 9))
    distances = pairwise_beta(reversed_lattice.points, reversed_lattice.points)
    np.fill_diagonal(distances, np.inf)
    assert distances.min() >= 1.0 - 1e-9
    samples = sample_disk(10000, 0.95)
    assert nearest_center_distance(reversed_lattice, samples).max() < 1.0


@pytest.mark.parametrize("factor", [1.0, 2.0])
def test_multiplicity_is_bounded_in_both_orderings(lattice, reversed_lattice, factor):
    bound = multiplicity_bound(1.0, factor)
    for built in (lattice, reversed_lattice):
        count = covering_multiplicity(built, factor)
        # every sample is covered, so some center is within r
        assert 1 <= count <= bound
        assert count == covering_multiplicity(built, factor)


def test_multiplicity_at_factor_four(lattice, reversed_lattice):
    bound = multiplicity_bound(1.0, 4.0)
    for built in (lattice, reversed_lattice):
        count = covering_multiplicity(built, 4.0)
        assert 1 <= count <= min(bound, len(built))


def test_lattice_is_deterministic(lattice):
    again = build_lattice(1.0, 0.95)
    assert again.centers == lattice.centers


def test_size_cap():
    with pytest.raises(LatticeSizeError):
        build_lattice(0.2, 0.999, max_points=100)


@pytest.mark.parametrize("r, coverage", [(0.0, 0.5), (6.0, 0.5), (1.0, 1.0)])
def test_parameter_ranges(r, coverage):
    with pytest.raises(ParameterError):
        build_lattice(r, coverage)


def test_unknown_ordering():
    with pytest.raises(ParameterError):
        build_lattice(1.0, 0.5, ordering="random")
