"""
Shared fixtures: seeded generators, small grids and a few symbols
"""

import numpy as np
import pytest

from bergoplab.models import AnalyticSymbol, CriterionParams, SpaceParams
from bergoplab.quadrature import build_grid
from bergoplab.symbols import build_quadruple


def poly(*coefficients) -> AnalyticSymbol:
    return AnalyticSymbol.poly(coefficients)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def grid():
    return build_grid(0.0, 96, 512)


@pytest.fixture
def half_map():
    """C_{z/2}: u = 1, v = 0, phi = z/2, psi = 0"""
    return build_quadruple(poly(1), poly(0), poly(0, 0.5), poly(0), label="C_(z/2)")


@pytest.fixture
def zero_difference():
    return build_quadruple(poly(1), poly(1), poly(0, 0.5), poly(0, 0.5), label="zero")


@pytest.fixture
def fast_params() -> CriterionParams:
    """Smaller truncation and profile radii for evaluator smoke tests"""
    return CriterionParams(
        sp=SpaceParams.bergman(0.0, 2.0, 2.0),
        M=80,
        radii=[0.3, 0.5, 0.7, 0.9, 0.95, 0.99],
    )
