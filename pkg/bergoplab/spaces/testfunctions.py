"""
Test-function families

F^{[i]}_{a,N}(z) = z^i / (1 - conj(a) z)^{N+i}, normalized to unit size in
A^p_alpha (f family) or H^p (g family), and lattice atoms
H^{[i]}_{N,p} = sum_j c_j f^{[i]}_{a_j,N,p}.
"""

from typing import Callable, Optional, Sequence

import numpy as np

from ..geometry.disk import as_complex
from ..models.geometry import Lattice
from ..models.quadrature import QuadGrid
from ..models.space import SpaceParams, TestFamily, TestFunctionSpec
from ..utils.errors import ParameterError
from .norms import bergman_p_norm, hardy_norm


def _atom(a: complex, exponent: float, N: int, i: int, z: np.ndarray) -> np.ndarray:
    scale = (1.0 - abs(a) ** 2) ** exponent
    return scale * z**i / (1.0 - np.conj(a) * z) ** (N + i)


def test_function_values(spec: TestFunctionSpec, z) -> np.ndarray:
    z = as_complex(z)
    exponent = spec.normalizing_exponent
    if spec.family == TestFamily.ATOM_H:
        out = np.zeros(np.shape(z), dtype=complex)
        for a, c in zip(spec.centers, spec.coefficients):
            if c != 0:
                out = out + c * _atom(a, exponent, spec.N, spec.i, z)
        return out
    return _atom(spec.a, exponent, spec.N, spec.i, z)


test_function_values.__test__ = False


def test_function(spec: TestFunctionSpec, z):
    """Value of the normalized test function at z"""
    value = test_function_values(spec, z)
    return value.item() if np.ndim(value) == 0 else value


test_function.__test__ = False


def test_function_callable(spec: TestFunctionSpec) -> Callable[[np.ndarray], np.ndarray]:
    return lambda z: test_function_values(spec, z)


test_function_callable.__test__ = False


def atom_function(
    lattice: Lattice,
    coefficients: Sequence[complex],
    N: Optional[int],
    i: int,
    space: SpaceParams,
    z,
):
    """
    H^{[i]}_{N,p}(z) over the lattice points

    Raises:
        ParameterError: coefficient count differs from the lattice size, or N
            violates N > max{1, 1/p} + (1+alpha)/p
    """
    if len(coefficients) != len(lattice):
        raise ParameterError(
            f"atom needs one coefficient per lattice point: "
            f"{len(coefficients)} coefficients for {len(lattice)} points"
        )
    try:
        spec = TestFunctionSpec(
            family=TestFamily.ATOM_H,
            centers=list(lattice.centers),
            coefficients=[complex(c) for c in coefficients],
            N=N,
            i=i,
            space=space,
        )
    except ValueError as e:
        raise ParameterError(str(e)) from e
    return test_function(spec, z)


def test_function_norm(spec: TestFunctionSpec, grid: Optional[QuadGrid] = None) -> float:
    """||f||_{A^p_alpha}, or ||g||_{H^p} for the Hardy family"""
    f = test_function_callable(spec)
    if spec.family == TestFamily.HARDY_G:
        return hardy_norm(f, spec.space.p)
    return bergman_p_norm(f, spec.space, grid)


test_function_norm.__test__ = False
