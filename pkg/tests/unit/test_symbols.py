"""
Symbol literals, algebra and self-map validation
"""

import numpy as np
import pytest

from bergoplab.models import AnalyticSymbol, SymbolKind, SymbolRole
from bergoplab.symbols import (
    build_quadruple,
    derivative,
    emit_symbol,
    multiply,
    parse_complex,
    parse_symbol,
    require_self_map,
    rho_at,
    scale,
    validate_self_map,
)
from bergoplab.utils.errors import ConfigError, SelfMapError

from conftest import poly


@pytest.mark.parametrize(
    "literal",
    [
        {"poly": [[1, 0], [0.5, -0.25]]},
        {"poly": [0, 0, 0.5]},
        {"lft": {"a": [1, 0], "b": [0, 0], "c": [-1, 0], "d": [3, 0]}},
    ],
)
def test_parse_emit_round_trip(literal):
    symbol = parse_symbol(literal, SymbolRole.SELF_MAP)
    again = parse_symbol(emit_symbol(symbol), SymbolRole.SELF_MAP)
    assert again == symbol


def test_string_literal_matches_mapping():
    from_text = parse_symbol("lft: {a: 1, b: 0, c: -1, d: 3}")
    from_mapping = parse_symbol({"lft": [1, 0, -1, 3]})
    assert from_text.kind == SymbolKind.LFT
    assert from_text.lft == from_mapping.lft
    assert from_text(0.0) == 0
    assert from_text(1.0) == pytest.approx(0.5)


def test_complex_entries():
    assert parse_complex([0.5, -1]) == 0.5 - 1j
    assert parse_complex("1+2j") == 1 + 2j
    assert parse_complex(3) == 3
    with pytest.raises(ConfigError):
        parse_complex([1, 2, 3], "u.poly[0]")
    with pytest.raises(ConfigError):
        parse_complex("abc")


@pytest.mark.parametrize(
    "literal",
    [
        {"poly": []},
        {"poly": [1], "lft": [1, 0, 0, 1]},
        {"taylor": [1]},
        {"lft": [1, 0, 2, 1]},
        {"lft": {"a": 1, "b": 0}},
        "poly: [1, ",
    ],
)
def test_malformed_literals(literal):
    with pytest.raises(ConfigError):
        parse_symbol(literal, field="phi")


def test_config_error_carries_field():
    with pytest.raises(ConfigError) as info:
        parse_symbol({"poly": [[1, 2, 3]]}, field="u")
    assert info.value.field == "u.poly[0]"


def test_polynomial_derivative_is_exact():
    s = poly(1, 2, 3)
    assert derivative(s).coefficients == [2, 6]
    assert derivative(poly(5)).is_zero


def test_lft_derivative_tail_bound_holds():
    s = AnalyticSymbol.linear_fractional(1, 0.2, -1, 3)
    d = derivative(s, degree=40)
    z = 0.95 * np.exp(1j * np.linspace(0.0, 2.0 * np.pi, 64))
    error = np.abs(d(z) - s.evaluate(z, 1))
    assert error.max() <= d.tail_bound + 1e-12


def test_multiply_and_scale():
    product = multiply(poly(1, 1), poly(1, -1))
    assert np.allclose(product.coefficients, [1, 0, -1])
    assert product.tail_bound == 0.0
    assert scale(poly(1, 2), 2j).coefficients == [2j, 4j]


def test_product_with_lft_tail_bound_holds():
    s = AnalyticSymbol.linear_fractional(1, 0, 1, 2)
    product = multiply(poly(0, 1), s, degree=30)
    z = np.exp(1j * np.linspace(0.0, 2.0 * np.pi, 128, endpoint=False))
    error = np.abs(product(z) - z * s(z))
    assert error.max() <= product.tail_bound + 1e-12


def test_self_map_witness():
    s = poly(0, 1.1)
    with pytest.raises(SelfMapError) as info:
        require_self_map(s, "phi")
    witness = info.value.witness
    assert abs(witness) < 1.0
    assert abs(s(witness)) > 1.0
    assert "phi" in str(info.value)


def test_identity_touches_boundary_only_in_the_limit():
    report = validate_self_map(poly(0, 1))
    assert report.passed
    assert report.sup_value == pytest.approx(1.0 - 2.0**-20)


def test_build_quadruple_sets_roles(half_map):
    assert half_map.phi.role == SymbolRole.SELF_MAP
    assert half_map.u.role == SymbolRole.WEIGHT
    with pytest.raises(SelfMapError):
        build_quadruple(poly(1), poly(1), poly(0.5, 0.6), poly(0))


def test_rho_of_two_constants():
    q4 = build_quadruple(poly(1), poly(1), poly(0.5), poly(0))
    assert rho_at(q4, 0.3) == pytest.approx(0.5)
