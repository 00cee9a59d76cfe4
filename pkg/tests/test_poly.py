import pytest
from hypothesis import given, settings, strategies

from accyclic.errors import (
    DivisionByZero,
    NotMonic,
)
from accyclic.gf import field_of_order
from accyclic.poly import (
    CONSTANT,
    LinearPower,
    Poly,
    is_power_of_linear,
    parse_poly,
    poly_arith,
    roots_in_field,
)

GF2 = field_of_order(2)
GF3 = field_of_order(3)
GF9 = field_of_order(9)


@strategies.composite
def polys(draw, ctx=GF3, max_degree=6):
    coeffs = draw(strategies.lists(strategies.integers(0, ctx.q - 1), max_size=max_degree + 1))
    return Poly.of(ctx, coeffs)


def test_parse_and_text():
    f = parse_poly(GF2, '1 1 1')
    assert f.degree == 2
    assert f.text() == '1 1 1'
    assert str(f) == 'x^2 + x + 1'


def test_parse_rejects_foreign_coefficients():
    with pytest.raises(ValueError):
        parse_poly(GF2, '1 2')


def test_zero_degree():
    assert Poly.zero(GF3).degree < 0
    assert Poly.zero(GF3).is_zero


def test_divrem_by_zero():
    with pytest.raises(DivisionByZero):
        Poly.x(GF3).divrem(Poly.zero(GF3))


def test_gcd_is_monic():
    x = Poly.x(GF3)
    f = (x - Poly.const(GF3, 1)) * (x - Poly.const(GF3, 2))
    g = (x - Poly.const(GF3, 1)).scale(2)
    assert f.gcd(g) == x - Poly.const(GF3, 1)


def test_power_of_linear():
    f = Poly.linear(GF3, 2) ** 4
    assert is_power_of_linear(f) == LinearPower(alpha=2, k=4)
    assert is_power_of_linear(Poly.const(GF3, 1)) == CONSTANT
    assert is_power_of_linear(Poly.linear(GF3, 1) * Poly.linear(GF3, 2)) is None


def test_power_of_linear_at_characteristic_degree():
    # (x - a)^p = x^p - a^p, so the root has to come from a p-th root
    for a in GF9.elements():
        f = Poly.linear(GF9, a) ** 3
        assert is_power_of_linear(f) == LinearPower(alpha=a, k=3)
        g = Poly.linear(GF9, a) ** 6
        assert is_power_of_linear(g) == LinearPower(alpha=a, k=6)


def test_power_of_linear_needs_monic():
    with pytest.raises(NotMonic):
        is_power_of_linear(Poly.of(GF3, [1, 2]))


def test_irreducible_is_not_a_linear_power():
    assert is_power_of_linear(parse_poly(GF2, '1 1 1')) is None


def test_roots_in_field():
    x = Poly.x(GF3)
    f = (x - Poly.const(GF3, 1)) ** 2 * (x - Poly.const(GF3, 2)) * parse_poly(GF3, '1 0 1')
    assert roots_in_field(f) == [(1, 2), (2, 1)]


def test_poly_arith_dispatch():
    f = parse_poly(GF3, '1 1')
    g = parse_poly(GF3, '2 1')
    assert poly_arith(f, g, 'add') == f + g
    assert poly_arith(f, g, 'eval', point=2) == f.eval(2)
    with pytest.raises(ValueError):
        poly_arith(f, g, 'compose')


@settings(max_examples=300)
@given(polys(), polys())
def test_divrem_reconstructs(f, g):
    if g.is_zero:
        return
    quot, rem = f.divrem(g)
    assert quot * g + rem == f
    assert rem.is_zero or rem.degree < g.degree


@settings(max_examples=200)
@given(polys(), polys())
def test_gcd_divides_both(f, g):
    if f.is_zero and g.is_zero:
        return
    d = f.gcd(g)
    assert d.divides(f)
    assert d.divides(g)


@settings(max_examples=100)
@given(polys(max_degree=4))
def test_pow_mod_matches_power(f):
    modulus = parse_poly(GF3, '1 2 0 1')
    assert f.pow_mod(5, modulus) == (f ** 5) % modulus
