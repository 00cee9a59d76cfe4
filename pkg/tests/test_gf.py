import pytest
from hypothesis import given, settings, strategies

from accyclic.errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldTooLarge,
    NotMonic,
    NotPrime,
    ReducibleModulus,
    TowerMismatch,
)
from accyclic.gf import (
    Fel,
    field_arith,
    field_create,
    field_embedding,
    field_of_order,
)

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49]


@strategies.composite
def field_and_elements(draw, count=3):
    ctx = field_of_order(draw(strategies.sampled_from(ORDERS)))
    elements = [draw(strategies.integers(min_value=0, max_value=ctx.q - 1)) for _ in range(count)]
    return ctx, elements


def test_gf4_modulus_reduction():
    gf4 = field_create(2, 2)
    assert gf4.modulus == (1, 1, 1)
    assert gf4.mul(2, 2) == 3
    assert gf4.add(2, 3) == 1


def test_prime_field_arith():
    gf7 = field_create(7)
    assert gf7.mul(3, 5) == 1
    assert gf7.inv(3) == 5
    assert gf7.neg(2) == 5
    assert gf7.pow(3, 6) == 1


def test_field_of_order_rejects_non_prime_powers():
    with pytest.raises(NotPrime):
        field_of_order(12)
    with pytest.raises(NotPrime):
        field_create(9)


def test_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        field_create(2, 2, [1, 0, 1])


def test_modulus_must_be_monic_of_the_right_degree():
    with pytest.raises(NotMonic):
        field_create(2, 2, [1, 1, 1, 0])
    with pytest.raises(NotMonic):
        field_create(3, 2, [1, 0, 2])
    with pytest.raises(DegreeMismatch):
        field_create(2, 3, [1, 1, 1])
    assert field_create(3, 2, [1, 0, 4]).modulus == (1, 0, 1)


def test_field_too_large():
    with pytest.raises(FieldTooLarge):
        field_create(2, 21)


def test_zero_has_no_inverse():
    with pytest.raises(DivisionByZero):
        field_of_order(9).inv(0)


def test_primitive_element_generates():
    for q in ORDERS:
        ctx = field_of_order(q)
        assert ctx.element_order(ctx.primitive_element()) == q - 1


def test_frobenius_fixes_prime_field():
    ctx = field_of_order(27)
    for a in range(3):
        assert ctx.frobenius(a) == a
    assert any(ctx.frobenius(a) != a for a in ctx.elements())


def test_pth_root_inverts_frobenius():
    ctx = field_of_order(25)
    for a in ctx.elements():
        assert ctx.pth_root(ctx.frobenius(a)) == a


def test_fel_operators():
    ctx = field_of_order(9)
    a = Fel(ctx, 4)
    b = Fel(ctx, 7)
    assert int((a * b) / b) == 4
    assert int(a - a) == 0
    assert int(a ** 8) == 1
    assert field_arith(a, b, 'add') == a + b
    assert field_arith(a, None, 'inv') * a == Fel(ctx, 1)
    with pytest.raises(ValueError):
        field_arith(a, b, 'xor')


def test_embedding_is_a_homomorphism():
    src = field_of_order(4)
    dst = field_of_order(16)
    embed = field_embedding(src, dst)
    for a in src.elements():
        for b in src.elements():
            assert embed(src.add(a, b)) == dst.add(embed(a), embed(b))
            assert embed(src.mul(a, b)) == dst.mul(embed(a), embed(b))
    assert embed(1) == 1


def test_embedding_needs_a_tower():
    with pytest.raises(TowerMismatch):
        field_embedding(field_of_order(4), field_of_order(8))


@settings(max_examples=300)
@given(field_and_elements())
def test_field_axioms(data):
    ctx, (a, b, c) = data
    assert ctx.add(a, b) == ctx.add(b, a)
    assert ctx.mul(a, b) == ctx.mul(b, a)
    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
    assert ctx.add(a, ctx.neg(a)) == 0
    if a != 0:
        assert ctx.mul(a, ctx.inv(a)) == 1


@settings(max_examples=200)
@given(field_and_elements(count=2))
def test_frobenius_is_additive(data):
    ctx, (a, b) = data
    assert ctx.frobenius(ctx.add(a, b)) == ctx.add(ctx.frobenius(a), ctx.frobenius(b))
