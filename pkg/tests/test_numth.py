from fractions import Fraction

import pytest

from accyclic.errors import (
    NotCoprime,
    OutOfDomain,
    TowerMismatch,
)
from accyclic.numth import (
    Collapse,
    e_p,
    eta_gl,
    eta_gl_nn9,
    eta_sl,
    eta_with_field_auts,
    is_prime_power,
    mu_classical,
    order_cap_d4_semisimple,
    order_cap_exceptional,
    p_part,
    prime_power,
    twisted_exponent,
    vp,
)

ODD_PRIMES = [3, 5, 7, 11, 13]
PRIME_POWERS = [q for q in range(2, 65) if is_prime_power(q)]


@pytest.mark.parametrize('m, p, expected', [(48, 2, 16), (72, 3, 9), (7, 2, 1)])
def test_p_part(m, p, expected):
    assert p_part(m, p) == expected


def test_vp():
    assert vp(48, 2).m == 4
    assert vp(48, 2).value == 16


def test_prime_power():
    assert prime_power(64) == (2, 6)
    with pytest.raises(OutOfDomain):
        prime_power(12)
    with pytest.raises(OutOfDomain):
        prime_power(1)


@pytest.mark.parametrize('q, p, expected', [(2, 3, 2), (7, 2, 2), (7, 5, 4), (5, 2, 1)])
def test_e_p(q, p, expected):
    assert e_p(q, p) == expected


def test_e_p_needs_coprime():
    with pytest.raises(NotCoprime):
        e_p(9, 3)


@pytest.mark.parametrize('p, n, q, expected', [
    (2, 2, 3, 8),
    (3, 3, 4, 9),
    (3, 2, 2, 3),
    (2, 2, 5, 8),
])
def test_eta_gl(p, n, q, expected):
    assert eta_gl(p, n, q) == expected


def test_eta_gl_without_p_elements():
    # e_5(2) = 4 > 3
    assert eta_gl(5, 3, 2) == 1


def test_eta_gl_defining_characteristic():
    assert eta_gl(2, 2, 2) == 2
    assert eta_gl(2, 3, 2) == 4
    assert eta_gl(3, 4, 3) == 9


def test_eta_gl_nn9_form():
    assert eta_gl_nn9(2, 3) == 8
    assert eta_gl_nn9(4, 5) == 16
    with pytest.raises(OutOfDomain):
        eta_gl_nn9(1, 3)


def test_eta_sl():
    # SL_2(3) has quaternion Sylow 2-subgroups
    assert eta_sl(2, 2, 3) == 4
    assert eta_sl(3, 3, 4) == 3
    assert eta_sl(3, 3, 2) == 3
    with pytest.raises(OutOfDomain):
        eta_sl(2, 4, 3)


def test_field_auts_sl2_over_gf4():
    result = eta_with_field_auts(2, lambda q: eta_sl(2, 2, q), 2, 1)
    assert result.value == 4
    assert result.collapse == Collapse.DEFINING


def test_field_auts_coprime_collapse():
    result = eta_with_field_auts(3, lambda q: eta_sl(3, 2, q), 2, 1, q=8)
    assert result.value == 9
    assert result.collapse == Collapse.COPRIME
    assert result.collapse_holds


def test_field_auts_defining_multiplies():
    result = eta_with_field_auts(3, lambda q: eta_gl(3, 2, q), 3, 1)
    assert result.value == 3 * eta_gl(3, 2, 27)
    assert result.collapse_holds


def test_field_auts_tower_mismatch():
    with pytest.raises(TowerMismatch):
        eta_with_field_auts(2, lambda q: eta_gl(2, 2, q), 3, 1, q=27)
    with pytest.raises(TowerMismatch):
        eta_with_field_auts(2, lambda q: eta_gl(2, 2, q), 3, -1)


def test_mu_classical():
    assert mu_classical('PSL', 3, 2).cap == 7
    assert mu_classical('PSU', 4, 2).cap == 12
    assert mu_classical('PSp', 2, 3).cap == Fraction(27, 2)
    assert mu_classical('psp', 2, 2).cap == 8
    with pytest.raises(OutOfDomain):
        mu_classical('PSU', 2, 3)
    with pytest.raises(OutOfDomain):
        mu_classical('PSO', 4, 3)


@pytest.mark.parametrize('family, q, expected', [('2B2', 8, 39), ('G2', 3, 26), ('3D4', 2, 63)])
def test_order_cap_exceptional(family, q, expected):
    cap = order_cap_exceptional(family, q)
    assert cap.cap == expected
    assert cap.cite == 'exc:table2'


def test_twisted_shape():
    assert twisted_exponent(32, 2) == 2
    with pytest.raises(OutOfDomain):
        twisted_exponent(4, 2)
    with pytest.raises(OutOfDomain):
        order_cap_exceptional('2B2', 2)


def test_d4_semisimple_table():
    assert order_cap_d4_semisimple(2).cap == 13
    with pytest.raises(OutOfDomain):
        order_cap_d4_semisimple(6)


def test_e_p_stable_under_p_power_fields():
    for p in ODD_PRIMES:
        for q in PRIME_POWERS:
            if q % p == 0:
                continue
            for k in range(1, 4):
                assert e_p(q ** (p ** k), p) == e_p(q, p), (p, q, k)


def test_p_part_lifting():
    for p in [2, *ODD_PRIMES]:
        for q in PRIME_POWERS:
            if (q - 1) % (4 if p == 2 else p) != 0:
                continue
            for k in range(1, 4):
                assert p_part(q ** (p ** k) - 1, p) == p ** k * p_part(q - 1, p), (p, q, k)


def test_eta_doubles_over_quadratic_extension():
    for q0 in [3, 5, 7, 9]:
        for n in range(2, 7):
            assert eta_gl(2, n, q0 * q0) == 2 * eta_gl(2, n, q0), (n, q0)


def test_order_of_q_mod_p_is_small():
    for p in ODD_PRIMES:
        for q in PRIME_POWERS:
            if q % p == 0:
                continue
            e = e_p(q, p)
            if e > 1:
                assert e * (q - 1) < q ** e - 1, (p, q)


def test_eta_gl_forms_agree_for_p_2():
    for q in PRIME_POWERS:
        if q % 2 == 0:
            continue
        for n in range(2, 13):
            assert eta_gl(2, n, q) == eta_gl_nn9(n, q)
