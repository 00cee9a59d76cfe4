"""
Order caps referenced by rule id. Each cap receives the family and the grid point.
"""

from typing import (
    Callable,
    Dict,
    Mapping,
)

from ..errors import OutOfDomain
from ..numth import (
    OrderCap,
    mu_classical,
    order_cap_d4_semisimple,
    order_cap_exceptional,
    prime_power,
    twisted_exponent,
    vp,
)

Point = Mapping[str, int]

_MU_FAMILY = {
    'PSL': 'PSL',
    'PSU': 'PSU',
    'PSp': 'PSP',
    'Omega-odd': 'PSP',
    'Omega-plus': 'PSP',
    'Omega-minus': 'PSP',
}


def _mu(family: str, point: Point) -> OrderCap:
    try:
        return mu_classical(_MU_FAMILY[family], point['n'], point['q'])
    except KeyError:
        raise OutOfDomain(f'no classical order cap for {family}')


def _table2(family: str, point: Point) -> OrderCap:
    return order_cap_exceptional(family, point['q'])


def _field_aut_semisimple(family: str, point: Point) -> OrderCap:
    p, m, q0 = point['p'], point['m'], point['q0']
    return OrderCap(family, (p, m, q0), p ** m * (q0 + 1), 't22:odd')


def _field_aut_2element(family: str, point: Point) -> OrderCap:
    m, q0 = point['m'], point['q0']
    return OrderCap(family, (m, q0), 2 ** (m + 1) * (q0 + 1), 't22:2-odd')


def _field_aut_unipotent(family: str, point: Point) -> OrderCap:
    m = point['m']
    return OrderCap(family, (m,), 2 ** (m + 1), 't22:2-even')


def _lu_exponents(point: Point) -> Mapping[str, int]:
    n, q = point['n'], point['q']
    p, a = prime_power(q)
    t = 0
    while p ** (t + 1) < n:
        t += 1
    return {'p': p, 't': t, 'm': vp(a, p).m}


def _lu_p2(family: str, point: Point) -> OrderCap:
    e = _lu_exponents(point)
    if e['p'] != 2:
        raise OutOfDomain(f'lu.p2 needs q even, got {point["q"]}')
    return OrderCap(family, (point['n'], point['q']), 2 ** (e['t'] + e['m'] + 2), 'LU:p2')


def _lu_odd(family: str, point: Point) -> OrderCap:
    e = _lu_exponents(point)
    if e['p'] == 2:
        raise OutOfDomain(f'lu.odd needs q odd, got {point["q"]}')
    return OrderCap(family, (point['n'], point['q']), e['p'] ** (e['t'] + e['m'] + 1), 'LU:odd')


def _suzuki_inner(family: str, point: Point) -> OrderCap:
    q = point['q']
    e = twisted_exponent(q, 2)
    return OrderCap(family, (q,), q + 2 ** (e + 1) + 1, 'except:2B2-inner')


def _suzuki_outer(family: str, point: Point) -> OrderCap:
    q = point['q']
    e = twisted_exponent(q, 2)
    return OrderCap(family, (q,), 2 * e + 1, 'except:2B2-outer')


def _d4_semisimple(family: str, point: Point) -> OrderCap:
    return order_cap_d4_semisimple(point['q'])


CAPS: Dict[str, Callable[[str, Point], OrderCap]] = {
    'mu': _mu,
    'table2': _table2,
    'field-aut-semisimple': _field_aut_semisimple,
    'field-aut-2element': _field_aut_2element,
    'field-aut-unipotent': _field_aut_unipotent,
    'lu.p2': _lu_p2,
    'lu.odd': _lu_odd,
    'suzuki.inner': _suzuki_inner,
    'suzuki.outer': _suzuki_outer,
    'd4.semisimple': _d4_semisimple,
}


def order_cap(cap_id: str, family: str, point: Point) -> OrderCap:
    try:
        fn = CAPS[cap_id]
    except KeyError:
        raise OutOfDomain(f'Unknown order cap {cap_id!r}, expected one of {sorted(CAPS)}')
    return fn(family, point)
