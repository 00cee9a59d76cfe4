"""
Arithmetic of p-parts, e_p(q), Sylow exponents of linear groups and element-order caps.
"""

import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import (
    Callable,
    Tuple,
    Union,
)

import sympy

from .errors import (
    NotCoprime,
    OutOfDomain,
    TowerMismatch,
)
from .json import Json

_l = logging.getLogger(__name__)

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class PPow:
    p: int
    m: int

    @property
    def value(self) -> int:
        return self.p ** self.m

    def __int__(self) -> int:
        return self.value

    def json(self) -> Json:
        return {'p': self.p, 'm': self.m, 'value': self.value}


@dataclass(frozen=True)
class OrderCap:
    family: str
    params: Tuple[int, ...]
    cap: Rational
    cite: str

    def __post_init__(self) -> None:
        assert self.cap >= 1, self

    def json(self) -> Json:
        return {
            'family': self.family,
            'params': list(self.params),
            'cap': str(self.cap),
            'cite': self.cite,
        }


def prime_power(q: int) -> Tuple[int, int]:
    """(r, a) with q = r^a, r prime."""
    if q < 2:
        raise OutOfDomain(f'{q} is not a prime power')
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise OutOfDomain(f'{q} is not a prime power')
    ((r, a),) = factors.items()
    return int(r), int(a)


def is_prime_power(q: int) -> bool:
    return q >= 2 and len(sympy.factorint(q)) == 1


def vp(m: int, p: int) -> PPow:
    if m < 1:
        raise ValueError(f'p-part needs a positive integer, got {m}')
    return PPow(p=p, m=int(sympy.multiplicity(p, m)))


def p_part(m: int, p: int) -> int:
    return vp(m, p).value


def e_p(q: int, p: int) -> int:
    if math.gcd(p, q) != 1:
        raise NotCoprime(f'e_{p}({q}) needs {p} and {q} coprime')
    if p == 2:
        return 1 if q % 4 == 1 else 2
    return int(sympy.n_order(q % p, p))


def _ceil_log(n: int, p: int) -> int:
    s, power = 0, 1
    while power < n:
        power *= p
        s += 1
    return s


def eta_gl_nn9(n: int, q: int) -> int:
    """The 2-exponent of GL_n(q), q odd, written with 2^t <= n < 2^(t+1)."""
    if q % 2 == 0 or n < 1:
        raise OutOfDomain(f'needs q odd and n >= 1, got n={n} q={q}')
    if q % 4 == 3 and n < 2:
        raise OutOfDomain('the 4 | (q+1) form needs n >= 2')
    t = n.bit_length() - 1
    if q % 4 == 1:
        return 2 ** t * p_part(q - 1, 2)
    return 2 ** t * p_part(q + 1, 2)


def eta_gl(p: int, n: int, q: int) -> int:
    """Exponent of a Sylow p-subgroup of GL_n(q)."""
    r, _ = prime_power(q)
    if r == p:
        # unipotent: p^(t+1) with p^t < n <= p^(t+1)
        return p ** _ceil_log(n, p)

    e = e_p(q, p)
    if e > n:
        if p == 2:
            return p_part(q - 1, 2)
        return 1
    l = 0
    while p ** (l + 1) * e <= n:
        l += 1
    result = p ** l * p_part(q ** e - 1, p)
    if p == 2:
        assert result == eta_gl_nn9(n, q), (n, q)
    return result


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def eta_sl(p: int, n: int, q: int) -> int:
    """Exponent of a Sylow p-subgroup of SL_n(q), on the domain where the reduction to GL is exact."""
    r, _ = prime_power(q)
    if r == p:
        return eta_gl(p, n, q)
    if n == 1:
        return 1
    if p == 2:
        if n == 2:
            # generalised quaternion of order |q^2-1|_2
            return p_part(q * q - 1, 2) // 2
        if not _is_power_of(n, 2):
            return eta_gl(p, n, q)
        raise OutOfDomain(f'eta_2(SL_{n}({q})) with n a 2-power above 2 is not covered')
    if _is_power_of(n, p) and (q - 1) % p == 0:
        return eta_gl(p, n // p, q)
    return eta_gl(p, n, q)


class Collapse(enum.Enum):
    DEFINING = 'defining'
    COPRIME = 'coprime'
    ZA4BIS = 'odd-q-2-part'

    def json(self) -> Json:
        return self.value


@dataclass(frozen=True)
class FieldAutExponent:
    value: int
    collapse: Collapse
    collapse_value: int

    @property
    def collapse_holds(self) -> bool:
        return self.value == self.collapse_value

    def json(self) -> Json:
        return {
            'value': self.value,
            'collapse': self.collapse.json(),
            'collapse_value': self.collapse_value,
        }


def eta_with_field_auts(
    p: int,
    base_exponent_fn: Callable[[int], int],
    q0: int,
    k: int,
    q: int = 0,
) -> FieldAutExponent:
    """
    Sylow p-exponent of G(q).Psi with Psi the field automorphisms of order p^k,
    q = q0^(p^k): the maximum of p^(k-i) * eta(G(q0^(p^i))) over 0 <= i <= k.
    """
    if k < 0:
        raise TowerMismatch(f'tower height must be non-negative, got {k}')
    top = q0 ** (p ** k)
    if q and q != top:
        raise TowerMismatch(f'{q} is not {q0}^({p}^{k})')
    prime_power(q0)
    value = max(p ** (k - i) * base_exponent_fn(q0 ** (p ** i)) for i in range(k + 1))

    if top % p == 0:
        collapse = Collapse.DEFINING
        collapse_value = p ** k * base_exponent_fn(top)
    elif p == 2:
        collapse = Collapse.ZA4BIS
        collapse_value = base_exponent_fn(top)
    else:
        collapse = Collapse.COPRIME
        collapse_value = base_exponent_fn(top)
    result = FieldAutExponent(value=value, collapse=collapse, collapse_value=collapse_value)
    if not result.collapse_holds:
        _l.warning(f'{collapse.value} collapse does not hold: {result.json()}')
    return result


def mu_classical(family: str, n: int, q: int) -> OrderCap:
    """Element-order caps for Aut L; for PSp, n is the rank of PSp_2n(q)."""
    r, _ = prime_power(q)
    family = family.upper()
    if family == 'PSL':
        if n < 2:
            raise OutOfDomain(f'PSL needs n >= 2, got {n}')
        cap: Rational = (q ** n - 1) // (q - 1)
    elif family == 'PSU':
        if n < 3:
            raise OutOfDomain(f'PSU needs n >= 3, got {n}')
        if n % 2 == 1:
            cap = q ** (n - 1) - 1 if q != r else q ** (n - 1) + q
        elif q > 2:
            cap = q ** (n - 1) + 1
        else:
            cap = 4 * (2 ** (n - 3) + 1)
    elif family == 'PSP':
        if n < 1:
            raise OutOfDomain(f'PSp needs rank n >= 1, got {n}')
        cap = Fraction(q ** (n + 1), q - 1)
        if cap.denominator == 1:
            cap = cap.numerator
    else:
        raise OutOfDomain(f'Unknown classical family {family}')
    return OrderCap(family=family, params=(n, q), cap=cap, cite='nonW:mu')


EXCEPTIONAL_FAMILIES = ('2B2', 'G2', '2G2', '3D4', 'F4', '2F4', 'E6', '2E6', 'E7', 'E8')

EXCEPTIONAL_RANKS = {
    '2B2': 2,
    'G2': 2,
    '2G2': 2,
    '3D4': 4,
    'F4': 4,
    '2F4': 4,
    'E6': 6,
    '2E6': 6,
    'E7': 7,
    'E8': 8,
}


def twisted_exponent(q: int, r: int) -> int:
    """e with q = r^(2e+1), e >= 1."""
    base, a = prime_power(q)
    if base != r or a % 2 == 0 or a < 3:
        raise OutOfDomain(f'{q} is not {r}^(2e+1) with e >= 1')
    return (a - 1) // 2


def order_cap_exceptional(family: str, q: int) -> OrderCap:
    family = family.upper()
    r, e = prime_power(q)
    if family == '2B2':
        e = twisted_exponent(q, 2)
        cap = (2 * e + 1) * (q + 2 ** (e + 1) + 1)
    elif family == 'G2':
        cap = (2 * e if r == 3 else e) * (q * q + q + 1)
    elif family == '2G2':
        e = twisted_exponent(q, 3)
        cap = (2 * e + 1) * (q + 3 ** (e + 1) + 1)
    elif family == '3D4':
        cap = 3 * e * (q ** 3 - 1) * (q + 1)
    elif family == 'F4':
        cap = q * (q ** 3 - 1) * (q + 1)
    elif family == '2F4':
        e = twisted_exponent(q, 2)
        cap = (2 * e + 1) * (2 ** (4 * e + 2) + 2 ** (3 * e + 2) + 2 ** (2 * e + 1) + 2 ** (e + 1) + 1)
    elif family == 'E6':
        cap = q * q * (q ** 3 + 1) * (q * q + q + 1)
    elif family == '2E6':
        cap = q * (q + 1) * (q * q + 1) * (q ** 3 - 1)
    elif family == 'E7':
        cap = q * (q + 1) * (q * q + 1) * (q ** 4 + 1)
    elif family == 'E8':
        cap = q * (q + 1) * (q * q + q + 1) * (q ** 5 - 1)
    else:
        raise OutOfDomain(f'{family} is not an exceptional family, expected one of {EXCEPTIONAL_FAMILIES}')
    return OrderCap(family=family, params=(q,), cap=cap, cite='exc:table2')


# upper bounds for semisimple p-elements of Aut 3D4(q)
D4_TRIALITY_SEMISIMPLE = {
    2: 13,
    3: 73,
    4: 241,
    5: 601,
    7: 181,
    8: 243,
    9: 6481,
    11: 1117,
    13: 28393,
    16: 673,
    17: 83233,
    19: 769,
    25: 390001,
    27: 530713,
    32: 1321,
    64: 38737,
    81: 6481,
    128: 14449,
}


def order_cap_d4_semisimple(q: int) -> OrderCap:
    if q not in D4_TRIALITY_SEMISIMPLE:
        raise OutOfDomain(f'no semisimple bound recorded for 3D4({q})')
    return OrderCap(family='3D4', params=(q,), cap=D4_TRIALITY_SEMISIMPLE[q], cite='except:3D4-semisimple')
