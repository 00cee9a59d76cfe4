"""
Finite fields GF(p^k) with canonical base-p integer encodings.

An element with polynomial-basis coordinates (c_0, ..., c_{k-1}) is encoded as
sum(c_i * p^i). Prime fields use plain residues; extension fields carry
exp/log tables over a primitive element, plus a Zech logarithm table when p is odd.
"""

import functools
import itertools
import logging
from dataclasses import dataclass, field
from typing import (
    Callable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import sympy

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotMonic,
    NotPrime,
    ReducibleModulus,
    TowerMismatch,
)

_l = logging.getLogger(__name__)

MAX_FIELD_ORDER = 2 ** 20

_X = sympy.Symbol('x')


@dataclass(frozen=True)
class FieldCtx:
    p: int
    k: int
    modulus: Tuple[int, ...]
    _exp: Tuple[int, ...] = field(default=(), repr=False, compare=False)
    _log: Tuple[int, ...] = field(default=(), repr=False, compare=False)
    _zech: Tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __str__(self) -> str:
        if self.k == 1:
            return f'GF({self.p})'
        return f'GF({self.p}^{self.k})'

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    @property
    def exp_table(self) -> Tuple[int, ...]:
        return self._exp

    @property
    def log_table(self) -> Tuple[int, ...]:
        return self._log

    @property
    def zech_table(self) -> Tuple[int, ...]:
        return self._zech

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def contains(self, e: int) -> bool:
        return 0 <= e < self.q

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def nonzero_elements(self) -> Iterator[int]:
        return iter(range(1, self.q))

    def digits(self, e: int) -> Tuple[int, ...]:
        out = []
        for _ in range(self.k):
            e, c = divmod(e, self.p)
            out.append(c)
        return tuple(out)

    def from_digits(self, ds: Sequence[int]) -> int:
        e = 0
        for c in reversed(ds):
            e = e * self.p + (c % self.p)
        return e

    def from_int(self, n: int) -> int:
        """The image of the integer n under Z -> GF(q)."""
        return n % self.p

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        order = self.q - 1
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % order]
        if z < 0:
            return 0
        return self._exp[(la + z) % order]

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2 or a == 0:
            return a
        order = self.q - 1
        return self._exp[(self._log[a] + order // 2) % order]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f'zero has no inverse in {self}')
        if self.k == 1:
            return pow(a, -1, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        if n == 0:
            return 1
        if a == 0:
            return 0
        if self.k == 1:
            return pow(a, n, self.p)
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero('zero has no multiplicative order')
        if self.k == 1:
            return int(sympy.n_order(a, self.p)) if self.p > 2 else 1
        order = self.q - 1
        return order // _gcd(self._log[a], order)

    def primitive_element(self) -> int:
        if self.k == 1:
            return int(sympy.primitive_root(self.p)) if self.p > 2 else 1
        return self._exp[1] if self.q > 2 else 1

    def pth_root(self, a: int) -> int:
        return self.pow(a, self.q // self.p)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def is_irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    """coeffs are low-to-high."""
    poly = sympy.Poly(list(reversed(list(coeffs))), _X, modulus=p)
    return bool(poly.is_irreducible)


def least_irreducible(p: int, k: int) -> Tuple[int, ...]:
    for low in itertools.product(range(p), repeat=k):
        candidate = (*low, 1)
        if is_irreducible_mod_p(candidate, p):
            return candidate
    raise AssertionError(f'no irreducible polynomial of degree {k} over GF({p})')


def _mul_slow(a: int, b: int, p: int, k: int, modulus: Tuple[int, ...]) -> int:
    ad = _to_digits(a, p, k)
    bd = _to_digits(b, p, k)
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(ad):
        if x == 0:
            continue
        for j, y in enumerate(bd):
            prod[i + j] = (prod[i + j] + x * y) % p
    for top in range(2 * k - 2, k - 1, -1):
        c = prod[top]
        if c == 0:
            continue
        for i in range(k + 1):
            prod[top - k + i] = (prod[top - k + i] - c * modulus[i]) % p
    e = 0
    for c in reversed(prod[:k]):
        e = e * p + c
    return e


def _pow_slow(a: int, n: int, p: int, k: int, modulus: Tuple[int, ...]) -> int:
    result = 1
    while n:
        if n & 1:
            result = _mul_slow(result, a, p, k, modulus)
        a = _mul_slow(a, a, p, k, modulus)
        n >>= 1
    return result


def _to_digits(e: int, p: int, k: int) -> List[int]:
    out = []
    for _ in range(k):
        e, c = divmod(e, p)
        out.append(c)
    return out


def _find_primitive(p: int, k: int, modulus: Tuple[int, ...]) -> int:
    order = p ** k - 1
    cofactors = [order // r for r in sympy.primefactors(order)]
    for g in range(2, p ** k):
        if all(_pow_slow(g, c, p, k, modulus) != 1 for c in cofactors):
            return g
    raise AssertionError(f'no primitive element found for modulus {modulus}')


def _build_tables(p: int, k: int, modulus: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    q = p ** k
    g = _find_primitive(p, k, modulus)
    _l.debug(f'building tables for GF({p}^{k}) with primitive element {g}')

    # multiplication by g is GF(p)-linear; column i is g * x^i
    columns = [_mul_slow(g, p ** i, p, k, modulus) for i in range(k)]
    column_digits = [_to_digits(c, p, k) for c in columns]

    def times_g(a: int) -> int:
        if p == 2:
            acc = 0
            i = 0
            while a:
                if a & 1:
                    acc ^= columns[i]
                a >>= 1
                i += 1
            return acc
        acc_digits = [0] * k
        for i, c in enumerate(_to_digits(a, p, k)):
            if c:
                for j, d in enumerate(column_digits[i]):
                    acc_digits[j] += c * d
        e = 0
        for d in reversed(acc_digits):
            e = e * p + (d % p)
        return e

    exp = [1] * (q - 1)
    log = [-1] * q
    log[1] = 0
    for i in range(1, q - 1):
        exp[i] = times_g(exp[i - 1])
        log[exp[i]] = i

    zech: List[int] = []
    if p != 2:
        for e in exp:
            c0 = e % p
            s = e - c0 + (c0 + 1) % p
            zech.append(log[s] if s else -1)

    return tuple(exp), tuple(log), tuple(zech)


@functools.lru_cache(maxsize=None)
def _create(p: int, k: int, modulus: Tuple[int, ...]) -> FieldCtx:
    if k == 1:
        return FieldCtx(p=p, k=k, modulus=modulus)
    exp, log, zech = _build_tables(p, k, modulus)
    return FieldCtx(p=p, k=k, modulus=modulus, _exp=exp, _log=log, _zech=zech)


def field_create(p: int, k: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    if not sympy.isprime(p):
        raise NotPrime(f'{p} is not prime')
    if k < 1:
        raise DegreeMismatch(f'extension degree must be at least 1, got {k}')
    if p ** k > MAX_FIELD_ORDER:
        raise FieldTooLarge(f'GF({p}^{k}) exceeds the supported order {MAX_FIELD_ORDER}')

    if modulus is None:
        chosen = least_irreducible(p, k)
    else:
        chosen = tuple(int(c) % p for c in modulus)
        if len(chosen) == 0 or chosen[-1] != 1:
            raise NotMonic(f'modulus {list(modulus)} is not monic')
        if len(chosen) - 1 != k:
            raise DegreeMismatch(f'modulus {list(modulus)} does not have degree {k}')
        if not is_irreducible_mod_p(chosen, p):
            raise ReducibleModulus(f'modulus {list(modulus)} is reducible over GF({p})')

    return _create(p, k, chosen)


def field_of_order(q: int) -> FieldCtx:
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise NotPrime(f'{q} is not a prime power')
    ((p, k),) = factors.items()
    return field_create(int(p), int(k))


@dataclass(frozen=True)
class Fel:
    ctx: FieldCtx
    rep: int

    def _coerce(self, other: Union['Fel', int]) -> int:
        if isinstance(other, Fel):
            if other.ctx != self.ctx:
                raise FieldMismatch(f'cannot combine elements of {self.ctx} and {other.ctx}')
            return other.rep
        return self.ctx.from_int(other)

    def __add__(self, other: Union['Fel', int]) -> 'Fel':
        return Fel(self.ctx, self.ctx.add(self.rep, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other: Union['Fel', int]) -> 'Fel':
        return Fel(self.ctx, self.ctx.sub(self.rep, self._coerce(other)))

    def __rsub__(self, other: Union['Fel', int]) -> 'Fel':
        return Fel(self.ctx, self.ctx.sub(self._coerce(other), self.rep))

    def __neg__(self) -> 'Fel':
        return Fel(self.ctx, self.ctx.neg(self.rep))

    def __mul__(self, other: Union['Fel', int]) -> 'Fel':
        return Fel(self.ctx, self.ctx.mul(self.rep, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: Union['Fel', int]) -> 'Fel':
        return Fel(self.ctx, self.ctx.div(self.rep, self._coerce(other)))

    def __pow__(self, n: int) -> 'Fel':
        return Fel(self.ctx, self.ctx.pow(self.rep, n))

    def inverse(self) -> 'Fel':
        return Fel(self.ctx, self.ctx.inv(self.rep))

    def frobenius(self) -> 'Fel':
        return Fel(self.ctx, self.ctx.frobenius(self.rep))

    def __int__(self) -> int:
        return self.rep

    def __str__(self) -> str:
        return str(self.rep)


def field_arith(a: Fel, b: Optional[Fel], op: str, n: int = 0) -> Fel:
    if op == 'add':
        assert b is not None
        return a + b
    elif op == 'sub':
        assert b is not None
        return a - b
    elif op == 'mul':
        assert b is not None
        return a * b
    elif op == 'div':
        assert b is not None
        return a / b
    elif op == 'pow':
        return a ** n
    elif op == 'inv':
        return a.inverse()
    elif op == 'frobenius':
        return a.frobenius()
    else:
        raise ValueError(f'Unknown field operation {op}')


def field_embedding(src: FieldCtx, dst: FieldCtx) -> Callable[[int], int]:
    """
    Embed GF(p^k) into GF(p^K) for k | K. The source generator x is sent to the
    least-encoded root of the source modulus in the destination field.
    """
    if src.p != dst.p or dst.k % src.k != 0:
        raise TowerMismatch(f'{src} does not embed in {dst}')
    if src == dst:
        return lambda a: a

    def modulus_at(beta: int) -> int:
        acc = 0
        for c in reversed(src.modulus):
            acc = dst.add(dst.mul(acc, beta), c)
        return acc

    beta = next(b for b in dst.elements() if modulus_at(b) == 0)
    powers = [dst.pow(beta, i) for i in range(src.k)]

    def embed(a: int) -> int:
        acc = 0
        for c, pw in zip(src.digits(a), powers):
            if c:
                acc = dst.add(acc, dst.mul(c, pw))
        return acc

    return embed
