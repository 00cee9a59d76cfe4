"""
Dense univariate polynomials over a FieldCtx, stored low-to-high.
"""

import enum
import logging
import math
from dataclasses import dataclass
from typing import (
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotMonic,
    ZeroPolynomial,
)
from .gf import FieldCtx

_l = logging.getLogger(__name__)

NEG_INF = -math.inf

Degree = Union[int, float]


def _strip(coeffs: Sequence[int]) -> Tuple[int, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class Poly:
    ctx: FieldCtx
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) > 0 and self.coeffs[-1] == 0:
            object.__setattr__(self, 'coeffs', _strip(self.coeffs))

    @staticmethod
    def of(ctx: FieldCtx, coeffs: Sequence[int]) -> 'Poly':
        return Poly(ctx, _strip(list(coeffs)))

    @staticmethod
    def zero(ctx: FieldCtx) -> 'Poly':
        return Poly(ctx, ())

    @staticmethod
    def const(ctx: FieldCtx, c: int) -> 'Poly':
        return Poly(ctx, _strip([c]))

    @staticmethod
    def x(ctx: FieldCtx) -> 'Poly':
        return Poly(ctx, (0, 1))

    @staticmethod
    def linear(ctx: FieldCtx, alpha: int) -> 'Poly':
        """x - alpha"""
        return Poly(ctx, (ctx.neg(alpha), 1))

    @property
    def degree(self) -> Degree:
        if len(self.coeffs) == 0:
            return NEG_INF
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    @property
    def lead(self) -> int:
        if self.is_zero:
            return 0
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return self.lead == 1

    def coeff(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def _check(self, other: 'Poly') -> None:
        if other.ctx != self.ctx:
            raise FieldMismatch(f'cannot combine polynomials over {self.ctx} and {other.ctx}')

    def __add__(self, other: 'Poly') -> 'Poly':
        self._check(other)
        add = self.ctx.add
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.of(self.ctx, [add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> 'Poly':
        return Poly(self.ctx, tuple(self.ctx.neg(c) for c in self.coeffs))

    def __sub__(self, other: 'Poly') -> 'Poly':
        return self + (-other)

    def __mul__(self, other: 'Poly') -> 'Poly':
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.ctx)
        add, mul = self.ctx.add, self.ctx.mul
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = add(out[i + j], mul(a, b))
        return Poly.of(self.ctx, out)

    def scale(self, c: int) -> 'Poly':
        return Poly.of(self.ctx, [self.ctx.mul(c, a) for a in self.coeffs])

    def __pow__(self, n: int) -> 'Poly':
        result = Poly.const(self.ctx, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divrem(self, divisor: 'Poly') -> Tuple['Poly', 'Poly']:
        self._check(divisor)
        if divisor.is_zero:
            raise DivisionByZero('polynomial division by zero')
        ctx = self.ctx
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        inv_lead = ctx.inv(divisor.lead)
        if len(rem) - 1 < dd:
            return Poly.zero(ctx), self
        quot = [0] * (len(rem) - dd)
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            factor = ctx.mul(c, inv_lead)
            quot[top - dd] = factor
            for i, d in enumerate(divisor.coeffs):
                if d:
                    rem[top - dd + i] = ctx.sub(rem[top - dd + i], ctx.mul(factor, d))
        return Poly.of(ctx, quot), Poly.of(ctx, rem[:dd])

    def __floordiv__(self, other: 'Poly') -> 'Poly':
        return self.divrem(other)[0]

    def __mod__(self, other: 'Poly') -> 'Poly':
        return self.divrem(other)[1]

    def divides(self, other: 'Poly') -> bool:
        return (other % self).is_zero

    def monic(self) -> 'Poly':
        if self.is_zero:
            return self
        return self.scale(self.ctx.inv(self.lead))

    def gcd(self, other: 'Poly') -> 'Poly':
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: 'Poly') -> 'Poly':
        if self.is_zero or other.is_zero:
            return Poly.zero(self.ctx)
        return ((self * other) // self.gcd(other)).monic()

    def derivative(self) -> 'Poly':
        ctx = self.ctx
        return Poly.of(ctx, [ctx.mul(ctx.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def eval(self, point: int) -> int:
        ctx = self.ctx
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, point), c)
        return acc

    def pow_mod(self, n: int, modulus: 'Poly') -> 'Poly':
        result = Poly.const(self.ctx, 1) % modulus
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return result

    def is_squarefree(self) -> bool:
        """A nonzero polynomial over a perfect field is squarefree iff gcd(f, f') = 1, after p-th root extraction when f' = 0."""
        if self.is_zero:
            raise ZeroPolynomial('the zero polynomial has no factorisation')
        if self.degree == 0:
            return True
        d = self.derivative()
        if d.is_zero:
            return False
        return self.gcd(d).degree == 0

    def text(self) -> str:
        return ' '.join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return '0'
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = '' if i == 0 else ('x' if i == 1 else f'x^{i}')
            if mono == '':
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f'{c}*{mono}')
        return ' + '.join(terms)


def parse_poly(ctx: FieldCtx, text: str) -> Poly:
    values = [int(tok) for tok in text.split()]
    for v in values:
        if not ctx.contains(v):
            raise ValueError(f'coefficient {v} is not an element of {ctx}')
    return Poly.of(ctx, values)


def poly_arith(f: Poly, g: Poly, op: str, point: int = 0) -> Union[Poly, Tuple[Poly, Poly], int]:
    if op == 'add':
        return f + g
    elif op == 'mul':
        return f * g
    elif op == 'divrem':
        return f.divrem(g)
    elif op == 'gcd':
        return f.gcd(g)
    elif op == 'derivative':
        return f.derivative()
    elif op == 'eval':
        return f.eval(point)
    else:
        raise ValueError(f'Unknown polynomial operation {op}')


class LinearPower(NamedTuple):
    alpha: int
    k: int


class Constant(enum.Enum):
    CONSTANT = 'constant'


CONSTANT = Constant.CONSTANT


def _linear_root_candidate(f: Poly) -> Optional[int]:
    ctx = f.ctx
    d = int(f.degree)
    if d % ctx.p != 0:
        # the x^{d-1} coefficient of (x - a)^d is -d*a
        return ctx.div(ctx.neg(f.coeffs[d - 1]), ctx.from_int(d))
    if any(c != 0 for i, c in enumerate(f.coeffs) if i % ctx.p != 0):
        return None
    # f(x) = g(x^p) and (x - a)^d = (x^p - a^p)^(d/p)
    g = Poly.of(ctx, f.coeffs[::ctx.p])
    beta = _linear_root_candidate(g)
    if beta is None:
        return None
    return ctx.pth_root(beta)


def is_power_of_linear(f: Poly) -> Union[LinearPower, Constant, None]:
    if not f.is_monic:
        raise NotMonic(f'{f} is not monic')
    if f.degree == 0:
        return CONSTANT
    alpha = _linear_root_candidate(f)
    if alpha is None:
        return None
    k = int(f.degree)
    if Poly.linear(f.ctx, alpha) ** k == f:
        return LinearPower(alpha=alpha, k=k)
    return None


def roots_in_field(f: Poly) -> List[Tuple[int, int]]:
    """All roots lying in the base field, with multiplicities, in ascending encoding order."""
    if f.is_zero:
        raise ZeroPolynomial('the zero polynomial has every element as a root')
    if f.degree == 0:
        return []
    ctx = f.ctx
    x = Poly.x(ctx)
    # gcd with x^q - x keeps exactly the distinct roots in GF(q)
    split = f.gcd(x.pow_mod(ctx.q, f) - x)
    wanted = int(split.degree)
    result: List[Tuple[int, int]] = []
    if wanted <= 0:
        return result
    for e in ctx.elements():
        if split.eval(e) != 0:
            continue
        linear = Poly.linear(ctx, e)
        rest, mult = f, 0
        while True:
            quot, rem = rest.divrem(linear)
            if not rem.is_zero:
                break
            rest, mult = quot, mult + 1
        result.append((e, mult))
        if len(result) == wanted:
            break
    return result
