"""
The almost-cyclicity predicate.

A square matrix M is almost cyclic when it is similar to diag(a*Id_k, M1) with M1
cyclic. The appendix mode classifies Q = charpoly/minpoly only; the strict mode also
bounds the Jordan structure at the scalar eigenvalue, which makes it exact for
non-semisimple inputs. The oracle mode reads the invariant factors directly.
"""

import enum
import logging
from dataclasses import dataclass
from typing import (
    Optional,
    Tuple,
)

from .errors import MinpolyNotDividing
from .json import Json
from .matgf import (
    Mat,
    charpoly,
    invariant_factors,
    minpoly,
)
from .poly import (
    Constant,
    LinearPower,
    Poly,
    is_power_of_linear,
    roots_in_field,
)

_l = logging.getLogger(__name__)


class Mode(enum.Enum):
    STRICT = 'strict'
    APPENDIX = 'appendix'
    ORACLE = 'oracle'

    def json(self) -> Json:
        return self.value


def parse_mode(raw: str) -> Mode:
    try:
        return Mode(raw)
    except ValueError:
        raise ValueError(f'Unknown mode {raw!r}, expected one of {[m.value for m in Mode]}')


@dataclass(frozen=True)
class EigenMult:
    root: int
    algebraic: int
    geometric: int

    def json(self) -> Json:
        return [self.root, self.algebraic, self.geometric]


@dataclass(frozen=True)
class Verdict:
    almost_cyclic: bool
    mode: Mode
    alpha: Optional[int]
    k: int
    is_cyclic: bool
    is_scalar: bool
    eig_mults: Tuple[EigenMult, ...]

    def json(self) -> Json:
        return {
            'almost_cyclic': self.almost_cyclic,
            'mode': self.mode.json(),
            'alpha': self.alpha,
            'k': self.k,
            'cyclic': self.is_cyclic,
            'scalar': self.is_scalar,
            'eig_mults': [e.json() for e in self.eig_mults],
        }


def eigen_profile(m: Mat) -> Tuple[EigenMult, ...]:
    m.require_square()
    return _eigen_profile(m, charpoly(m))


def _eigen_profile(m: Mat, cp: Poly) -> Tuple[EigenMult, ...]:
    return tuple(
        EigenMult(root=root, algebraic=mult, geometric=m.sub_scalar(root).nullity())
        for root, mult in roots_in_field(cp)
    )


def is_almost_cyclic(m: Mat, mode: Mode = Mode.STRICT) -> Verdict:
    if mode == Mode.ORACLE:
        return oracle_is_almost_cyclic(m)
    m.require_square()
    cp = charpoly(m)
    mp = minpoly(m)
    quotient, rem = cp.divrem(mp)
    if not rem.is_zero:
        raise MinpolyNotDividing(f'{mp} does not divide {cp}')

    is_scalar = mp.degree == 1
    shape = is_power_of_linear(quotient)
    alpha: Optional[int] = None
    k = 0
    if isinstance(shape, Constant):
        almost_cyclic = True
    elif isinstance(shape, LinearPower):
        alpha, k = shape.alpha, shape.k
        almost_cyclic = True
        if mode == Mode.STRICT:
            shifted = m.sub_scalar(alpha)
            jumps = (shifted * shifted).nullity() - shifted.nullity()
            almost_cyclic = jumps <= 1
    else:
        almost_cyclic = False

    verdict = Verdict(
        almost_cyclic=almost_cyclic,
        mode=mode,
        alpha=alpha,
        k=k,
        is_cyclic=isinstance(shape, Constant),
        is_scalar=is_scalar,
        eig_mults=_eigen_profile(m, cp),
    )
    _l.debug(f'verdict {verdict.json()}')
    return verdict


def oracle_is_almost_cyclic(m: Mat) -> Verdict:
    factors = invariant_factors(m)
    ctx = m.ctx
    t = len(factors)
    alpha: Optional[int] = None
    k = 0
    if t <= 1:
        almost_cyclic = True
    else:
        head = factors[:-1]
        first = head[0]
        almost_cyclic = first.degree == 1 and all(f == first for f in head)
        if almost_cyclic:
            alpha = ctx.neg(first.coeffs[0])
            k = t - 1
    return Verdict(
        almost_cyclic=almost_cyclic,
        mode=Mode.ORACLE,
        alpha=alpha,
        k=k,
        is_cyclic=t <= 1,
        is_scalar=len(factors) > 0 and factors[-1].degree == 1,
        eig_mults=eigen_profile(m),
    )
