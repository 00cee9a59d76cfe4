"""
Parameter grids for screening rules.

A grid is the cartesian product of its axes in declaration order, with fixed values
merged in, derived parameters computed, and requirement and exclusion filters applied.
"""

import enum
import itertools
import math
from dataclasses import dataclass, field, replace
from typing import (
    Any,
    Callable,
    Dict,
    Iterator,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from ..json import Json
from ..numth import (
    is_prime_power,
    prime_power,
)

Point = Dict[str, int]


class AxisKind(enum.Enum):
    RANGE = 'range'
    PRIME_POWERS = 'prime_powers'
    VALUES = 'values'

    def json(self) -> Json:
        return self.value


class Parity(enum.Enum):
    ANY = 'any'
    ODD = 'odd'
    EVEN = 'even'

    def json(self) -> Json:
        return self.value

    def admits(self, v: int) -> bool:
        if self == Parity.ODD:
            return v % 2 == 1
        elif self == Parity.EVEN:
            return v % 2 == 0
        return True


@dataclass(frozen=True)
class Axis:
    name: str
    kind: AxisKind
    lo: int = 0
    hi: int = -1
    parity: Parity = Parity.ANY
    values: Tuple[int, ...] = ()

    def __iter__(self) -> Iterator[int]:
        if self.kind == AxisKind.VALUES:
            yield from self.values
            return
        for v in range(self.lo, self.hi + 1):
            if not self.parity.admits(v):
                continue
            if self.kind == AxisKind.PRIME_POWERS and not is_prime_power(v):
                continue
            yield v

    def json(self) -> Json:
        if self.kind == AxisKind.VALUES:
            return {'axis': self.name, 'kind': self.kind.json(), 'values': list(self.values)}
        return {
            'axis': self.name,
            'kind': self.kind.json(),
            'lo': self.lo,
            'hi': self.hi,
            'parity': self.parity.json(),
        }


def _tower(point: Point) -> int:
    return point['q0'] ** (point['p'] ** point['m'])


def _suzuki(point: Point) -> int:
    return 2 ** (2 * point['e'] + 1)


def _twice_n(point: Point) -> int:
    return 2 * point['n']


# name -> (target parameter, computation)
DERIVATIONS: Dict[str, Tuple[str, Callable[[Point], int]]] = {
    'tower': ('q', _tower),
    'suzuki': ('q', _suzuki),
    'twice-n': ('n2', _twice_n),
}


def _p_coprime_q0(point: Point) -> bool:
    return math.gcd(point['p'], point['q0']) == 1


def _q0_p_free(point: Point) -> bool:
    _, a = prime_power(point['q0'])
    return a % point['p'] != 0


REQUIREMENTS: Dict[str, Callable[[Point], bool]] = {
    'p_coprime_q0': _p_coprime_q0,
    'q0_p_free': _q0_p_free,
}


@dataclass(frozen=True)
class Grid:
    axes: Tuple[Axis, ...]
    fixed: Mapping[str, int] = field(default_factory=dict)
    derive: Tuple[str, ...] = ()
    require: Tuple[str, ...] = ()
    exclude: Tuple[Mapping[str, int], ...] = ()

    @property
    def is_empty(self) -> bool:
        return len(self.axes) == 0

    def _excluded(self, point: Point) -> bool:
        return any(all(point.get(k) == v for k, v in ex.items()) for ex in self.exclude)

    def points(self) -> Iterator[Point]:
        if self.is_empty:
            return
        for combo in itertools.product(*[list(axis) for axis in self.axes]):
            point: Point = dict(self.fixed)
            point.update(zip((axis.name for axis in self.axes), combo))
            for name in self.derive:
                target, fn = DERIVATIONS[name]
                point[target] = fn(point)
            if not all(REQUIREMENTS[r](point) for r in self.require):
                continue
            if self._excluded(point):
                continue
            yield point

    def with_axes(self, axes: Sequence[Axis]) -> 'Grid':
        return replace(self, axes=tuple(axes))

    def json(self) -> Json:
        return {
            'axes': [a.json() for a in self.axes],
            'fixed': dict(self.fixed),
            'derive': list(self.derive),
            'require': list(self.require),
            'exclude': [dict(e) for e in self.exclude],
        }


def parse_axis(raw: Mapping[str, Any]) -> Axis:
    kind = AxisKind(raw['kind'])
    if kind == AxisKind.VALUES:
        return Axis(name=raw['axis'], kind=kind, values=tuple(int(v) for v in raw['values']))
    return Axis(
        name=raw['axis'],
        kind=kind,
        lo=int(raw['lo']),
        hi=int(raw['hi']),
        parity=Parity(raw.get('parity', 'any')),
    )


def parse_override(raw: str, base: Sequence[Axis]) -> Tuple[Axis, ...]:
    """
    Apply a command-line override to a sequence of axes. Accepted forms are
    NAME=LO..HI (keeps the kind of the existing axis) and NAME=V1,V2,...
    """
    if '=' not in raw:
        raise ValueError(f'Grid override {raw!r} should look like NAME=LO..HI or NAME=V1,V2')
    name, _, spec = raw.partition('=')
    name = name.strip()
    current: Optional[Axis] = next((a for a in base if a.name == name), None)
    if current is None:
        raise ValueError(f'Grid override names unknown axis {name!r}, have {[a.name for a in base]}')
    if '..' in spec:
        lo, _, hi = spec.partition('..')
        kind = current.kind if current.kind != AxisKind.VALUES else AxisKind.RANGE
        new = Axis(name=name, kind=kind, lo=int(lo), hi=int(hi), parity=current.parity)
    else:
        new = Axis(name=name, kind=AxisKind.VALUES, values=tuple(int(v) for v in spec.split(',')))
    return tuple(new if a.name == name else a for a in base)
