"""
Upper bounds for alpha(x), the number of conjugates of x needed to generate <x, L>.
"""

import logging
from dataclasses import dataclass
from typing import (
    Mapping,
    Optional,
)

from ..errors import (
    OutOfDomain,
    UnknownDescriptor,
)
from ..json import Json
from ..numth import (
    EXCEPTIONAL_FAMILIES,
    EXCEPTIONAL_RANKS,
)

_l = logging.getLogger(__name__)

DESCRIPTORS = (
    'generic',
    'involution',
    'transvection',
    'graph-auto',
    'field-involution',
    'odd-prime-order',
    'regular-semisimple',
    'psl2-2element',
)

CLASSICAL_FAMILIES = ('PSL2', 'PSL', 'PSU', 'PSp', 'Omega-odd', 'Omega-plus', 'Omega-minus')


@dataclass(frozen=True)
class AlphaBound:
    family: str
    descriptor: str
    value: int
    cite: str

    def __post_init__(self) -> None:
        assert self.value >= 2, self

    def json(self) -> Json:
        return {
            'family': self.family,
            'descriptor': self.descriptor,
            'value': self.value,
            'cite': self.cite,
        }


def natural_dimension(family: str, n: int) -> int:
    """Dimension of the natural module; PSp and the orthogonal families take the rank."""
    if family in ('PSL2',):
        return 2
    elif family in ('PSL', 'PSU'):
        return n
    elif family in ('PSp', 'Omega-plus', 'Omega-minus'):
        return 2 * n
    elif family == 'Omega-odd':
        return 2 * n + 1
    else:
        raise OutOfDomain(f'{family} has no natural module')


def _psl2(q: int, descriptor: str) -> Optional[AlphaBound]:
    if descriptor == 'odd-prime-order':
        return AlphaBound('PSL2', descriptor, 3 if q == 9 else 2, 'GS2:1')
    elif descriptor == 'field-involution':
        return AlphaBound('PSL2', descriptor, 5 if q == 9 else 4, 'GS2:1')
    elif descriptor == 'psl2-2element':
        if q % 2 == 0:
            raise UnknownDescriptor(f'psl2-2element needs q odd, got {q}')
        if q > 9:
            return AlphaBound('PSL2', descriptor, 2, '87t')
        # regular semisimple for q odd
        return AlphaBound('PSL2', descriptor, 3, 'g12:2')
    elif descriptor in ('generic', 'involution'):
        return AlphaBound('PSL2', descriptor, 5 if q == 9 else 4, 'GS2:1')
    return None


def _small_rank(family: str, n: int, q: int, descriptor: str) -> Optional[AlphaBound]:
    if family == 'PSL' and n == 3:
        if descriptor in ('generic', 'involution', 'graph-auto'):
            return AlphaBound(family, descriptor, 4, 'GS2:2')
        return AlphaBound(family, descriptor, 3, 'GS2:2')
    if family == 'PSU' and n == 3:
        if q == 3 and descriptor in ('generic', 'involution'):
            return AlphaBound(family, descriptor, 4, 'GS2:3')
        return AlphaBound(family, descriptor, 3, 'GS2:3')
    if family == 'PSL' and n == 4:
        if descriptor in ('generic', 'involution', 'graph-auto'):
            return AlphaBound(family, descriptor, 7 if q == 2 else 6, 'GS2:4')
        return AlphaBound(family, descriptor, 4, 'GS2:4')
    if family == 'PSU' and n == 4:
        if descriptor in ('generic', 'involution', 'graph-auto'):
            return AlphaBound(family, descriptor, 6, 'GS2:5')
        if descriptor == 'transvection' and q == 2:
            return AlphaBound(family, descriptor, 5, 'GS2:5')
        return AlphaBound(family, descriptor, 4, 'GS2:5')
    if family == 'PSp' and n == 2:
        if q == 3:
            return AlphaBound(family, descriptor, 6, 'GS2:6')
        if descriptor in ('generic', 'involution', 'transvection'):
            return AlphaBound(family, descriptor, 5, 'GS2:6')
        return AlphaBound(family, descriptor, 4, 'GS2:6')
    return None


def _classical(family: str, n: int, q: int, descriptor: str) -> AlphaBound:
    d = natural_dimension(family, n)
    if d < 5:
        raise OutOfDomain(f'no generation bound recorded for {family} with n={n}')
    if family == 'PSp' and q % 2 == 0 and descriptor in ('generic', 'involution', 'transvection'):
        return AlphaBound(family, descriptor, d + 1, 'GS1:1')
    return AlphaBound(family, descriptor, d, 'GS1:1')


def _exceptional(family: str, descriptor: str) -> AlphaBound:
    if family == 'F4' and descriptor in ('generic', 'involution'):
        return AlphaBound(family, descriptor, 8, 'GS1:2')
    return AlphaBound(family, descriptor, EXCEPTIONAL_RANKS[family] + 3, 'GS1:2')


def _tighten(bound: AlphaBound, descriptor: str) -> AlphaBound:
    if descriptor == 'regular-semisimple' and bound.value > 3:
        return AlphaBound(bound.family, descriptor, 3, 'g12:2')
    return bound


def alpha_bound(family: str, params: Mapping[str, int], descriptor: str) -> AlphaBound:
    if descriptor not in DESCRIPTORS:
        raise UnknownDescriptor(f'Unknown element descriptor {descriptor!r}, expected one of {DESCRIPTORS}')

    if family in EXCEPTIONAL_FAMILIES:
        if descriptor not in ('generic', 'involution', 'regular-semisimple'):
            raise UnknownDescriptor(f'{descriptor} is not a descriptor for {family}')
        return _tighten(_exceptional(family, descriptor), descriptor)

    if family not in CLASSICAL_FAMILIES:
        raise OutOfDomain(f'Unknown family {family!r}')
    q = params['q']
    if family == 'PSL2':
        result = _psl2(q, descriptor)
        if result is None:
            raise UnknownDescriptor(f'{descriptor} is not a descriptor for PSL2')
        return _tighten(result, descriptor)

    if descriptor in ('field-involution', 'odd-prime-order', 'psl2-2element'):
        raise UnknownDescriptor(f'{descriptor} is only recorded for PSL2')
    n = params['n']
    small = _small_rank(family, n, q, descriptor)
    if small is not None:
        return _tighten(small, descriptor)
    return _tighten(_classical(family, n, q, descriptor), descriptor)


def alpha_upper(family: str, params: Mapping[str, int], descriptor: str) -> int:
    return alpha_bound(family, params, descriptor).value
