"""
Elementary inequalities LHS(n, q) > RHS(n, q) with their printed exception sets.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import (
    Callable,
    FrozenSet,
    List,
    Tuple,
)

from ..json import Json
from ..numth import (
    Rational,
    is_prime_power,
)

_l = logging.getLogger(__name__)


@dataclass(frozen=True)
class No2Item:
    id: str
    lhs: Callable[[int, int], Rational]
    rhs: Callable[[int, int], Rational]
    admits_n: Callable[[int], bool]
    odd_q_only: bool
    exceptions: FrozenSet[int]
    fixed_n: Tuple[int, ...] = ()

    def n_values(self, n_hi: int) -> List[int]:
        if self.fixed_n:
            return list(self.fixed_n)
        return [n for n in range(2, n_hi + 1) if self.admits_n(n)]


@dataclass(frozen=True)
class No2Result:
    item: str
    n: int
    violations: Tuple[int, ...]
    exceptions: Tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.violations == self.exceptions

    def json(self) -> Json:
        return {
            'item': self.item,
            'n': self.n,
            'violations': list(self.violations),
            'exceptions': list(self.exceptions),
            'ok': self.ok,
        }


NO2_ITEMS: Tuple[No2Item, ...] = (
    No2Item(
        '1',
        lambda n, q: Fraction(q ** n - 1, q - 1) - 2,
        lambda n, q: n * (q - 1),
        lambda n: n >= 5,
        False,
        frozenset(),
    ),
    No2Item(
        '1.n3',
        lambda n, q: Fraction(q ** 3 - 1, q - 1) - 2,
        lambda n, q: 4 * (q - 1),
        lambda n: n == 3,
        False,
        frozenset(),
        fixed_n=(3,),
    ),
    No2Item(
        '1.n4',
        lambda n, q: Fraction(q ** 4 - 1, q - 1) - 2,
        lambda n, q: 7 * (q - 1),
        lambda n: n == 4,
        False,
        frozenset(),
        fixed_n=(4,),
    ),
    No2Item(
        '2',
        lambda n, q: Fraction(q ** n - 1, 2),
        lambda n, q: 2 * n * (q - 1),
        lambda n: n >= 3,
        True,
        frozenset(),
    ),
    No2Item(
        '2.n2',
        lambda n, q: Fraction(q ** 2 - 1, 2),
        lambda n, q: 6 * (q - 1),
        lambda n: n == 2,
        True,
        frozenset({3, 5, 7, 9, 11}),
        fixed_n=(2,),
    ),
    No2Item(
        '3',
        lambda n, q: Fraction(q ** n - q, q + 1),
        lambda n, q: n * (q - 1),
        lambda n: n >= 5 and n % 2 == 1,
        False,
        frozenset(),
    ),
    No2Item(
        '3.n3',
        lambda n, q: Fraction(q ** 3 - q, q + 1),
        lambda n, q: 4 * (q - 1),
        lambda n: n == 3,
        False,
        frozenset({2, 3, 4}),
        fixed_n=(3,),
    ),
    No2Item(
        '4',
        lambda n, q: Fraction(q ** n - 1, q + 1),
        lambda n, q: n * (q - 1),
        lambda n: n >= 6 and n % 2 == 0,
        False,
        frozenset(),
    ),
    No2Item(
        '4.n4',
        lambda n, q: Fraction(q ** 4 - 1, q + 1),
        lambda n, q: 6 * (q - 1),
        lambda n: n == 4,
        False,
        frozenset({2}),
        fixed_n=(4,),
    ),
)


def check_item(item: No2Item, n: int, q_hi: int) -> No2Result:
    qs = [q for q in range(2, q_hi + 1) if is_prime_power(q) and not (item.odd_q_only and q % 2 == 0)]
    violations = tuple(q for q in qs if not item.lhs(n, q) > item.rhs(n, q))
    exceptions = tuple(sorted(q for q in item.exceptions if q <= q_hi))
    return No2Result(item=item.id, n=n, violations=violations, exceptions=exceptions)


def no2_inequalities(n_hi: int = 12, q_hi: int = 64) -> List[No2Result]:
    """Every (item, n) over prime powers q <= q_hi; each is ok when the violations are exactly the exceptions."""
    results = []
    for item in NO2_ITEMS:
        for n in item.n_values(n_hi):
            result = check_item(item, n, q_hi)
            if not result.ok:
                _l.warning(f'no2 item {item.id} n={n}: violations {result.violations}, expected {result.exceptions}')
            results.append(result)
    return results
