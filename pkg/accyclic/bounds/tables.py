"""
Printed case tables whose rows must satisfy the screening inequality strictly.
"""

import logging
from dataclasses import dataclass
from typing import (
    List,
    Optional,
    Tuple,
)

from ..errors import OutOfDomain
from ..json import Json
from ..numth import (
    eta_gl,
    eta_sl,
)
from .alpha import alpha_upper
from .formulas import dim_lower
from .screen import FixtureResult

_l = logging.getLogger(__name__)


@dataclass(frozen=True)
class CaseRow:
    """One group with printed bounds for |g|, alpha(g) and dim phi."""
    group: str
    family: str
    n: int
    q: int
    order_cap: int
    alpha: int
    dim: int
    formula: str

    def json(self) -> Json:
        return {
            'group': self.group,
            'family': self.family,
            'n': self.n,
            'q': self.q,
            'order_cap': self.order_cap,
            'alpha': self.alpha,
            'dim': self.dim,
            'formula': self.formula,
        }


def _row(group: str, family: str, n: int, q: int, cap: int, alpha: int, dim: int, formula: str) -> CaseRow:
    return CaseRow(group, family, n, q, cap, alpha, dim, formula)


# PSp rows use the rank
NON_WEIL_TABLE: Tuple[CaseRow, ...] = (
    _row('PSL3(5)', 'PSL', 3, 5, 31, 3, 96, 'gmst2.A'),
    _row('PSL3(7)', 'PSL', 3, 7, 19, 4, 96, 'gmst2.A'),
    _row('PSL3(13)', 'PSL', 3, 13, 61, 4, 672, 'gmst2.A'),
    _row('PSL4(4)', 'PSL', 4, 4, 17, 6, 189, 'gmst2.A'),
    _row('PSL4(5)', 'PSL', 4, 5, 31, 6, 248, 'gmst2.A'),
    _row('PSL4(7)', 'PSL', 4, 7, 25, 6, 1026, 'gmst2.A'),
    _row('PSL4(9)', 'PSL', 4, 9, 41, 6, 2912, 'gmst2.A'),
    _row('PSL4(11)', 'PSL', 4, 11, 61, 6, 6650, 'gmst2.A'),
    _row('PSL4(13)', 'PSL', 4, 13, 61, 6, 13176, 'gmst2.A'),
    _row('PSU3(5)', 'PSU', 3, 5, 8, 3, 28, 'gmst2.B3'),
    _row('PSU3(8)', 'PSU', 3, 8, 19, 3, 105, 'gmst2.B3'),
    _row('PSU3(11)', 'PSU', 3, 11, 37, 3, 260, 'gmst2.B3'),
    _row('PSU3(17)', 'PSU', 3, 17, 32, 3, 912, 'gmst2.B3'),
    _row('PSU4(4)', 'PSU', 4, 4, 17, 6, 220, 'gmst2.B2'),
    _row('PSU4(5)', 'PSU', 4, 5, 13, 6, 272, 'gmst2.B2'),
    _row('PSU4(7)', 'PSU', 4, 7, 43, 6, 1074, 'gmst2.B2'),
    _row('PSU4(9)', 'PSU', 4, 9, 64, 6, 2992, 'gmst2.B2'),
    _row('PSU4(11)', 'PSU', 4, 11, 64, 6, 6770, 'gmst2.B2'),
    _row('PSU5(3)', 'PSU', 5, 3, 61, 5, 324, 'gmst2.B1'),
    _row('PSU7(2)', 'PSU', 7, 2, 43, 7, 320, 'gmst2.B1'),
    _row('PSp4(7)', 'PSp', 2, 7, 25, 5, 126, 'gmst2.C'),
    _row('PSp4(9)', 'PSp', 2, 9, 41, 5, 288, 'gmst2.C'),
    _row('PSp4(11)', 'PSp', 2, 11, 61, 5, 550, 'gmst2.C'),
    _row('PSp6(3)', 'PSp', 3, 3, 13, 6, 78, 'gmst2.C'),
    _row('PSp8(3)', 'PSp', 4, 3, 41, 8, 780, 'gmst2.C'),
)


@dataclass(frozen=True)
class TwoElementRow:
    group: str
    n: int
    q: int
    eta2: int
    dim: int

    def json(self) -> Json:
        return {'group': self.group, 'n': self.n, 'q': self.q, 'eta2': self.eta2, 'dim': self.dim}


# 2-elements of PSL_n(q), q odd: eta_2(L) and the md6 bound
TWO_ELEMENT_TABLE: Tuple[TwoElementRow, ...] = (
    TwoElementRow('PSL3(5)', 3, 5, 8, 29),
    TwoElementRow('PSL3(9)', 3, 9, 16, 89),
    TwoElementRow('PSL3(11)', 3, 11, 8, 131),
    TwoElementRow('PSL3(13)', 3, 13, 8, 181),
    TwoElementRow('PSL4(5)', 4, 5, 8, 154),
    TwoElementRow('PSL5(3)', 5, 3, 16, 119),
)


def check_case_row(row: CaseRow) -> FixtureResult:
    rid = f'table:{row.group}'
    computed = dim_lower(row.formula, row.n, row.q)
    if computed != row.dim:
        return FixtureResult(rid, False, f'{row.formula} gives {computed}, table has {row.dim}')
    rhs = row.alpha * (row.order_cap - 1)
    if not rhs < row.dim:
        return FixtureResult(rid, False, f'{row.alpha}*({row.order_cap}-1) = {rhs} is not below {row.dim}')
    return FixtureResult(rid, True, f'{rhs} < {row.dim}')


def _eta2(row: TwoElementRow) -> Tuple[Optional[int], int]:
    """(exact eta_2 of SL when covered, eta_2 of GL as an upper bound)."""
    bound = eta_gl(2, row.n, row.q)
    try:
        return eta_sl(2, row.n, row.q), bound
    except OutOfDomain:
        return None, bound


def check_two_element_row(row: TwoElementRow) -> FixtureResult:
    rid = f'eta2:{row.group}'
    computed = dim_lower('md6.2', row.n, row.q)
    if computed != row.dim:
        return FixtureResult(rid, False, f'md6.2 gives {computed}, table has {row.dim}')
    exact, bound = _eta2(row)
    if exact is not None and exact != row.eta2:
        return FixtureResult(rid, False, f'eta_2 computes to {exact}, table has {row.eta2}')
    if row.eta2 > bound:
        return FixtureResult(rid, False, f'eta_2 {row.eta2} exceeds the GL bound {bound}')
    alpha = alpha_upper('PSL', {'n': row.n, 'q': row.q}, 'generic')
    rhs = alpha * (row.eta2 - 1)
    if not rhs < row.dim:
        return FixtureResult(rid, False, f'{alpha}*({row.eta2}-1) = {rhs} is not below {row.dim}')
    return FixtureResult(rid, True, f'{rhs} < {row.dim}')


def check_tables() -> List[FixtureResult]:
    results = [check_case_row(row) for row in NON_WEIL_TABLE]
    results.extend(check_two_element_row(row) for row in TWO_ELEMENT_TABLE)
    return results
