"""
Smith normal form of x*Id - A over F[x], used as the invariant-factor oracle.
"""

import logging
from typing import (
    List,
    Optional,
    Tuple,
)

from ..poly import Poly
from .mat import Mat

_l = logging.getLogger(__name__)

PolyMatrix = List[List[Poly]]


def characteristic_matrix(a: Mat) -> PolyMatrix:
    a.require_square()
    ctx = a.ctx
    n = a.rows
    x = Poly.x(ctx)
    out: PolyMatrix = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = Poly.const(ctx, ctx.neg(a[i, j]))
            if i == j:
                entry = entry + x
            row.append(entry)
        out.append(row)
    return out


def _least_degree_entry(m: PolyMatrix, t: int) -> Optional[Tuple[int, int]]:
    best: Optional[Tuple[int, int]] = None
    for i in range(t, len(m)):
        for j in range(t, len(m)):
            if m[i][j].is_zero:
                continue
            if best is None or m[i][j].degree < m[best[0]][best[1]].degree:
                best = (i, j)
    return best


def _move_to_corner(m: PolyMatrix, t: int, i: int, j: int) -> None:
    m[t], m[i] = m[i], m[t]
    for row in m:
        row[t], row[j] = row[j], row[t]


def _clear_cross(m: PolyMatrix, t: int) -> bool:
    """Reduce row t and column t against the pivot; True if nothing nonzero is left."""
    n = len(m)
    pivot = m[t][t]
    clean = True
    for i in range(t + 1, n):
        if m[i][t].is_zero:
            continue
        quot, rem = m[i][t].divrem(pivot)
        m[i] = [a - b * quot for a, b in zip(m[i], m[t])]
        if not rem.is_zero:
            clean = False
    for j in range(t + 1, n):
        if m[t][j].is_zero:
            continue
        quot, rem = m[t][j].divrem(pivot)
        for row in m:
            row[j] = row[j] - row[t] * quot
        if not rem.is_zero:
            clean = False
    return clean


def smith_diagonal(m: PolyMatrix) -> List[Poly]:
    n = len(m)
    diagonal: List[Poly] = []
    for t in range(n):
        while True:
            corner = _least_degree_entry(m, t)
            if corner is None:
                break
            _move_to_corner(m, t, *corner)
            if not _clear_cross(m, t):
                continue
            # the pivot must divide every remaining entry
            offender = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if not m[t][t].divides(m[i][j])),
                None,
            )
            if offender is None:
                break
            m[t] = [a + b for a, b in zip(m[t], m[offender])]
        diagonal.append(m[t][t].monic())
    return diagonal


def invariant_factors(a: Mat) -> List[Poly]:
    """Nonconstant invariant factors f_1 | ... | f_t; their product is the characteristic polynomial."""
    diagonal = smith_diagonal(characteristic_matrix(a))
    factors = [f for f in diagonal if not f.is_zero and f.degree > 0]
    factors.sort(key=lambda f: f.degree)
    return factors
