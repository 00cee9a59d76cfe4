import logging
from typing import (
    List,
    Tuple,
)

from ..errors import MinpolyNotDividing
from ..poly import Poly
from .mat import Mat

_l = logging.getLogger(__name__)


def hessenberg(a: Mat) -> List[List[int]]:
    """Upper Hessenberg form similar to a, by elimination with row/column pairs."""
    a.require_square()
    ctx = a.ctx
    n = a.rows
    h = a.to_rows()
    for m in range(1, n - 1):
        pivot = next((i for i in range(m, n) if h[i][m - 1] != 0), None)
        if pivot is None:
            continue
        if pivot != m:
            h[pivot], h[m] = h[m], h[pivot]
            for row in h:
                row[pivot], row[m] = row[m], row[pivot]
        inv = ctx.inv(h[m][m - 1])
        for i in range(m + 1, n):
            u = ctx.mul(h[i][m - 1], inv)
            if u == 0:
                continue
            h[i] = [ctx.sub(x, ctx.mul(u, y)) for x, y in zip(h[i], h[m])]
            for row in h:
                row[m] = ctx.add(row[m], ctx.mul(u, row[i]))
    return h


def charpoly(a: Mat) -> Poly:
    a.require_square()
    ctx = a.ctx
    n = a.rows
    h = hessenberg(a)
    x = Poly.x(ctx)
    ps = [Poly.const(ctx, 1)]
    for m in range(n):
        pm = (x - Poly.const(ctx, h[m][m])) * ps[m]
        t = 1
        for i in range(m - 1, -1, -1):
            t = ctx.mul(t, h[i + 1][i])
            if t == 0:
                break
            c = ctx.mul(t, h[i][m])
            if c:
                pm = pm - ps[i].scale(c)
        ps.append(pm)
    return ps[n]


def _mat_vec(a: Mat, v: List[int]) -> List[int]:
    ctx = a.ctx
    out = []
    for i in range(a.rows):
        acc = 0
        for aij, vj in zip(a.row(i), v):
            if aij and vj:
                acc = ctx.add(acc, ctx.mul(aij, vj))
        out.append(acc)
    return out


def order_polynomial(a: Mat, v: List[int]) -> Poly:
    """Monic generator of {f : f(a) v = 0}, found by Krylov spinning."""
    ctx = a.ctx
    x = Poly.x(ctx)
    # echelon basis of the Krylov space as (pivot, vector, combination in powers of a)
    basis: List[Tuple[int, List[int], Poly]] = []
    raw = list(v)
    d = 0
    while True:
        w = list(raw)
        comb = x ** d
        for pivot, bvec, bcomb in basis:
            c = w[pivot]
            if c:
                w = [ctx.sub(wi, ctx.mul(c, bi)) for wi, bi in zip(w, bvec)]
                comb = comb - bcomb.scale(c)
        pivot = next((i for i, wi in enumerate(w) if wi != 0), None)
        if pivot is None:
            return comb.monic()
        inv = ctx.inv(w[pivot])
        basis.append((pivot, [ctx.mul(inv, wi) for wi in w], comb.scale(inv)))
        raw = _mat_vec(a, raw)
        d += 1


def minpoly(a: Mat) -> Poly:
    a.require_square()
    ctx = a.ctx
    n = a.rows
    result = Poly.const(ctx, 1)
    for i in range(n):
        e = [0] * n
        e[i] = 1
        result = result.lcm(order_polynomial(a, e))
    cp = charpoly(a)
    if not result.divides(cp):
        raise MinpolyNotDividing(f'minimal polynomial {result} does not divide characteristic polynomial {cp}')
    return result


def poly_at_matrix(f: Poly, a: Mat) -> Mat:
    a.require_square()
    acc = Mat.zeros(a.ctx, a.rows)
    for c in reversed(f.coeffs):
        acc = acc * a + Mat.scalar(a.ctx, a.rows, c)
    return acc
