import logging
from dataclasses import dataclass
from typing import (
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from ..errors import (
    DimensionMismatch,
    FieldMismatch,
    NotSquare,
    Singular,
)
from ..gf import FieldCtx
from ..poly import Poly
from .kernels import kernel_for

_l = logging.getLogger(__name__)

DEFAULT_ORDER_CAP = 10 ** 6


@dataclass(frozen=True)
class Mat:
    ctx: FieldCtx
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch(f'a matrix cannot be {self.rows}x{self.cols}')
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(f'{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix')
        q = self.ctx.q
        for e in self.entries:
            if not 0 <= e < q:
                raise ValueError(f'entry {e} is not an element of {self.ctx}')

    @staticmethod
    def from_rows(ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> 'Mat':
        nrows = len(rows)
        ncols = len(rows[0]) if nrows > 0 else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch('rows have different lengths')
        return Mat(ctx, nrows, ncols, tuple(int(e) for r in rows for e in r))

    @staticmethod
    def zeros(ctx: FieldCtx, rows: int, cols: Optional[int] = None) -> 'Mat':
        cols = rows if cols is None else cols
        return Mat(ctx, rows, cols, (0,) * (rows * cols))

    @staticmethod
    def scalar(ctx: FieldCtx, n: int, c: int) -> 'Mat':
        return Mat.diag(ctx, [c] * n)

    @staticmethod
    def identity(ctx: FieldCtx, n: int) -> 'Mat':
        return Mat.scalar(ctx, n, 1)

    @staticmethod
    def diag(ctx: FieldCtx, values: Sequence[int]) -> 'Mat':
        n = len(values)
        entries = [0] * (n * n)
        for i, v in enumerate(values):
            entries[i * n + i] = v
        return Mat(ctx, n, n, tuple(entries))

    @staticmethod
    def companion(f: Poly) -> 'Mat':
        """Companion matrix of a monic f: ones on the subdiagonal, -c_i down the last column."""
        ctx = f.ctx
        n = int(f.degree)
        entries = [0] * (n * n)
        for i in range(1, n):
            entries[i * n + i - 1] = 1
        for i in range(n):
            entries[i * n + n - 1] = ctx.neg(f.coeff(i))
        return Mat(ctx, n, n, tuple(entries))

    @staticmethod
    def jordan_block(ctx: FieldCtx, alpha: int, size: int) -> 'Mat':
        entries = [0] * (size * size)
        for i in range(size):
            entries[i * size + i] = alpha
            if i + 1 < size:
                entries[i * size + i + 1] = 1
        return Mat(ctx, size, size, tuple(entries))

    @staticmethod
    def block_diag(*blocks: 'Mat') -> 'Mat':
        ctx = blocks[0].ctx
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        rows = [[0] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            if b.ctx != ctx:
                raise FieldMismatch('blocks live over different fields')
            for i in range(b.rows):
                for j in range(b.cols):
                    rows[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return Mat.from_rows(ctx, rows)

    @staticmethod
    def from_array(ctx: FieldCtx, arr: np.ndarray) -> 'Mat':
        rows, cols = arr.shape
        return Mat(ctx, int(rows), int(cols), tuple(int(e) for e in arr.reshape(-1)))

    def to_array(self) -> np.ndarray:
        kernel = kernel_for(self.ctx)
        return np.asarray(self.entries, dtype=kernel.dtype).reshape(self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def _same_field(self, other: 'Mat') -> None:
        if other.ctx != self.ctx:
            raise FieldMismatch(f'cannot combine matrices over {self.ctx} and {other.ctx}')

    def require_square(self) -> None:
        if not self.is_square:
            raise NotSquare(f'expected a square matrix, got {self.rows}x{self.cols}')

    def __add__(self, other: 'Mat') -> 'Mat':
        self._same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(f'cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}')
        add = self.ctx.add
        return Mat(self.ctx, self.rows, self.cols, tuple(add(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> 'Mat':
        return Mat(self.ctx, self.rows, self.cols, tuple(self.ctx.neg(a) for a in self.entries))

    def __sub__(self, other: 'Mat') -> 'Mat':
        return self + (-other)

    def __mul__(self, other: 'Mat') -> 'Mat':
        self._same_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f'cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}')
        add, mul = self.ctx.add, self.ctx.mul
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = 0
                for k, a in enumerate(r):
                    if a:
                        b = other.entries[k * other.cols + j]
                        if b:
                            acc = add(acc, mul(a, b))
                out.append(acc)
        return Mat(self.ctx, self.rows, other.cols, tuple(out))

    def __pow__(self, n: int) -> 'Mat':
        self.require_square()
        if n < 0:
            return self.inverse() ** (-n)
        result = Mat.identity(self.ctx, self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scalar_mul(self, c: int) -> 'Mat':
        return Mat(self.ctx, self.rows, self.cols, tuple(self.ctx.mul(c, a) for a in self.entries))

    def sub_scalar(self, lam: int) -> 'Mat':
        """self - lam * Id"""
        self.require_square()
        return self - Mat.scalar(self.ctx, self.rows, lam)

    def transpose(self) -> 'Mat':
        return Mat(self.ctx, self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def rank(self) -> int:
        return _row_reduce(self.ctx, self.to_rows())

    def rank_nullity(self) -> Tuple[int, int]:
        r = self.rank()
        return r, self.cols - r

    def nullity(self) -> int:
        return self.rank_nullity()[1]

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.rows

    def is_identity(self) -> bool:
        return self.is_square and self == Mat.identity(self.ctx, self.rows)

    def inverse(self) -> 'Mat':
        self.require_square()
        ctx = self.ctx
        n = self.rows
        aug = [list(self.row(i)) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise Singular('matrix is not invertible')
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = ctx.inv(aug[col][col])
            aug[col] = [ctx.mul(inv, v) for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(aug[r], aug[col])]
        return Mat.from_rows(ctx, [r[n:] for r in aug])

    def det(self) -> int:
        self.require_square()
        ctx = self.ctx
        n = self.rows
        rows = self.to_rows()
        result = 1
        for col in range(n):
            pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
            if pivot is None:
                return 0
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                result = ctx.neg(result)
            result = ctx.mul(result, rows[col][col])
            inv = ctx.inv(rows[col][col])
            for r in range(col + 1, n):
                if rows[r][col] != 0:
                    f = ctx.mul(rows[r][col], inv)
                    rows[r] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(rows[r], rows[col])]
        return result

    def conjugate(self, p: 'Mat') -> 'Mat':
        """p * self * p^-1"""
        return p * self * p.inverse()

    def __str__(self) -> str:
        return '\n'.join(' '.join(str(e) for e in self.row(i)) for i in range(self.rows))


def _row_reduce(ctx: FieldCtx, rows: List[List[int]]) -> int:
    """In-place row echelon form with any-nonzero pivoting; returns the rank."""
    if len(rows) == 0:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = ctx.inv(rows[rank][col])
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                f = ctx.mul(rows[r][col], inv)
                rows[r] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def mat_arith(a: Mat, b: Optional[Mat], op: str, n: int = 0, c: int = 0) -> Mat:
    if op == 'add':
        assert b is not None
        return a + b
    elif op == 'mul':
        assert b is not None
        return a * b
    elif op == 'pow':
        return a ** n
    elif op == 'scalar_mul':
        return a.scalar_mul(c)
    elif op == 'sub_scalar':
        return a.sub_scalar(c)
    else:
        raise ValueError(f'Unknown matrix operation {op}')


def rank_nullity(a: Mat) -> Tuple[int, int]:
    return a.rank_nullity()


def element_order(a: Mat, cap: int = DEFAULT_ORDER_CAP) -> Optional[int]:
    a.require_square()
    if not a.is_invertible():
        raise Singular('element_order needs an invertible matrix')
    kernel = kernel_for(a.ctx)
    order = int(kernel.orders(a.to_array()[None, ...], cap)[0])
    return order if order > 0 else None


def stack(mats: Iterable[Mat]) -> np.ndarray:
    arrays = [m.to_array() for m in mats]
    return np.stack(arrays)
