from dataclasses import dataclass
from typing import (
    Optional,
    Tuple,
)

import numpy as np

from ..errors import (
    DimensionMismatch,
    FieldMismatch,
    SingularGenerator,
)
from ..gf import FieldCtx
from ..json import Json
from ..matgf import (
    Mat,
    kernel_for,
)


@dataclass(frozen=True)
class GroupSpec:
    """A matrix group given by generators, optionally with a name and its known order."""
    ctx: FieldCtx
    gens: Tuple[Mat, ...]
    name: Optional[str] = None
    order: Optional[int] = None

    def __post_init__(self) -> None:
        if len(self.gens) == 0:
            raise ValueError('a group spec needs at least one generator')
        dim = self.gens[0].rows
        for i, g in enumerate(self.gens):
            if g.ctx != self.ctx:
                raise FieldMismatch(f'generator {i} lives over {g.ctx}, expected {self.ctx}')
            if g.rows != dim or g.cols != dim:
                raise DimensionMismatch(f'generator {i} is {g.rows}x{g.cols}, expected {dim}x{dim}')
            if not g.is_invertible():
                raise SingularGenerator(f'generator {i} is singular')

    @property
    def dim(self) -> int:
        return self.gens[0].rows

    @property
    def label(self) -> str:
        if self.name is not None:
            return self.name
        return f'<{len(self.gens)} gens in GL{self.dim}({self.ctx.q})>'

    def gen_stack(self) -> np.ndarray:
        return np.stack([g.to_array() for g in self.gens]).astype(kernel_for(self.ctx).dtype)

    def conjugate(self, p: Mat) -> 'GroupSpec':
        return GroupSpec(self.ctx, tuple(g.conjugate(p) for g in self.gens), self.name, self.order)

    def json(self) -> Json:
        return {
            'p': self.ctx.p,
            'k': self.ctx.k,
            'dim': self.dim,
            'name': self.name,
            'order': self.order,
            'gens': [g.to_rows() for g in self.gens],
        }


def group_spec(ctx: FieldCtx, gens: Tuple[Mat, ...], name: Optional[str] = None, order: Optional[int] = None) -> GroupSpec:
    return GroupSpec(ctx, tuple(gens), name, order)


def gl_order(n: int, q: int) -> int:
    result = 1
    for i in range(n):
        result *= q ** n - q ** i
    return result


def gl_generators(ctx: FieldCtx, n: int) -> Tuple[Mat, ...]:
    """Elementary transvections I + b*E_ij over a prime-field basis b, plus diag(w, 1, ..., 1) for primitive w."""
    basis = [ctx.p ** i for i in range(ctx.k)]
    gens = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for b in basis:
                rows = Mat.identity(ctx, n).to_rows()
                rows[i][j] = b
                gens.append(Mat.from_rows(ctx, rows))
    if ctx.q > 2:
        values = [1] * n
        values[0] = ctx.primitive_element()
        gens.append(Mat.diag(ctx, values))
    return tuple(gens)


def general_linear(ctx: FieldCtx, n: int) -> GroupSpec:
    return GroupSpec(ctx, gl_generators(ctx, n), f'GL{n}({ctx.q})', gl_order(n, ctx.q))
