from ..gf import (
    FieldCtx,
    field_embedding,
)
from .charpoly import (
    charpoly,
    hessenberg,
    minpoly,
    order_polynomial,
    poly_at_matrix,
)
from .kernels import (
    FieldKernel,
    batched_matmul,
    batched_orders,
    kernel_for,
)
from .mat import (
    DEFAULT_ORDER_CAP,
    Mat,
    element_order,
    mat_arith,
    rank_nullity,
    stack,
)
from .smith import invariant_factors


def base_change(a: Mat, dst: FieldCtx) -> Mat:
    embed = field_embedding(a.ctx, dst)
    return Mat(dst, a.rows, a.cols, tuple(embed(e) for e in a.entries))


__all__ = [
    'DEFAULT_ORDER_CAP',
    'FieldKernel',
    'Mat',
    'base_change',
    'batched_matmul',
    'batched_orders',
    'charpoly',
    'element_order',
    'hessenberg',
    'invariant_factors',
    'kernel_for',
    'mat_arith',
    'minpoly',
    'order_polynomial',
    'poly_at_matrix',
    'rank_nullity',
    'stack',
]
