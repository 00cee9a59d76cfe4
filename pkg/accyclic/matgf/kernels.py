"""
Batched numpy arithmetic over a FieldCtx. Arrays hold canonical encodings with
matrices on the last two axes.
"""

import functools
import logging
from typing import (
    Iterable,
    List,
    Sequence,
)

import numpy as np

from ..gf import FieldCtx

_l = logging.getLogger(__name__)


def storage_dtype(ctx: FieldCtx) -> np.dtype:
    if ctx.q <= 2 ** 8:
        return np.dtype(np.uint8)
    if ctx.q <= 2 ** 16:
        return np.dtype(np.uint16)
    return np.dtype(np.uint32)


class FieldKernel:
    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.dtype = storage_dtype(ctx)
        if not ctx.is_prime_field:
            order = ctx.q - 1
            exp = np.asarray(ctx.exp_table, dtype=np.int64)
            self._order = order
            self._exp2 = np.concatenate([exp, exp])
            self._log = np.asarray(ctx.log_table, dtype=np.int64)
            if ctx.p != 2:
                self._zech = np.asarray(ctx.zech_table, dtype=np.int64)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.ctx.is_prime_field:
            return (a * b) % self.ctx.p
        zero = (a == 0) | (b == 0)
        prod = self._exp2[self._log[a] + self._log[b]]
        return np.where(zero, 0, prod)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.ctx.is_prime_field:
            return (a + b) % self.ctx.p
        if self.ctx.p == 2:
            return a ^ b
        la = self._log[a]
        lb = self._log[b]
        z = self._zech[(lb - la) % self._order]
        total = np.where(z < 0, 0, self._exp2[np.where(z < 0, 0, la + z) % self._order])
        total = np.where(a == 0, b, total)
        return np.where(b == 0, a, total)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.ctx.is_prime_field:
            prod = np.matmul(a.astype(np.int64), b.astype(np.int64)) % self.ctx.p
            return prod.astype(self.dtype)
        inner = a.shape[-1]
        out = np.zeros(a.shape[:-1] + b.shape[-1:], dtype=np.int64)
        for k in range(inner):
            term = self.mul(a[..., :, k, None], b[..., None, k, :])
            out = self.add(out, term)
        return out.astype(self.dtype)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=self.dtype)

    def is_identity(self, stack: np.ndarray) -> np.ndarray:
        n = stack.shape[-1]
        return np.all(stack == self.identity(n), axis=(-2, -1))

    def orders(self, stack: np.ndarray, cap: int) -> np.ndarray:
        """Multiplicative orders of each matrix in the stack; 0 where the order exceeds cap."""
        count = stack.shape[0]
        result = np.zeros(count, dtype=np.int64)
        remaining = np.arange(count)
        base = stack
        power = stack.copy()
        k = 1
        while remaining.size > 0 and k <= cap:
            done = self.is_identity(power)
            result[remaining[done]] = k
            keep = ~done
            remaining = remaining[keep]
            base = base[keep]
            power = power[keep]
            if remaining.size == 0:
                break
            power = self.matmul(power, base)
            k += 1
        if remaining.size > 0:
            _l.debug(f'{remaining.size} elements exceed order cap {cap}')
        return result

    def pack(self, rows: Iterable[Sequence[Sequence[int]]]) -> np.ndarray:
        return np.asarray(list(rows), dtype=self.dtype)


@functools.lru_cache(maxsize=None)
def kernel_for(ctx: FieldCtx) -> FieldKernel:
    return FieldKernel(ctx)


def batched_matmul(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return kernel_for(ctx).matmul(a, b)


def batched_orders(ctx: FieldCtx, stack: np.ndarray, cap: int) -> List[int]:
    return [int(v) for v in kernel_for(ctx).orders(stack, cap)]
