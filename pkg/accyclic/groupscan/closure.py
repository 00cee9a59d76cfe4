"""
Breadth-first closure of a matrix group under right multiplication by its generators.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import (
    AbstractSet,
    Iterator,
    List,
    Mapping,
)

import numpy as np

from ..errors import CapExceeded
from ..json import Json
from ..matgf import (
    DEFAULT_ORDER_CAP,
    Mat,
    kernel_for,
)
from .spec import GroupSpec

_l = logging.getLogger(__name__)

DEFAULT_CLOSURE_CAP = 2 * 10 ** 6

FRONTIER_CHUNK = 4096
ORDER_CHUNK = 1 << 16


def _key(arr: np.ndarray) -> bytes:
    return arr.tobytes()


@dataclass(frozen=True)
class Closure:
    spec: GroupSpec
    elements: np.ndarray
    keys: AbstractSet[bytes]
    histogram: Mapping[int, int]

    @property
    def order(self) -> int:
        return int(self.elements.shape[0])

    def __len__(self) -> int:
        return self.order

    def __contains__(self, m: Mat) -> bool:
        if m.ctx != self.spec.ctx or m.rows != self.spec.dim:
            return False
        return _key(m.to_array()) in self.keys

    def mats(self) -> Iterator[Mat]:
        ctx = self.spec.ctx
        for arr in self.elements:
            yield Mat.from_array(ctx, arr)

    def json(self) -> Json:
        return {
            'group': self.spec.label,
            'order': self.order,
            'histogram': {str(o): c for o, c in sorted(self.histogram.items())},
        }


def order_histogram(spec: GroupSpec, elements: np.ndarray, order_cap: int = DEFAULT_ORDER_CAP) -> Mapping[int, int]:
    """Counts of element orders; orders beyond order_cap are counted under 0."""
    kernel = kernel_for(spec.ctx)
    counts: Counter = Counter()
    for start in range(0, elements.shape[0], ORDER_CHUNK):
        orders = kernel.orders(elements[start:start + ORDER_CHUNK], order_cap)
        counts.update(int(o) for o in orders)
    if counts.get(0):
        _l.warning(f'{counts[0]} elements of {spec.label} exceed order cap {order_cap}')
    return dict(sorted(counts.items()))


def closure_enumerate(spec: GroupSpec, cap: int = DEFAULT_CLOSURE_CAP, order_cap: int = DEFAULT_ORDER_CAP) -> Closure:
    assert cap >= 1
    kernel = kernel_for(spec.ctx)
    gens = spec.gen_stack()
    ngen = gens.shape[0]
    identity = kernel.identity(spec.dim)

    seen = {_key(identity)}
    found: List[np.ndarray] = [identity[None, ...]]
    frontier = identity[None, ...]
    depth = 0
    while frontier.shape[0] > 0:
        fresh: List[np.ndarray] = []
        for start in range(0, frontier.shape[0], FRONTIER_CHUNK):
            block = frontier[start:start + FRONTIER_CHUNK]
            products = kernel.matmul(block[:, None, :, :], gens[None, :, :, :])
            products = np.ascontiguousarray(products.reshape(-1, spec.dim, spec.dim))
            keep = []
            for i in range(products.shape[0]):
                key = _key(products[i])
                if key not in seen:
                    seen.add(key)
                    keep.append(i)
            if len(seen) > cap:
                raise CapExceeded(cap, f'closure of {spec.label}')
            if keep:
                fresh.append(products[keep])
        frontier = np.concatenate(fresh) if fresh else frontier[:0]
        found.append(frontier)
        depth += 1
        _l.debug(f'{spec.label}: depth {depth}, {len(seen)} elements, frontier {frontier.shape[0]} ({ngen} gens)')

    elements = np.concatenate(found)
    if spec.order is not None and elements.shape[0] != spec.order:
        _l.warning(f'{spec.label}: closure has {elements.shape[0]} elements, expected {spec.order}')
    return Closure(spec, elements, seen, order_histogram(spec, elements, order_cap))
