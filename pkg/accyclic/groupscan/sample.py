"""
Reproducible random elements by product replacement.

Samples are drawn in fixed-size chunks, each with its own stream spawned from the
master seed, so the output for a given (seed, count) does not depend on how the
chunks are spread over workers.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import (
    List,
    Optional,
)

import numpy as np

from ..matgf import (
    FieldKernel,
    Mat,
    kernel_for,
)
from .spec import GroupSpec

_l = logging.getLogger(__name__)

SAMPLE_CHUNK = 256
BURN_IN = 64
STEPS_PER_SAMPLE = 2
MIN_SLOTS = 10


class _Replacer:
    def __init__(self, kernel: FieldKernel, gens: np.ndarray, rng: np.random.Generator):
        self.kernel = kernel
        self.rng = rng
        count = max(MIN_SLOTS, gens.shape[0])
        self.slots = [gens[i % gens.shape[0]].copy() for i in range(count)]
        self.acc = kernel.identity(gens.shape[-1])

    def step(self) -> None:
        i, j = (int(v) for v in self.rng.choice(len(self.slots), size=2, replace=False))
        if self.rng.integers(2):
            self.slots[i] = self.kernel.matmul(self.slots[i], self.slots[j])
        else:
            self.slots[i] = self.kernel.matmul(self.slots[j], self.slots[i])
        self.acc = self.kernel.matmul(self.acc, self.slots[i])


def _chunk(kernel: FieldKernel, gens: np.ndarray, seed: np.random.SeedSequence, size: int) -> np.ndarray:
    replacer = _Replacer(kernel, gens, np.random.default_rng(seed))
    for _ in range(BURN_IN):
        replacer.step()
    out = []
    for _ in range(size):
        for _ in range(STEPS_PER_SAMPLE):
            replacer.step()
        out.append(replacer.acc.copy())
    return np.stack(out)


def sample_stack(spec: GroupSpec, count: int, seed: int = 0, workers: int = 1) -> np.ndarray:
    if count < 1:
        raise ValueError(f'sample count must be at least 1, got {count}')
    kernel = kernel_for(spec.ctx)
    gens = spec.gen_stack()
    nchunks = -(-count // SAMPLE_CHUNK)
    seeds = np.random.SeedSequence(seed).spawn(nchunks)
    sizes = [min(SAMPLE_CHUNK, count - i * SAMPLE_CHUNK) for i in range(nchunks)]

    def run(i: int) -> np.ndarray:
        return _chunk(kernel, gens, seeds[i], sizes[i])

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            chunks = list(executor.map(run, range(nchunks)))
    else:
        chunks = [run(i) for i in range(nchunks)]
    _l.debug(f'{spec.label}: sampled {count} elements in {nchunks} chunks (seed {seed})')
    return np.concatenate(chunks)


def random_elements(spec: GroupSpec, count: int, seed: int = 0, workers: Optional[int] = None) -> List[Mat]:
    arrays = sample_stack(spec, count, seed, workers or 1)
    return [Mat.from_array(spec.ctx, a) for a in arrays]
