import numpy as np
import pytest

from accyclic.gf import field_of_order
from accyclic.groupscan import (
    closure_enumerate,
    general_linear,
    random_elements,
    sample_stack,
)

GL3_2 = general_linear(field_of_order(2), 3)


def test_reproducible_for_a_seed():
    a = sample_stack(GL3_2, 300, seed=5)
    b = sample_stack(GL3_2, 300, seed=5)
    assert a.shape == (300, 3, 3)
    assert np.array_equal(a, b)


def test_seed_changes_the_stream():
    assert not np.array_equal(sample_stack(GL3_2, 300, seed=5), sample_stack(GL3_2, 300, seed=6))


def test_worker_count_does_not_change_output():
    assert np.array_equal(sample_stack(GL3_2, 600, seed=1), sample_stack(GL3_2, 600, seed=1, workers=3))


def test_prefix_is_stable():
    # chunks are seeded independently, so a longer run extends a shorter one
    assert np.array_equal(sample_stack(GL3_2, 256, seed=2), sample_stack(GL3_2, 512, seed=2)[:256])


def test_samples_lie_in_the_group():
    closure = closure_enumerate(GL3_2)
    for m in random_elements(GL3_2, 200, seed=3):
        assert m in closure


def test_samples_cover_the_group():
    closure = closure_enumerate(GL3_2)
    seen = {m.entries for m in random_elements(GL3_2, 2000, seed=0)}
    assert len(seen) > closure.order // 2


def test_count_must_be_positive():
    with pytest.raises(ValueError):
        sample_stack(GL3_2, 0)
