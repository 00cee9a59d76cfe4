import pytest
import sympy

from accyclic.errors import CapExceeded
from accyclic.gf import field_of_order
from accyclic.groupscan import (
    closure_enumerate,
    eta_oracle,
    general_linear,
    gl_order,
)
from accyclic.numth import (
    eta_gl,
    p_part,
)


@pytest.mark.parametrize('n, q', [(2, 2), (2, 3), (2, 5), (2, 7), (3, 2), (3, 3)])
def test_oracle_matches_formula(n, q):
    for p in sympy.primefactors(gl_order(n, q)):
        assert eta_oracle(n, q, p) == eta_gl(p, n, q), (n, q, p)


def test_gl2_2():
    assert eta_oracle(2, 2, 3) == 3
    assert eta_oracle(2, 2, 2) == 2


def test_gl2_3():
    assert eta_oracle(2, 3, 2) == 8


def test_cap():
    with pytest.raises(CapExceeded):
        eta_oracle(3, 3, 2, cap=1000)


@pytest.mark.slow
@pytest.mark.parametrize('n, q', [(3, 4), (3, 5)])
def test_oracle_matches_formula_large(n, q):
    closure = closure_enumerate(general_linear(field_of_order(q), n))
    assert closure.order == gl_order(n, q)
    for p in sympy.primefactors(closure.order):
        best = max(p_part(o, p) for o in closure.histogram)
        assert best == eta_gl(p, n, q), (n, q, p)


@pytest.mark.slow
def test_gl3_4():
    assert eta_oracle(3, 4, 3) == 9
