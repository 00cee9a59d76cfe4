import logging

from ..errors import CapExceeded
from ..gf import field_of_order
from ..matgf import DEFAULT_ORDER_CAP
from ..numth import p_part
from .closure import (
    DEFAULT_CLOSURE_CAP,
    closure_enumerate,
)
from .spec import (
    general_linear,
    gl_order,
)

_l = logging.getLogger(__name__)


def eta_oracle(n: int, q: int, p: int, cap: int = DEFAULT_CLOSURE_CAP) -> int:
    """Largest order of a p-element of GL_n(q), by enumerating the whole group."""
    size = gl_order(n, q)
    if size > cap:
        raise CapExceeded(cap, f'GL{n}({q}) of order {size}')
    spec = general_linear(field_of_order(q), n)
    closure = closure_enumerate(spec, cap, DEFAULT_ORDER_CAP)
    assert closure.order == size, (closure.order, size)
    best = max(p_part(o, p) for o in closure.histogram if o > 0)
    _l.debug(f'eta oracle p={p} GL{n}({q}): {best}')
    return best
