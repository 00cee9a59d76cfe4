"""
Almost-cyclicity of matrices over finite fields, and the screening machinery for
almost cyclic p-elements in groups of Lie type.
"""

from .accyc import (
    Mode,
    Verdict,
    is_almost_cyclic,
    oracle_is_almost_cyclic,
)
from .gf import (
    FieldCtx,
    field_create,
    field_of_order,
)
from .matgf import Mat

__all__ = [
    'FieldCtx',
    'Mat',
    'Mode',
    'Verdict',
    'field_create',
    'field_of_order',
    'is_almost_cyclic',
    'oracle_is_almost_cyclic',
]
