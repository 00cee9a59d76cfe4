from .closure import (
    DEFAULT_CLOSURE_CAP,
    Closure,
    closure_enumerate,
    order_histogram,
)
from .oracle import eta_oracle
from .sample import (
    random_elements,
    sample_stack,
)
from .scan import (
    DEFAULT_POLICY,
    Fingerprint,
    Outcome,
    Policy,
    ScanReport,
    parse_policy,
    scan_almost_cyclic,
)
from .spec import (
    GroupSpec,
    general_linear,
    gl_generators,
    gl_order,
    group_spec,
)

__all__ = [
    'Closure',
    'DEFAULT_CLOSURE_CAP',
    'DEFAULT_POLICY',
    'Fingerprint',
    'GroupSpec',
    'Outcome',
    'Policy',
    'ScanReport',
    'closure_enumerate',
    'eta_oracle',
    'general_linear',
    'gl_generators',
    'gl_order',
    'group_spec',
    'order_histogram',
    'parse_policy',
    'random_elements',
    'sample_stack',
    'scan_almost_cyclic',
]
