from .alpha import (
    AlphaBound,
    alpha_bound,
    alpha_upper,
)
from .formulas import (
    DimBound,
    dim_bound,
    dim_lower,
)
from .no2 import no2_inequalities
from .registry import (
    Registry,
    Rule,
    load_registry,
)
from .screen import (
    FixtureResult,
    Status,
    SurvivorReport,
    screen,
    verify_fixture_suite,
)
from .tables import check_tables

__all__ = [
    'AlphaBound',
    'DimBound',
    'FixtureResult',
    'Registry',
    'Rule',
    'Status',
    'SurvivorReport',
    'alpha_bound',
    'alpha_upper',
    'check_tables',
    'dim_bound',
    'dim_lower',
    'load_registry',
    'no2_inequalities',
    'screen',
    'verify_fixture_suite',
]
