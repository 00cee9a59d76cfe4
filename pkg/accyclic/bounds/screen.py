"""
Screening: a grid point survives a rule when dim_lower <= alpha * (cap - shift).
"""

import enum
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import (
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from ..errors import AccyclicError
from ..json import Json
from ..numth import Rational
from .alpha import alpha_bound
from .caps import order_cap
from .formulas import dim_lower
from .grid import Grid, Point
from .registry import (
    Key,
    Registry,
    Rule,
)

_l = logging.getLogger(__name__)


class Status(enum.Enum):
    OK = 'ok'
    WINDOW_VIOLATION = 'window-violation'
    ERROR = 'error'

    def json(self) -> Json:
        return self.value


@dataclass(frozen=True)
class Certificate:
    point: Tuple[Tuple[str, int], ...]
    key: Key
    lhs: Rational
    alpha: int
    cap: Rational
    rhs: Rational

    @property
    def survives(self) -> bool:
        return self.lhs <= self.rhs

    def json(self) -> Json:
        return {
            'point': dict(self.point),
            'key': list(self.key),
            'lhs': str(self.lhs),
            'alpha': self.alpha,
            'cap': str(self.cap),
            'rhs': str(self.rhs),
            'survives': self.survives,
        }


@dataclass(frozen=True)
class PointError:
    key: Key
    message: str

    def json(self) -> Json:
        return {'key': list(self.key), 'message': self.message}


@dataclass(frozen=True)
class SurvivorReport:
    rule_id: str
    expected: Tuple[Key, ...]
    certificates: Tuple[Certificate, ...]
    window: Tuple[Certificate, ...]
    errors: Tuple[PointError, ...]

    @property
    def survivors(self) -> Tuple[Key, ...]:
        return tuple(sorted({c.key for c in self.certificates if c.survives}))

    @property
    def window_violations(self) -> Tuple[Key, ...]:
        return tuple(sorted({c.key for c in self.window if c.survives}))

    @property
    def status(self) -> Status:
        if self.errors:
            return Status.ERROR
        elif self.window_violations:
            return Status.WINDOW_VIOLATION
        return Status.OK

    @property
    def missing(self) -> Tuple[Key, ...]:
        return tuple(sorted(set(self.expected) - set(self.survivors)))

    @property
    def unexpected(self) -> Tuple[Key, ...]:
        return tuple(sorted(set(self.survivors) - set(self.expected)))

    @property
    def passed(self) -> bool:
        return self.status == Status.OK and not self.missing and not self.unexpected

    def json(self) -> Json:
        return {
            'rule': self.rule_id,
            'status': self.status.json(),
            'survivors': [list(k) for k in self.survivors],
            'expected': [list(k) for k in self.expected],
            'window_violations': [list(k) for k in self.window_violations],
            'errors': [e.json() for e in self.errors],
        }


def evaluate(rule: Rule, point: Point) -> Certificate:
    n = point.get('n', 0)
    q = point['q']
    lhs = dim_lower(rule.dim, n, q, rule.ell)
    if rule.alpha_override is not None:
        alpha = rule.alpha_override
    else:
        alpha = alpha_bound(rule.family, point, rule.alpha).value
    cap = order_cap(rule.cap, rule.family, point).cap
    return Certificate(
        point=tuple(sorted(point.items())),
        key=rule.key_of(point),
        lhs=lhs,
        alpha=alpha,
        cap=cap,
        rhs=alpha * (cap - rule.cap_shift),
    )


def _sweep(rule: Rule, grid: Grid, workers: int) -> Tuple[List[Certificate], List[PointError]]:
    points = list(grid.points())

    def attempt(point: Point) -> Union[Certificate, PointError]:
        try:
            return evaluate(rule, point)
        except AccyclicError as e:
            return PointError(key=rule.key_of(point), message=str(e))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(attempt, points))
    else:
        results = [attempt(p) for p in points]

    certificates = [r for r in results if isinstance(r, Certificate)]
    errors = [r for r in results if isinstance(r, PointError)]
    _l.debug(f'{rule.id}: {len(points)} points, {len(errors)} errors')
    return certificates, errors


def screen(rule: Rule, grid: Optional[Grid] = None, workers: int = 1) -> SurvivorReport:
    certificates, errors = _sweep(rule, grid if grid is not None else rule.grid, workers)
    window, window_errors = _sweep(rule, rule.window, workers)
    report = SurvivorReport(
        rule_id=rule.id,
        expected=tuple(sorted(rule.expect)),
        certificates=tuple(certificates),
        window=tuple(window),
        errors=tuple(errors + window_errors),
    )
    if report.window_violations:
        _l.warning(f'{rule.id}: window points pass the inequality: {report.window_violations}')
    return report


@dataclass(frozen=True)
class FixtureResult:
    id: str
    passed: bool
    detail: str

    def line(self) -> str:
        if self.passed:
            return f'PASS {self.id}: {self.detail}'
        return f'FAIL {self.id}: {self.detail}'

    def json(self) -> Json:
        return {'id': self.id, 'passed': self.passed, 'detail': self.detail}


def _fmt_keys(keys: Sequence[Key]) -> str:
    return '{' + ', '.join(str(k[0]) if len(k) == 1 else str(k) for k in keys) + '}'


def rule_result(report: SurvivorReport) -> FixtureResult:
    if report.passed:
        return FixtureResult(f'rule:{report.rule_id}', True, f'survivors {_fmt_keys(report.survivors)}')
    problems = []
    if report.missing:
        problems.append(f'missing {_fmt_keys(report.missing)}')
    if report.unexpected:
        problems.append(f'unexpected {_fmt_keys(report.unexpected)}')
    if report.window_violations:
        problems.append(f'WINDOW_VIOLATION {_fmt_keys(report.window_violations)}')
    if report.errors:
        problems.append(f'{len(report.errors)} errors, first: {report.errors[0].message}')
    return FixtureResult(f'rule:{report.rule_id}', False, '; '.join(problems))


def verify_fixture_suite(registry: Registry, workers: int = 1) -> List[FixtureResult]:
    """Screen every rule and compare with its expected survivors."""
    if len(registry) == 0:
        _l.warning('registry has no rules; the suite passes vacuously')
        return []
    results = []
    for rule in registry:
        result = rule_result(screen(rule, workers=workers))
        _l.info(result.line())
        results.append(result)
    return results
