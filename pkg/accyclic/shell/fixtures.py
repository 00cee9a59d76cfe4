"""
Fixture bundling: the rule registry, the printed tables, the elementary
inequalities, the classification items and the group scans, verified together.
"""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import (
    Any,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import sympy

import accyclic.toml as toml
from ..accyc import Mode
from ..bounds import (
    FixtureResult,
    Registry,
    check_tables,
    no2_inequalities,
    verify_fixture_suite,
)
from ..bounds.tables import (
    NON_WEIL_TABLE,
    TWO_ELEMENT_TABLE,
)
from ..errors import (
    AccyclicError,
    RegistryError,
)
from ..groupscan import (
    Outcome,
    ScanReport,
    closure_enumerate,
    parse_policy,
    scan_almost_cyclic,
)
from ..json import Json
from ..numth import (
    EXCEPTIONAL_FAMILIES,
    is_prime_power,
)
from .formats import load_group

_l = logging.getLogger(__name__)

_ELL = re.compile(r'^(all|\d+|!=\d+(,\d+)*)$')
_CLASS = re.compile(r'^(\d+)[a-z]$')
_CLASSICAL_NAME = re.compile(r"^(PSL|PSU|PSp|Sp|POmega|PSO)(\d+)[+-]?\((\d+)\)('|\.\w+)?$")
_EXCEPTIONAL_NAME = re.compile(r"^(\w+)\((\d+)\)('|\.\w+)?$")


@dataclass(frozen=True)
class ClassificationItem:
    n: int
    scope: str
    group: str
    dims: Tuple[int, ...]
    ell: str
    orders: Tuple[int, ...]
    classes: Tuple[str, ...]
    outer_orders: Tuple[int, ...] = ()
    any_order: bool = False
    note: Optional[str] = None

    def json(self) -> Json:
        return {
            'n': self.n,
            'scope': self.scope,
            'group': self.group,
            'dims': list(self.dims),
            'ell': self.ell,
            'orders': list(self.orders),
            'classes': list(self.classes),
            'outer_orders': list(self.outer_orders),
            'any_order': self.any_order,
        }


@dataclass(frozen=True)
class ExceptionalRow:
    group: str
    ell: str
    dims: Tuple[int, ...]
    orders: Tuple[int, ...]
    any_order: bool = False

    def json(self) -> Json:
        return {
            'group': self.group,
            'ell': self.ell,
            'dims': list(self.dims),
            'orders': list(self.orders),
            'any_order': self.any_order,
        }


@dataclass(frozen=True)
class Survey:
    policy: str
    expect: str
    orders: Optional[Tuple[int, ...]] = None
    samples: Optional[int] = None
    seed: int = 0


@dataclass(frozen=True)
class ScanFixture:
    id: str
    group: Path
    order: int
    histogram: Optional[Mapping[int, int]] = None
    survey: Optional[Survey] = None
    item: Optional[int] = None
    full: bool = False
    note: Optional[str] = None


@dataclass(frozen=True)
class FixtureBundle:
    items: Tuple[ClassificationItem, ...]
    exceptional: Tuple[ExceptionalRow, ...]
    scans: Tuple[ScanFixture, ...]
    source: Optional[Path] = None


def _ints(raw: Any) -> Tuple[int, ...]:
    return tuple(int(v) for v in raw)


def _parse_survey(raw: Mapping[str, Any]) -> Survey:
    return Survey(
        policy=raw.get('policy', 'default'),
        expect=raw['expect'],
        orders=_ints(raw['orders']) if 'orders' in raw else None,
        samples=raw.get('samples'),
        seed=raw.get('seed', 0),
    )


def parse_fixtures(raw: Mapping[str, Any], base: Path) -> FixtureBundle:
    items = tuple(
        ClassificationItem(
            n=r['n'],
            scope=r['scope'],
            group=r['group'],
            dims=_ints(r['dims']),
            ell=r['ell'],
            orders=_ints(r.get('orders', [])),
            classes=tuple(r.get('classes', [])),
            outer_orders=_ints(r.get('outer_orders', [])),
            any_order=r.get('any_order', False),
            note=r.get('note'),
        )
        for r in raw.get('item', [])
    )
    exceptional = tuple(
        ExceptionalRow(r['group'], r['ell'], _ints(r['dims']), _ints(r.get('orders', [])), r.get('any_order', False))
        for r in raw.get('exceptional', [])
    )
    scans = tuple(
        ScanFixture(
            id=r['id'],
            group=base / r['group'],
            order=r['order'],
            histogram={int(k): v for k, v in r['histogram'].items()} if 'histogram' in r else None,
            survey=_parse_survey(r['survey']) if 'survey' in r else None,
            item=r.get('item'),
            full=r.get('full', False),
            note=r.get('note'),
        )
        for r in raw.get('scan', [])
    )
    return FixtureBundle(items, exceptional, scans)


def load_fixtures(path: Path) -> FixtureBundle:
    try:
        raw = toml.load_path(path)
    except toml.TOMLDecodeError as e:
        raise RegistryError(f'Failed to load fixtures {path}') from e
    try:
        bundle = parse_fixtures(raw, path.parent)
    except (KeyError, ValueError, TypeError) as e:
        raise RegistryError(f'Failed to parse fixtures in {path}') from e
    return FixtureBundle(bundle.items, bundle.exceptional, bundle.scans, path)


def _ell_problems(ell: str) -> List[str]:
    if not _ELL.match(ell):
        return [f'malformed ell {ell!r}']
    if ell == 'all':
        return []
    return [f'{v} is not prime' for v in ell.lstrip('!=').split(',') if not sympy.isprime(int(v))]


def _order_problems(orders: Sequence[int], what: str) -> List[str]:
    return [f'{what} {o} is not a prime power above 2' for o in orders if o <= 2 or not is_prime_power(o)]


def _common_problems(dims: Sequence[int], ell: str, orders: Sequence[int]) -> List[str]:
    problems = []
    if not dims or any(d < 1 for d in dims):
        problems.append(f'bad dims {list(dims)}')
    problems.extend(_ell_problems(ell))
    problems.extend(_order_problems(orders, 'order'))
    return problems


def _item_problems(item: ClassificationItem, scans: Sequence[ScanFixture]) -> List[str]:
    problems = _common_problems(item.dims, item.ell, item.orders)
    if item.scope not in ('L', 'G'):
        problems.append(f'scope {item.scope!r} is neither L nor G')
    name = _CLASSICAL_NAME.match(item.group)
    if name is None or not is_prime_power(int(name.group(3))):
        problems.append(f'{item.group!r} is not a classical group name')
    for c in item.classes:
        m = _CLASS.match(c)
        if m is None:
            problems.append(f'malformed class label {c!r}')
        else:
            problems.extend(_order_problems([int(m.group(1))], f'class {c} of order'))
    problems.extend(_order_problems(item.outer_orders, 'outer order'))
    if not (item.orders or item.classes or item.outer_orders or item.any_order):
        problems.append('names no elements')
    for scan in scans:
        if scan.item == item.n and scan.survey is not None and scan.survey.orders is not None:
            extra = sorted(set(scan.survey.orders) - set(item.orders))
            if extra:
                problems.append(f'scan {scan.id} surveys orders {extra} the item does not list')
    return problems


def validate_items(bundle: FixtureBundle) -> List[FixtureResult]:
    results = []
    numbers = [item.n for item in bundle.items]
    if numbers != list(range(1, len(numbers) + 1)):
        results.append(FixtureResult('items', False, f'items are not numbered 1..{len(numbers)}'))
    for item in bundle.items:
        problems = _item_problems(item, bundle.scans)
        detail = '; '.join(problems) if problems else f'{item.group} dims {list(item.dims)}'
        results.append(FixtureResult(f'item:{item.n}', not problems, detail))
    for i, row in enumerate(bundle.exceptional, start=1):
        problems = _common_problems(row.dims, row.ell, row.orders)
        name = _EXCEPTIONAL_NAME.match(row.group)
        if name is None or name.group(1) not in EXCEPTIONAL_FAMILIES:
            problems.append(f'{row.group!r} is not an exceptional group name')
        if not (row.orders or row.any_order):
            problems.append('names no elements')
        detail = '; '.join(problems) if problems else f'{row.group} dims {list(row.dims)}'
        results.append(FixtureResult(f'exceptional:{i}', not problems, detail))
    for scan in bundle.scans:
        if scan.item is not None and scan.item not in numbers:
            results.append(FixtureResult(f'scan:{scan.id}:item', False, f'refers to missing item {scan.item}'))
    return results


def _survey_result(fixture: ScanFixture, survey: Survey, report: ScanReport) -> FixtureResult:
    rid = f'scan:{fixture.id}:survey'
    if not report.fingerprints:
        return FixtureResult(rid, False, 'no element passed the policy')
    if survey.orders is not None:
        unseen = sorted(set(survey.orders) - set(report.orders))
        if unseen:
            return FixtureResult(rid, False, f'no element of order {unseen} surveyed')
    if survey.expect == 'almost-cyclic':
        bad = [f for f in report.fingerprints if f.outcome(Mode.STRICT) != Outcome.ALMOST_CYCLIC]
        if bad:
            return FixtureResult(rid, False, f'{len(bad)} fingerprints not almost cyclic, first order {bad[0].order}')
    elif survey.expect == 'strict-inconsistent':
        bad = [f for f in report.fingerprints
               if f.outcome(Mode.STRICT) != Outcome.INCONSISTENT or f.outcome(Mode.APPENDIX) != Outcome.ALMOST_CYCLIC]
        if bad:
            return FixtureResult(rid, False, f'fingerprint order {bad[0].order} is {bad[0].outcome(Mode.STRICT).value}')
    else:
        return FixtureResult(rid, False, f'unknown expectation {survey.expect!r}')
    how = 'exhaustive' if report.complete else f'{report.surveyed} sampled'
    return FixtureResult(rid, True, f'{len(report.fingerprints)} fingerprints {survey.expect} ({how})')


def check_scan(fixture: ScanFixture, closure_cap: int, workers: int = 1) -> List[FixtureResult]:
    rid = f'scan:{fixture.id}'
    try:
        spec = load_group(fixture.group)
        closure = closure_enumerate(spec, closure_cap)
    except (AccyclicError, OSError) as e:
        return [FixtureResult(rid, False, str(e))]

    results = [FixtureResult(
        f'{rid}:order',
        closure.order == fixture.order,
        f'closure has {closure.order} elements, expected {fixture.order}',
    )]
    if fixture.histogram is not None:
        actual = dict(closure.histogram)
        wrong = sorted(o for o in set(actual) | set(fixture.histogram) if actual.get(o) != fixture.histogram.get(o))
        detail = f'orders {actual}' if not wrong else f'orders {wrong} differ: got {actual}'
        results.append(FixtureResult(f'{rid}:histogram', not wrong, detail))
    if fixture.survey is not None:
        survey = fixture.survey
        sampled = survey.samples is not None
        report = scan_almost_cyclic(
            spec,
            Mode.STRICT,
            parse_policy(survey.policy, survey.orders),
            cap=closure_cap,
            samples=survey.samples or 0,
            seed=survey.seed,
            exhaustive=not sampled,
            workers=workers,
        )
        results.append(_survey_result(fixture, survey, report))
    return results


@dataclass(frozen=True)
class FixtureReport:
    results: Tuple[FixtureResult, ...]
    registry_digest: str

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> Tuple[FixtureResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def summary(self) -> str:
        count = sum(1 for r in self.results if r.passed)
        return f'fixtures: {count}/{len(self.results)} passed registry={self.registry_digest}'

    def lines(self) -> List[str]:
        return [r.line() for r in self.results] + [self.summary()]

    def json(self) -> Json:
        return {
            'results': [r.json() for r in self.results],
            'registry': self.registry_digest,
            'passed': self.passed,
        }


def _no2_results() -> List[FixtureResult]:
    return [
        FixtureResult(
            f'no2:{r.item}:n={r.n}',
            r.ok,
            f'violations {list(r.violations)}' if r.ok else f'violations {list(r.violations)}, expected {list(r.exceptions)}',
        )
        for r in no2_inequalities()
    ]


def verify_all(registry: Registry, bundle: FixtureBundle, *, full: bool = False, closure_cap: int = 2 * 10 ** 6,
               workers: int = 1) -> FixtureReport:
    results: List[FixtureResult] = []
    results.extend(verify_fixture_suite(registry, workers))
    results.extend(check_tables())
    results.extend(_no2_results())
    results.extend(validate_items(bundle))
    for scan in bundle.scans:
        if scan.full and not full:
            _l.info(f'skipping scan {scan.id}; pass --full to run it')
            continue
        results.extend(check_scan(scan, closure_cap, workers))
    for r in results:
        if not r.passed:
            _l.warning(r.line())
    return FixtureReport(tuple(results), registry.digest())


def list_fixtures(registry: Registry, bundle: FixtureBundle) -> List[str]:
    lines = [f'rule:{rule.id}\t{rule.family}\t{rule.cite}' for rule in registry]
    lines.extend(f'table:{row.group}\t{row.formula}' for row in NON_WEIL_TABLE)
    lines.extend(f'eta2:{row.group}\tmd6.2' for row in TWO_ELEMENT_TABLE)
    lines.extend(f'item:{item.n}\t{item.group}' for item in bundle.items)
    lines.extend(f'exceptional:{i}\t{row.group}' for i, row in enumerate(bundle.exceptional, start=1))
    lines.extend(f'scan:{scan.id}\t{scan.group.name}' + ('\tfull' if scan.full else '') for scan in bundle.scans)
    return lines
