import pytest

from accyclic.bounds import load_registry
from accyclic.bounds.registry import parse_registry
from accyclic.config_file import DATA_DIR
from accyclic.errors import RegistryError
from accyclic.shell import (
    FixtureBundle,
    check_scan,
    list_fixtures,
    load_fixtures,
    validate_items,
    verify_all,
)
from accyclic.shell.fixtures import (
    ClassificationItem,
    ScanFixture,
    Survey,
)

GROUPS = DATA_DIR / 'groups'
REGISTRY = load_registry(DATA_DIR / 'registry.toml')
BUNDLE = load_fixtures(DATA_DIR / 'fixtures.toml')

PSL3 = {
    'id': 'psl3-nonweil',
    'family': 'PSL',
    'dim': 'gmst2.A',
    'alpha': 'generic',
    'cap': 'mu',
    'cite': 'nonW',
    'key': ['q'],
    'expect': [5, 7, 13],
    'fixed': {'n': 3},
    'grid': [{'axis': 'q', 'kind': 'prime_powers', 'lo': 5, 'hi': 200}],
    'window': [{'axis': 'q', 'kind': 'prime_powers', 'lo': 201, 'hi': 260}],
}

GL2_2 = ScanFixture(id='gl2-2', group=GROUPS / 'gl2-2.group', order=6, histogram={1: 1, 2: 3, 3: 2})


def _item(**kwargs):
    fields = dict(n=1, scope='G', group='PSL3(4)', dims=(4,), ell='3', orders=(3, 4, 5, 7), classes=())
    fields.update(kwargs)
    return ClassificationItem(**fields)


def _ids(results):
    return [r.id for r in results if not r.passed]


def test_shipped_bundle_loads():
    assert len(BUNDLE.items) == 43
    assert len(BUNDLE.exceptional) == 15
    assert [s.id for s in BUNDLE.scans] == ['gl2-2', 'sl2-3', 'gl3-2', 'gl4-2-involutions', 'sp6-2']
    assert BUNDLE.scans[0].group == GROUPS / 'gl2-2.group'
    sp6 = BUNDLE.scans[-1]
    assert sp6.full
    assert sp6.item == 40
    assert sp6.survey == Survey(policy='default', expect='almost-cyclic', orders=(5, 7, 8, 9), samples=4000, seed=0)
    assert BUNDLE.source == DATA_DIR / 'fixtures.toml'


def test_shipped_items_are_well_formed():
    results = validate_items(BUNDLE)
    assert len(results) == len(BUNDLE.items) + len(BUNDLE.exceptional)
    assert _ids(results) == []


def test_item_problems_are_reported():
    bundle = FixtureBundle(
        items=(
            _item(),
            _item(n=2, ell='x'),
            _item(n=3, group='Foo(4)'),
            _item(n=4, orders=(6,)),
            _item(n=5, orders=(), classes=('9z', 'ab')),
            _item(n=6, orders=()),
        ),
        exceptional=(),
        scans=(ScanFixture(id='s', group=GROUPS / 'gl2-2.group', order=6, item=9),),
    )
    assert _ids(validate_items(bundle)) == ['item:2', 'item:3', 'item:4', 'item:5', 'item:6', 'scan:s:item']


def test_item_numbering():
    bundle = FixtureBundle(items=(_item(), _item(n=3)), exceptional=(), scans=())
    assert _ids(validate_items(bundle)) == ['items']


def test_survey_orders_must_be_listed_by_the_item():
    survey = Survey(policy='default', expect='almost-cyclic', orders=(7, 9))
    scan = ScanFixture(id='s', group=GROUPS / 'gl3-2.group', order=168, survey=survey, item=1)
    bundle = FixtureBundle(items=(_item(),), exceptional=(), scans=(scan,))
    results = validate_items(bundle)
    assert _ids(results) == ['item:1']
    assert '[9]' in results[0].detail


def test_check_scan_passes():
    results = check_scan(GL2_2, closure_cap=1000)
    assert [r.id for r in results] == ['scan:gl2-2:order', 'scan:gl2-2:histogram']
    assert _ids(results) == []


def test_check_scan_detects_a_wrong_histogram():
    fixture = ScanFixture(id='gl2-2', group=GL2_2.group, order=6, histogram={1: 1, 2: 2, 3: 3})
    assert _ids(check_scan(fixture, closure_cap=1000)) == ['scan:gl2-2:histogram']


def test_check_scan_detects_a_wrong_order():
    fixture = ScanFixture(id='gl2-2', group=GL2_2.group, order=12)
    results = check_scan(fixture, closure_cap=1000)
    assert _ids(results) == ['scan:gl2-2:order']
    assert results[0].detail == 'closure has 6 elements, expected 12'


def test_check_scan_reports_unreadable_groups(tmp_path):
    fixture = ScanFixture(id='gone', group=tmp_path / 'missing.group', order=1)
    assert _ids(check_scan(fixture, closure_cap=1000)) == ['scan:gone']


def test_check_scan_survey():
    passing = Survey(policy='default', expect='almost-cyclic')
    fixture = ScanFixture(id='gl3-2', group=GROUPS / 'gl3-2.group', order=168, survey=passing)
    results = check_scan(fixture, closure_cap=10000)
    assert _ids(results) == []
    assert results[-1].detail == '3 fingerprints almost-cyclic (exhaustive)'

    for survey in [
        Survey(policy='default', expect='strict-inconsistent'),
        Survey(policy='default', expect='almost-cyclic', orders=(8,)),
        Survey(policy='default', expect='cyclic'),
    ]:
        fixture = ScanFixture(id='gl3-2', group=GROUPS / 'gl3-2.group', order=168, survey=survey)
        assert _ids(check_scan(fixture, closure_cap=10000)) == ['scan:gl3-2:survey']


def test_check_scan_survey_needs_every_listed_order():
    survey = Survey(policy='default', expect='almost-cyclic', orders=(7, 8))
    fixture = ScanFixture(id='gl3-2', group=GROUPS / 'gl3-2.group', order=168, survey=survey)
    result = check_scan(fixture, closure_cap=10000)[-1]
    assert not result.passed
    assert result.detail == 'no element of order [8] surveyed'


def test_verify_all_on_a_small_bundle():
    registry = parse_registry({'rule': [PSL3]})
    report = verify_all(registry, FixtureBundle(items=(), exceptional=(), scans=(GL2_2,)))
    assert report.passed
    assert report.failures == ()
    assert report.summary() == f'fixtures: {len(report.results)}/{len(report.results)} passed registry={registry.digest()}'
    assert report.lines()[0] == 'PASS rule:psl3-nonweil: survivors {5, 7, 13}'
    assert report.json()['passed']


def test_verify_all_names_the_failing_fixture():
    registry = parse_registry({'rule': [PSL3]})
    broken = ScanFixture(id='gl2-2', group=GL2_2.group, order=6, histogram={1: 1, 2: 2, 3: 3})
    report = verify_all(registry, FixtureBundle(items=(), exceptional=(), scans=(broken,)))
    assert not report.passed
    assert [r.id for r in report.failures] == ['scan:gl2-2:histogram']


def test_full_scans_are_skipped_by_default():
    registry = parse_registry({'rule': [PSL3]})
    heavy = ScanFixture(id='never', group=GROUPS / 'missing.group', order=1, full=True)
    report = verify_all(registry, FixtureBundle(items=(), exceptional=(), scans=(heavy,)))
    assert report.passed


@pytest.mark.slow
def test_shipped_fixtures_verify():
    report = verify_all(REGISTRY, BUNDLE, full=True)
    assert [r.line() for r in report.failures] == []
    assert 'scan:sp6-2:survey' in [r.id for r in report.results]


@pytest.mark.slow
def test_sp6_2_fixture_survey():
    sp6 = next(s for s in BUNDLE.scans if s.id == 'sp6-2')
    results = check_scan(sp6, closure_cap=2 * 10 ** 6)
    assert [r.id for r in results] == ['scan:sp6-2:order', 'scan:sp6-2:survey']
    assert _ids(results) == []
    assert results[0].detail == 'closure has 1451520 elements, expected 1451520'
    assert results[1].detail.startswith('5 fingerprints almost-cyclic (')
    assert results[1].detail.endswith(' sampled)')


def test_list_fixtures():
    lines = list_fixtures(REGISTRY, BUNDLE)
    assert 'rule:psl3-nonweil\tPSL\tnonW' in lines
    assert 'item:40\tPSp6(2)' in lines
    assert 'scan:sp6-2\tsp6-2.group\tfull' in lines
    assert 'scan:gl2-2\tgl2-2.group' in lines


def test_fixture_paths_are_relative_to_the_file(tmp_path):
    path = tmp_path / 'fixtures.toml'
    path.write_text('[[scan]]\nid = "mine"\ngroup = "groups/mine.group"\norder = 6\n')
    bundle = load_fixtures(path)
    assert bundle.scans[0].group == tmp_path / 'groups' / 'mine.group'
    assert bundle.items == ()


def test_load_fixtures_errors(tmp_path):
    path = tmp_path / 'fixtures.toml'
    path.write_text('[[scan]\n')
    with pytest.raises(RegistryError) as info:
        load_fixtures(path)
    assert info.value.__cause__ is not None

    path.write_text('[[scan]]\nid = "mine"\norder = 6\n')
    with pytest.raises(RegistryError):
        load_fixtures(path)
