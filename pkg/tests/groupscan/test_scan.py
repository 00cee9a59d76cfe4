import pytest

from accyclic.accyc import Mode
from accyclic.config_file import DATA_DIR
from accyclic.errors import CapExceeded
from accyclic.gf import field_of_order
from accyclic.groupscan import (
    DEFAULT_POLICY,
    Outcome,
    Policy,
    general_linear,
    parse_policy,
    scan_almost_cyclic,
)
from accyclic.shell import load_group

GROUPS = DATA_DIR / 'groups'
GL3_2 = general_linear(field_of_order(2), 3)


def test_default_policy():
    assert not DEFAULT_POLICY.admits(1, 2)
    assert not DEFAULT_POLICY.admits(2, 3)
    assert DEFAULT_POLICY.admits(3, 2)
    assert not DEFAULT_POLICY.admits(6, 5)
    assert not DEFAULT_POLICY.admits(4, 2)
    assert DEFAULT_POLICY.admits(4, 3)


def test_explicit_orders_override_flags():
    policy = Policy(orders=frozenset({2, 6}))
    assert policy.admits(2, 2)
    assert policy.admits(6, 3)
    assert not policy.admits(3, 2)
    assert not policy.admits(1, 2)


def test_parse_policy():
    assert parse_policy('default') == DEFAULT_POLICY
    assert parse_policy('all') == Policy(include_order_2=True, prime_power_only=False, exclude_char_multiples=False)
    assert parse_policy('order2,char-multiples') == Policy(include_order_2=True, exclude_char_multiples=False)
    assert parse_policy('default', orders=[5, 7]).orders == frozenset({5, 7})
    with pytest.raises(ValueError):
        parse_policy('everything')


def test_gl3_2_default_survey():
    report = scan_almost_cyclic(GL3_2)
    assert report.complete
    assert report.seed is None
    assert report.orders == (3, 7)
    assert report.surveyed == 56 + 48
    assert len(report.for_order(7)) == 2
    assert report.all_almost_cyclic()
    assert report.inconsistent == ()


def test_gl3_2_every_order():
    report = scan_almost_cyclic(GL3_2, policy=parse_policy('all'))
    assert report.orders == (2, 3, 4, 7)
    assert report.surveyed == 167
    assert report.all_almost_cyclic(Mode.STRICT)
    assert report.all_almost_cyclic(Mode.APPENDIX)


def test_gl4_2_involutions_split_the_modes():
    spec = load_group(GROUPS / 'gl4-2.group')
    report = scan_almost_cyclic(spec, policy=Policy(orders=frozenset({2})))
    (fingerprint,) = report.fingerprints
    assert fingerprint.order == 2
    assert fingerprint.charpoly == 'x^4 + 1'
    assert fingerprint.count == 315
    assert fingerprint.outcome(Mode.STRICT) == Outcome.INCONSISTENT
    assert fingerprint.outcome(Mode.APPENDIX) == Outcome.ALMOST_CYCLIC
    assert report.inconsistent == (fingerprint,)
    assert not report.all_almost_cyclic()
    assert report.all_almost_cyclic(Mode.APPENDIX)


def test_oracle_mode_is_recorded_alongside():
    report = scan_almost_cyclic(GL3_2, mode=Mode.ORACLE)
    for f in report.fingerprints:
        assert [m for m, _ in f.outcomes] == [Mode.STRICT, Mode.APPENDIX, Mode.ORACLE]
    assert report.all_almost_cyclic()


def test_sampling_fallback():
    report = scan_almost_cyclic(GL3_2, cap=10, samples=300, seed=4)
    assert not report.complete
    assert report.seed == 4
    assert set(report.orders) <= {3, 7}
    assert report.all_almost_cyclic()


def test_exhaustive_refuses_oversized_groups():
    with pytest.raises(CapExceeded):
        scan_almost_cyclic(GL3_2, cap=10, exhaustive=True)


def test_sampled_scan_is_reproducible():
    a = scan_almost_cyclic(GL3_2, exhaustive=False, samples=400, seed=9)
    b = scan_almost_cyclic(GL3_2, exhaustive=False, samples=400, seed=9, workers=3)
    assert a.json() == b.json()


def test_report_json():
    j = scan_almost_cyclic(GL3_2).json()
    assert j['group'] == 'GL3(2)'
    assert j['complete'] is True
    assert j['fingerprints'][0]['verdicts'] == {'strict': 'almost-cyclic', 'appendix': 'almost-cyclic'}


@pytest.mark.slow
def test_sp6_2_sampled_survey():
    spec = load_group(GROUPS / 'sp6-2.group')
    policy = Policy(orders=frozenset({5, 7, 8, 9}))
    report = scan_almost_cyclic(spec, policy=policy, exhaustive=False, samples=4000, seed=0)
    assert set(report.orders) == {5, 7, 8, 9}
    assert report.inconsistent == ()
    assert report.all_almost_cyclic()
