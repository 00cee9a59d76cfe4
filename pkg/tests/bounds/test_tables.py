from dataclasses import replace

from accyclic.bounds import check_tables
from accyclic.bounds.tables import (
    NON_WEIL_TABLE,
    TWO_ELEMENT_TABLE,
    check_case_row,
    check_two_element_row,
)


def test_printed_tables_hold():
    results = check_tables()
    assert len(results) == len(NON_WEIL_TABLE) + len(TWO_ELEMENT_TABLE)
    assert [r.line() for r in results if not r.passed] == []


def test_case_row_detects_a_wrong_dimension():
    row = replace(NON_WEIL_TABLE[0], dim=97)
    result = check_case_row(row)
    assert not result.passed
    assert result.id == 'table:PSL3(5)'


def test_case_row_detects_a_failing_inequality():
    row = replace(NON_WEIL_TABLE[0], order_cap=40)
    assert not check_case_row(row).passed


def test_two_element_row_checks_eta():
    row = TWO_ELEMENT_TABLE[1]
    assert row.group == 'PSL3(9)'
    assert check_two_element_row(row).passed
    assert not check_two_element_row(replace(row, eta2=8)).passed
