import pytest

from services.errors import DomainError
from services.reports import Failure, Report, SuiteRow
from services.suites import GOLDEN_DISPLAYS, GOLDEN_TABLES, SuiteService


def test_golden_suite_passes():
    seen = []
    rows = SuiteService().run('golden', on_row=lambda row, report: seen.append(row.claim))
    assert len(rows) == len(GOLDEN_TABLES) + len(GOLDEN_DISPLAYS) + 1
    assert all(row.passed for row in rows)
    assert seen == [row.claim for row in rows]


def test_unknown_suite():
    with pytest.raises(DomainError):
        SuiteService().checks('bogus')


def test_expected_failures_are_marked():
    negative = [expected for _, expected in SuiteService().oracle_checks() if expected]
    assert len(negative) == 2


@pytest.mark.slow
def test_lemma_suite_passes():
    rows = SuiteService().run('lemmas')
    assert [row.claim for row in rows if not row.passed] == []


@pytest.mark.slow
def test_oracle_suite_passes():
    rows = SuiteService().run('oracle-cross')
    assert [row.claim for row in rows if not row.passed] == []
    assert sum(row.expected_to_fail for row in rows) == 2


class TestReports:
    def test_check_records_failures(self):
        report = Report(claim='sample')
        report.check(True)
        report.check(False, Failure(J=[1]))
        report.skip()
        assert report.instances_checked == 2
        assert report.vacuous == 1
        assert not report.verified
        assert report.failures[0].J == [1]

    def test_absorb(self):
        total = Report(claim='total')
        part = Report(claim='part')
        part.check(False)
        total.absorb(part)
        assert total.instances_checked == 1
        assert not total.verified

    def test_json_drops_empty_details(self):
        assert 'details' not in Report(claim='empty').to_json()

    def test_expected_failure_passes_when_falsified(self):
        falsified = Report(claim='x', verified=False)
        assert SuiteRow.from_report(falsified, expected_to_fail=True).passed
        assert not SuiteRow.from_report(Report(claim='y'), expected_to_fail=True).passed
