import json

import pytest

from unproj.report import (
    CheckResult,
    CheckStatus,
    GenericityEntry,
    VerificationReport,
    emit_report,
    outcome,
    skipped,
)


def _report(*statuses):
    report = VerificationReport(command="verify structural", seed=0)
    for k, status in enumerate(statuses):
        report.add(CheckResult(f"check.{k}", status, ms=1.25))
    return report


@pytest.mark.parametrize(
    "statuses,code",
    [
        ((CheckStatus.PASS, CheckStatus.SKIPPED), 0),
        ((CheckStatus.PASS, CheckStatus.FAIL, CheckStatus.RESOURCE_LIMIT), 1),
        ((CheckStatus.PASS, CheckStatus.RESOURCE_LIMIT), 3),
        ((), 0),
    ],
)
def test_exit_codes(statuses, code):
    assert _report(*statuses).exit_code() == code


def test_summary_line_ignores_skipped():
    report = _report(CheckStatus.PASS, CheckStatus.FAIL, CheckStatus.SKIPPED)
    assert report.summary() == {"pass": 1, "fail": 1, "skipped": 1, "resource_limit": 0}
    assert report.summary_line() == "1/2 checks passed"


def test_outcome_and_skipped():
    ok = outcome("a", [], {"n": 2})
    assert ok.passed and "failures" not in ok.details
    bad = outcome("b", [{"p": 1}], primes=[103])
    assert bad.status is CheckStatus.FAIL
    assert bad.details["failures"] == [{"p": 1}]
    assert bad.primes == [103]
    assert skipped("c", "needs n <= 3").notes == ["needs n <= 3"]


def test_json_round_trip():
    report = _report(CheckStatus.PASS, CheckStatus.FAIL)
    report.checks[1].genericity.append(GenericityEntry("r1 != 0", "0", False))
    report.checks[1].notes.extend(["first", "second"])
    payload = json.loads(emit_report(report, "json"))
    assert payload["checks"][1]["notes"] == "first | second"
    again = VerificationReport.from_dict(payload)
    assert again.to_dict() == report.to_dict()
    assert again.checks[1].notes == ["first", "second"]


def test_checks_are_sorted_by_id():
    report = VerificationReport(command="verify hilbert")
    report.add(CheckResult("z.last", CheckStatus.PASS))
    report.add(CheckResult("a.first", CheckStatus.PASS))
    assert [c["check_id"] for c in report.to_dict()["checks"]] == ["a.first", "z.last"]


def test_text_table_lists_failures():
    report = VerificationReport(command="verify campedelli")
    report.add(outcome("campedelli.cone_lemma", [{"dimension": 1}]))
    report.add(CheckResult("campedelli.hilbert.params", CheckStatus.FAIL, {"error": "ValueError: boom"}))
    text = emit_report(report, "text")
    assert "FAILED campedelli.cone_lemma" in text
    assert '{"dimension": 1}' in text
    assert "error: ValueError: boom" in text
    assert text.splitlines()[-1] == "0/2 checks passed"


def test_strip_timings():
    report = _report(CheckStatus.PASS)
    report.strip_timings()
    assert report.to_dict()["checks"][0]["ms"] is None


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report(_report(), "yaml")
