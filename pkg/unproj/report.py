"""Verification results and their JSON / text renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional

from . import __version__

REPORT_SCHEMA_VERSION = 1


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    RESOURCE_LIMIT = "resource_limit"


@dataclass(slots=True)
class GenericityEntry:
    condition: str
    value: str
    ok: bool

    def to_dict(self) -> Dict[str, object]:
        return {"condition": self.condition, "value": self.value, "ok": self.ok}


@dataclass(slots=True)
class CheckResult:
    check_id: str
    status: CheckStatus
    details: Dict[str, Any] = field(default_factory=dict)
    ms: Optional[float] = None
    genericity: List[GenericityEntry] = field(default_factory=list)
    primes: List[int] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    def to_dict(self) -> Dict[str, object]:
        return {
            "check_id": self.check_id,
            "status": self.status.value,
            "details": self.details,
            "ms": None if self.ms is None else round(self.ms, 3),
            "genericity": [entry.to_dict() for entry in self.genericity],
            "primes": list(self.primes),
            "notes": " | ".join(self.notes),
        }

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "CheckResult":
        notes = payload.get("notes") or ""
        return cls(
            check_id=payload["check_id"],
            status=CheckStatus(payload["status"]),
            details=dict(payload.get("details") or {}),
            ms=payload.get("ms"),
            genericity=[GenericityEntry(**entry) for entry in payload.get("genericity") or []],
            primes=list(payload.get("primes") or []),
            notes=[part for part in notes.split(" | ") if part],
        )


def outcome(
    check_id: str,
    failures: List[Dict[str, Any]],
    details: Optional[Dict[str, Any]] = None,
    **extra: Any,
) -> CheckResult:
    """PASS when ``failures`` is empty, FAIL otherwise; failures go into details."""
    payload = dict(details or {})
    if failures:
        payload["failures"] = failures
    status = CheckStatus.FAIL if failures else CheckStatus.PASS
    return CheckResult(check_id=check_id, status=status, details=payload, **extra)


def skipped(check_id: str, reason: str) -> CheckResult:
    return CheckResult(check_id=check_id, status=CheckStatus.SKIPPED, notes=[reason])


@dataclass(slots=True)
class VerificationReport:
    command: str
    checks: List[CheckResult] = field(default_factory=list)
    seed: Optional[int] = None
    version: str = __version__

    def add(self, result: CheckResult) -> None:
        self.checks.append(result)

    def extend(self, results: Iterable[CheckResult]) -> None:
        self.checks.extend(results)

    def sorted_checks(self) -> List[CheckResult]:
        return sorted(self.checks, key=lambda c: c.check_id)

    def summary(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for check in self.checks:
            counts[check.status.value] += 1
        return counts

    def exit_code(self) -> int:
        counts = self.summary()
        if counts[CheckStatus.FAIL.value]:
            return 1
        if counts[CheckStatus.RESOURCE_LIMIT.value]:
            return 3
        return 0

    def summary_line(self) -> str:
        counts = self.summary()
        considered = len(self.checks) - counts[CheckStatus.SKIPPED.value]
        return f"{counts[CheckStatus.PASS.value]}/{considered} checks passed"

    def to_dict(self) -> Dict[str, object]:
        return {
            "version": self.version,
            "schema": REPORT_SCHEMA_VERSION,
            "command": self.command,
            "seed": self.seed,
            "checks": [check.to_dict() for check in self.sorted_checks()],
            "summary": self.summary(),
        }

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "VerificationReport":
        return cls(
            command=payload.get("command", "report"),
            checks=[CheckResult.from_dict(c) for c in payload.get("checks") or []],
            seed=payload.get("seed"),
            version=payload.get("version", __version__),
        )

    def strip_timings(self) -> None:
        for check in self.checks:
            check.ms = None


def _text_table(report: VerificationReport) -> str:
    rows = [("check", "status", "ms")]
    for check in report.sorted_checks():
        ms = "-" if check.ms is None else f"{check.ms:.1f}"
        rows.append((check.check_id, check.status.value, ms))
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    lines = []
    for k, row in enumerate(rows):
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    for check in report.sorted_checks():
        if check.status is not CheckStatus.FAIL:
            continue
        lines.append("")
        lines.append(f"FAILED {check.check_id}")
        for failure in check.details.get("failures", []):
            lines.append("  " + json.dumps(failure, sort_keys=True, ensure_ascii=False))
        if "error" in check.details:
            lines.append(f"  error: {check.details['error']}")
    lines.append("")
    lines.append(report.summary_line())
    return "\n".join(lines)


def emit_report(report: VerificationReport, format: str = "json") -> str:
    if format == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)
    if format == "text":
        return _text_table(report)
    raise ValueError(f"unknown report format {format!r}")


__all__ = [
    "CheckResult",
    "CheckStatus",
    "emit_report",
    "GenericityEntry",
    "outcome",
    "REPORT_SCHEMA_VERSION",
    "skipped",
    "VerificationReport",
]
