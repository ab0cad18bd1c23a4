"""Check records and the table / CSV / JSON renderings of a run."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class CheckRecord:
    suite: str
    name: str
    params: dict[str, int]
    passed: bool
    # measured error for tolerance checks; None for exact equalities
    error: float | None = None
    tolerance: float | None = None

    @property
    def exact(self) -> bool:
        return self.error is None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class VerificationReport:
    suite: str
    config: dict[str, Any]
    checks: list[CheckRecord] = field(default_factory=list)
    data: list[dict[str, Any]] = field(default_factory=list)
    enclosures: list[dict[str, Any]] = field(default_factory=list)
    # timings are kept off the stable outputs so repeated runs stay identical
    wall_time: dict[str, float] = field(default_factory=dict)
    csv_columns: list[str] | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary(self) -> dict[str, int]:
        failed = sum(not c.passed for c in self.checks)
        return {"total": len(self.checks), "passed": len(self.checks) - failed, "failed": failed}

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        self.data.extend(other.data)
        self.enclosures.extend(other.enclosures)
        self.wall_time.update(other.wall_time)


def fmt_float(x: float) -> str:
    return format(x, ".17g")


def _json_value(v: Any) -> Any:
    if isinstance(v, Fraction):
        return {"numerator": str(v.numerator), "denominator": str(v.denominator)}
    if isinstance(v, bool) or v is None or isinstance(v, (str, float)):
        return v
    if isinstance(v, int):
        # big integers stay exact
        return str(v) if abs(v) >= 2**53 else v
    if isinstance(v, dict):
        return {k: _json_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    raise TypeError(f"cannot serialise {type(v).__name__}")


def _csv_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt_float(v)
    if isinstance(v, Fraction):
        return str(v)
    if v is None:
        return ""
    return str(v)


def check_rows(report: VerificationReport) -> list[dict[str, Any]]:
    rows = []
    for c in report.checks:
        rows.append({
            "suite": c.suite,
            "name": c.name,
            "n": c.params.get("n", ""),
            "p": c.params.get("p", ""),
            "status": c.status,
            "error": c.error,
            "tolerance": c.tolerance,
            "exact": c.exact,
        })
    return rows


def to_json(report: VerificationReport) -> str:
    doc = {
        "suite": report.suite,
        "config": _json_value(report.config),
        "checks": [
            {
                "suite": c.suite,
                "name": c.name,
                "params": c.params,
                "status": c.status,
                "exact": c.exact,
                "error": c.error,
                "tolerance": c.tolerance,
            }
            for c in report.checks
        ],
        "summary": report.summary(),
        "enclosures": _json_value(report.enclosures),
        "data": _json_value(report.data),
    }
    return json.dumps(doc, indent=2) + "\n"


def to_csv(report: VerificationReport) -> str:
    if report.csv_columns is not None:
        columns, rows = report.csv_columns, report.data
    else:
        columns = ["suite", "name", "n", "p", "status", "error", "tolerance", "exact"]
        rows = check_rows(report)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_value(row.get(col)) for col in columns])
    return buf.getvalue()


def _table(columns: list[str], rows: list[dict[str, Any]]) -> list[str]:
    cells = [[_csv_value(r.get(c)) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return lines


def to_table(report: VerificationReport) -> str:
    lines = [f"suite: {report.suite}"]
    if report.csv_columns is not None and report.data:
        lines += _table(report.csv_columns, report.data)
        lines.append("")
    for e in report.enclosures:
        lines.append(
            f"{e['target']} p={e['p']} n={e['n']}: "
            f"[{fmt_float(e['lower'])}, {fmt_float(e['upper'])}] width {fmt_float(e['width'])}"
        )
    failures = [r for r in check_rows(report) if r["status"] == "fail"]
    s = report.summary()
    lines.append(f"checks: {s['passed']}/{s['total']} passed")
    if failures:
        lines.append("failures:")
        lines += _table(["suite", "name", "n", "p", "error", "tolerance"], failures)
    return "\n".join(lines) + "\n"


RENDERERS = {"table": to_table, "csv": to_csv, "json": to_json}
