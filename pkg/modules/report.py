# report.py - check records, suite reports and table emitters
#
# JSON reports never carry timings so two runs with the same flags are
# byte-identical; millis is shown in text mode and stored in the run history.
import io
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

log = logging.getLogger(__name__)

SCHEMA_VERSION = "supercheck.report/1"

PASS = "pass"
FAIL = "fail"
ERROR = "error"


@dataclass
class CheckRecord:
    id: str
    anchor: str
    status: str
    witness: Optional[str] = None
    millis: int = 0

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> Dict[str, Any]:
        out = {"id": self.id, "anchor": self.anchor, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def record(check_id: str, anchor: str, ok: bool, witness=None) -> CheckRecord:
    """A pass/fail record; the witness is kept only on failure."""
    if ok:
        return CheckRecord(check_id, anchor, PASS)
    return CheckRecord(check_id, anchor, FAIL, None if witness is None else str(witness))


@dataclass
class AxiomRecord:
    instance: str
    check: str
    tuple: tuple
    expected_scalar: str
    got: Optional[str]
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "instance": self.instance,
            "check": self.check,
            "tuple": [str(t) for t in self.tuple],
            "expected_scalar": self.expected_scalar,
            "got": self.got,
            "pass": self.passed,
        }


@dataclass
class SuiteReport:
    suite: str
    params: Dict[str, Any]
    checks: List[CheckRecord] = field(default_factory=list)
    schema: str = SCHEMA_VERSION

    @property
    def status(self) -> str:
        if any(c.status == ERROR for c in self.checks):
            return ERROR
        return PASS if all(c.ok for c in self.checks) else FAIL

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.ok)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def millis(self) -> int:
        return sum(c.millis for c in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": self.schema,
            "suite": self.suite,
            "params": dict(sorted(self.params.items())),
            "status": self.status,
            "checks": [c.to_dict() for c in self.checks],
        }


def exit_code(report: SuiteReport) -> int:
    return 0 if report.status == PASS else 1


def emit_report(report: SuiteReport, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), ensure_ascii=False, indent=2, sort_keys=False) + "\n"
    if fmt == "text":
        lines = [f"suite {report.suite} {dict(sorted(report.params.items()))}"]
        for c in report.checks:
            mark = "✓" if c.ok else "✗"
            line = f"{mark} {c.id} [{c.anchor}] {c.millis}ms"
            if c.witness is not None:
                line += f"  witness: {c.witness}"
            lines.append(line)
        lines.append(f"{report.status}: {report.passed} passed, {report.failed} failed")
        return "\n".join(lines) + "\n"
    from .scalars import DomainError
    raise DomainError(f"unknown report format {fmt!r}")


def checks_frame(report: SuiteReport) -> pd.DataFrame:
    rows = [
        {"id": c.id, "anchor": c.anchor, "status": c.status, "witness": c.witness or "", "millis": c.millis}
        for c in report.checks
    ]
    return pd.DataFrame(rows, columns=["id", "anchor", "status", "witness", "millis"])


def axiom_frame(records: List[AxiomRecord]) -> pd.DataFrame:
    return pd.DataFrame([r.to_dict() for r in records],
                        columns=["instance", "check", "tuple", "expected_scalar", "got", "pass"])


# ---- tables ----
TABLE_KINDS = ("qfun", "tau", "dictionary")


def table_frame(kind: str, max_degree: int = 6) -> pd.DataFrame:
    if kind == "qfun":
        from .qsym import qfun_rows
        return pd.DataFrame(qfun_rows(max_degree))
    if kind == "dictionary":
        from .qsym import dictionary_rows
        return pd.DataFrame(dictionary_rows(max_degree))
    if kind == "tau":
        from .spin_group import tau_rows
        return pd.DataFrame(tau_rows(max_degree))
    from .scalars import DomainError
    raise DomainError(f"unknown table kind {kind!r}; choose from {', '.join(TABLE_KINDS)}")


def emit_table(kind: str, max_degree: int = 6, fmt: str = "csv"):
    """Render a table as csv/json text or xlsx bytes."""
    df = table_frame(kind, max_degree)
    if fmt == "csv":
        return df.to_csv(index=False)
    if fmt == "json":
        return df.to_json(orient="records", force_ascii=False) + "\n"
    if fmt == "xlsx":
        return frame_to_xlsx(df, sheet_name=kind)
    from .scalars import DomainError
    raise DomainError(f"unknown table format {fmt!r}")


def frame_to_xlsx(df: pd.DataFrame, sheet_name: str = "report") -> bytes:
    buf = io.BytesIO()
    with pd.ExcelWriter(buf, engine="openpyxl") as writer:
        df.to_excel(writer, index=False, sheet_name=sheet_name[:31])
    return buf.getvalue()
