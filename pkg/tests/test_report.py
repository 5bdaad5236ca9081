import json

import pytest

from modules.report import (
    ERROR,
    FAIL,
    PASS,
    CheckRecord,
    SuiteReport,
    checks_frame,
    emit_report,
    emit_table,
    exit_code,
    record,
    table_frame,
)
from modules.scalars import DomainError


def _report(*records):
    return SuiteReport("demo", {"q": 8, "seed": 0}, list(records))


class TestRecords:
    def test_witness_is_dropped_on_pass(self):
        assert record("a", "x", True, "ignored").witness is None
        assert record("a", "x", False, (1, 2)).witness == "(1, 2)"

    def test_status_and_exit_code(self):
        ok = _report(CheckRecord("a", "x", PASS))
        bad = _report(CheckRecord("a", "x", PASS), CheckRecord("b", "y", FAIL, "w"))
        broken = _report(CheckRecord("a", "x", FAIL), CheckRecord("c", "z", ERROR, "boom"))
        assert (ok.status, exit_code(ok)) == (PASS, 0)
        assert (bad.status, exit_code(bad)) == (FAIL, 1)
        assert bad.passed == 1 and bad.failed == 1
        assert broken.status == ERROR


class TestEmitters:
    def test_json_is_stable_and_has_no_timings(self):
        rep = _report(CheckRecord("a", "x", PASS, millis=17), CheckRecord("b", "y", FAIL, "w", millis=3))
        text = emit_report(rep, "json")
        assert "millis" not in text
        data = json.loads(text)
        assert data["schema"] == "supercheck.report/1"
        assert data["status"] == FAIL
        assert data["checks"][1] == {"id": "b", "anchor": "y", "status": FAIL, "witness": "w"}
        rep.checks[0].millis = 99
        assert emit_report(rep, "json") == text

    def test_text_marks(self):
        rep = _report(CheckRecord("a", "x", PASS), CheckRecord("b", "y", FAIL, "w"))
        text = emit_report(rep, "text")
        assert "✓ a [x]" in text
        assert "✗ b [y]" in text
        assert "witness: w" in text
        assert text.rstrip().endswith("fail: 1 passed, 1 failed")

    def test_unknown_report_format(self):
        with pytest.raises(DomainError):
            emit_report(_report(), "yaml")

    def test_checks_frame(self):
        df = checks_frame(_report(CheckRecord("a", "x", PASS)))
        assert list(df.columns) == ["id", "anchor", "status", "witness", "millis"]
        assert df.iloc[0]["witness"] == ""


class TestTables:
    def test_dictionary_csv(self):
        text = emit_table("dictionary", 3, "csv")
        assert text.splitlines()[0].startswith("lambda,")
        assert "(2,1)" in text

    def test_tau_json(self):
        rows = json.loads(emit_table("tau", 2, "json"))
        assert len(rows) == 6
        assert all(r["c_power"] == r["expected"] for r in rows)

    def test_xlsx_is_a_zip(self):
        assert emit_table("qfun", 2, "xlsx")[:2] == b"PK"

    def test_unknown_kind_and_format(self):
        with pytest.raises(DomainError):
            table_frame("bogus")
        with pytest.raises(DomainError):
            emit_table("tau", 2, "html")
