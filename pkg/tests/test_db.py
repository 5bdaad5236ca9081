from modules import db
from modules.report import FAIL, PASS, CheckRecord, SuiteReport


def _report():
    checks = [CheckRecord("a", "x", PASS, millis=4), CheckRecord("b", "y", FAIL, "w", millis=6)]
    return SuiteReport("qsym", {"q": 8, "seed": 0}, checks)


def test_record_and_read_back(tmp_path):
    path = str(tmp_path / "history" / "runs.db")
    ok, msg = db.record_run(_report(), path)
    assert ok
    assert msg == "Run 1 recorded."
    runs = db.recent_runs(path=path)
    assert list(runs.columns) == db.RUN_COLUMNS
    row = runs.iloc[0]
    assert (row["suite"], row["status"], row["passed"], row["failed"], row["millis"]) == ("qsym", FAIL, 1, 1, 10)
    assert row["params"] == '{"q": 8, "seed": 0}'
    checks = db.run_checks(1, path)
    assert list(checks["check_id"]) == ["a", "b"]
    assert list(checks["witness"]) == ["", "w"]


def test_recent_runs_are_newest_first(tmp_path):
    path = str(tmp_path / "runs.db")
    for _ in range(3):
        db.record_run(_report(), path)
    assert list(db.recent_runs(limit=2, path=path)["id"]) == [3, 2]


def test_empty_history(tmp_path):
    assert db.recent_runs(path=str(tmp_path / "runs.db")).empty


def test_unwritable_path_reports_failure(tmp_path):
    ok, msg = db.record_run(_report(), str(tmp_path))
    assert not ok
    assert msg.startswith("Recording failed:")
