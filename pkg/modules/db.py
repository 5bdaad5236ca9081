# db.py - run history for verification suites
# Strategy:
#   - one local SQLite file (settings.RUNS_DB_PATH, or an explicit path)
#   - tables are created on first use through sqlite-utils
#   - WAL mode so the dashboard can read while the CLI writes
#
# Tables:
#   runs   (id, ts, suite, params, status, passed, failed, millis)
#   checks (run_id, check_id, anchor, status, witness, millis)
#
import json
import logging
import os
import sqlite3
from datetime import datetime, timezone
from typing import Optional, Tuple

import pandas as pd
import sqlite_utils

from .report import SuiteReport
from .settings import RUNS_DB_PATH

log = logging.getLogger(__name__)

RUN_COLUMNS = ["id", "ts", "suite", "params", "status", "passed", "failed", "millis"]
CHECK_COLUMNS = ["run_id", "check_id", "anchor", "status", "witness", "millis"]


def _apply_pragmas(c: sqlite3.Connection):
    c.execute("PRAGMA foreign_keys=ON;")
    c.execute("PRAGMA busy_timeout=5000;")
    try:
        c.execute("PRAGMA journal_mode=WAL;")
        c.execute("PRAGMA synchronous=NORMAL;")
    except Exception:
        pass


def _connect(path: str) -> sqlite3.Connection:
    folder = os.path.dirname(os.path.abspath(path))
    os.makedirs(folder, exist_ok=True)
    c = sqlite3.connect(path, check_same_thread=False)
    _apply_pragmas(c)
    return c


def _ensure_schema(db: sqlite_utils.Database):
    if "runs" not in db.table_names():
        db["runs"].create({
            "id": int, "ts": str, "suite": str, "params": str,
            "status": str, "passed": int, "failed": int, "millis": int,
        }, pk="id")
    if "checks" not in db.table_names():
        db["checks"].create({
            "run_id": int, "check_id": str, "anchor": str,
            "status": str, "witness": str, "millis": int,
        }, foreign_keys=[("run_id", "runs", "id")])
        db["checks"].create_index(["run_id"])


def conn_runs(path: Optional[str] = None) -> sqlite_utils.Database:
    db = sqlite_utils.Database(_connect(path or RUNS_DB_PATH))
    _ensure_schema(db)
    return db


def current_path(path: Optional[str] = None) -> str:
    return os.path.abspath(path or RUNS_DB_PATH)


# ---- Public helpers ----
def record_run(report: SuiteReport, path: Optional[str] = None) -> Tuple[bool, str]:
    """Store a report and its checks; (ok, message)."""
    try:
        db = conn_runs(path)
        try:
            with db.conn:
                run = db["runs"].insert({
                    "ts": datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M:%S"),
                    "suite": report.suite,
                    "params": json.dumps(dict(sorted(report.params.items()))),
                    "status": report.status,
                    "passed": report.passed,
                    "failed": report.failed,
                    "millis": report.millis,
                })
                run_id = run.last_pk
                db["checks"].insert_all(
                    {"run_id": run_id, "check_id": c.id, "anchor": c.anchor, "status": c.status,
                     "witness": c.witness or "", "millis": c.millis}
                    for c in report.checks
                )
        finally:
            db.conn.close()
        log.info("recorded run %s of suite %s", run_id, report.suite)
        return True, f"Run {run_id} recorded."
    except Exception as e:
        log.warning("could not record run: %s", e)
        return False, f"Recording failed: {e}"


def recent_runs(limit: int = 20, path: Optional[str] = None) -> pd.DataFrame:
    db = conn_runs(path)
    try:
        rows = list(db["runs"].rows_where(order_by="id desc", limit=limit))
        return pd.DataFrame(rows, columns=RUN_COLUMNS)
    finally:
        db.conn.close()


def run_checks(run_id: int, path: Optional[str] = None) -> pd.DataFrame:
    db = conn_runs(path)
    try:
        rows = list(db["checks"].rows_where("run_id = ?", [run_id], order_by="rowid"))
        return pd.DataFrame(rows, columns=CHECK_COLUMNS)
    finally:
        db.conn.close()
