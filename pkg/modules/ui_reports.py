# ui_reports.py - Streamlit page: run suites, browse tables and the run history
import logging

import pandas as pd
import streamlit as st

from . import db
from .report import TABLE_KINDS, checks_frame, frame_to_xlsx, table_frame
from .scalars import DomainError
from .settings import defaults
from .suites import SUITE_NAMES, run_suite

log = logging.getLogger(__name__)


def _download_buttons(df: pd.DataFrame, stem: str, key: str):
    left, right = st.columns(2)
    with left:
        st.download_button("Download CSV", df.to_csv(index=False).encode("utf-8-sig"),
                           file_name=f"{stem}.csv", mime="text/csv", key=f"{key}_csv")
    with right:
        st.download_button("Download Excel", frame_to_xlsx(df, sheet_name=stem),
                           file_name=f"{stem}.xlsx",
                           mime="application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
                           key=f"{key}_xlsx")


def _suite_tab():
    d = defaults()
    suite = st.selectbox("Suite", SUITE_NAMES, index=0, key="rep_suite")
    c1, c2, c3, c4, c5 = st.columns(5)
    with c1:
        q = st.number_input("q", min_value=2, max_value=64, step=2, value=d["q"], key="rep_q")
    with c2:
        max_rank = st.number_input("Max rank", min_value=1, max_value=10, value=min(d["max_rank"], 10), key="rep_rank")
    with c3:
        trials = st.number_input("Trials", min_value=1, max_value=1000, value=d["trials"], key="rep_trials")
    with c4:
        seed = st.number_input("Seed", min_value=0, value=d["seed"], key="rep_seed")
    with c5:
        max_degree = st.number_input("Max degree", min_value=1, max_value=10, value=d["max_degree"], key="rep_deg")
    keep = st.checkbox("Record this run in the history", value=False, key="rep_record")

    if st.button("Run suite", type="primary", key="rep_run"):
        params = {"q": int(q), "max_rank": int(max_rank), "trials": int(trials),
                  "seed": int(seed), "max_degree": int(max_degree)}
        try:
            with st.spinner(f"Running {suite}..."):
                report = run_suite(suite, params)
        except DomainError as e:
            st.error(f"Invalid parameters: {e}")
            return
        except Exception as e:
            log.exception("suite %s failed", suite)
            st.error(f"Suite failed: {e}")
            return
        st.session_state["rep_last"] = report
        if keep:
            ok, msg = db.record_run(report)
            (st.success if ok else st.error)(msg)

    report = st.session_state.get("rep_last")
    if report is None:
        st.info("Choose a suite and press Run.")
        return
    m1, m2, m3, m4 = st.columns(4)
    with m1:
        st.metric("Status", report.status.upper())
    with m2:
        st.metric("Passed", f"{report.passed:,}")
    with m3:
        st.metric("Failed", f"{report.failed:,}")
    with m4:
        st.metric("Time (ms)", f"{report.millis:,}")
    df = checks_frame(report)
    only_bad = st.checkbox("Show failures only", value=False, key="rep_only_bad")
    if only_bad:
        df = df[df["status"] != "pass"]
    st.dataframe(df, use_container_width=True, height=500)
    _download_buttons(df, f"{report.suite}_checks", "rep_checks")


def _tables_tab():
    kind = st.selectbox("Table", TABLE_KINDS, index=0, key="rep_table_kind")
    max_degree = st.number_input("Max degree / total rank", min_value=1, max_value=8,
                                 value=min(defaults()["max_degree"], 8), key="rep_table_deg")
    try:
        df = table_frame(kind, int(max_degree))
    except Exception as e:
        st.error(f"Failed to build table: {e}")
        return
    if df.empty:
        st.info("Empty table.")
        return
    st.dataframe(df, use_container_width=True, height=500)
    _download_buttons(df, f"{kind}_table", "rep_table")


def _history_tab():
    limit = st.number_input("Runs to show", min_value=1, max_value=500, value=20, key="rep_hist_limit")
    try:
        runs = db.recent_runs(int(limit))
    except Exception as e:
        st.error(f"Failed to load history: {e}")
        return
    if runs.empty:
        st.info("No recorded runs yet.")
        return
    st.dataframe(runs, use_container_width=True)
    run_id = st.selectbox("Inspect run", runs["id"].tolist(), key="rep_hist_run")
    if run_id is not None:
        checks = db.run_checks(int(run_id))
        st.dataframe(checks, use_container_width=True, height=400)
        _download_buttons(checks, f"run_{run_id}", "rep_hist")


def render(user=None):
    st.title("🧮 Verification Reports")
    st.caption("Exact checks of factor systems, spin groups, Clifford algebras, queer spaces, species and Q-functions.")
    tab_run, tab_tables, tab_hist = st.tabs(["Run suite", "Tables", "History"])
    with tab_run:
        _suite_tab()
    with tab_tables:
        _tables_tab()
    with tab_hist:
        _history_tab()


app = render
main = render
