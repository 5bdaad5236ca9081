# app.py - supercheck dashboard entry point (streamlit run app.py)
import importlib

import streamlit as st

st.set_page_config(page_title="supercheck", layout="wide")


def _try_import(module_name):
    try:
        return importlib.import_module(f"modules.{module_name}")
    except ModuleNotFoundError:
        return importlib.import_module(module_name)


def _maybe(name):
    try:
        return _try_import(name)
    except Exception:
        return None


settings = _try_import("settings")
ui_reports = _maybe("ui_reports")

APP_NAME = settings.APP_NAME

ALL_PAGES = {
    "Verification Reports": ui_reports,
}


def _route(choice):
    if not choice:
        return
    page = ALL_PAGES.get(choice)
    if page and hasattr(page, "render"):
        try:
            page.render(user=None)
        except Exception as e:
            st.error(f"Module call failed: {e}")
    else:
        st.warning("Module not available.")


def main():
    settings.configure_logging()
    st.sidebar.title(APP_NAME)
    choice = st.sidebar.selectbox("Go to", list(ALL_PAGES), index=0)
    _route(choice)


if __name__ == "__main__":
    main()
