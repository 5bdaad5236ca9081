# settings.py - runtime configuration for supercheck
# Sources, highest precedence first:
#   - explicit CLI flags (applied by the caller through resolve())
#   - environment variables SUPERCHECK_*
#   - optional Streamlit secrets table:
#       [supercheck]
#       seed = 0
#       q = 8
#       max_rank = 6
#       trials = 25
#       max_degree = 6
#       db_path = "runs.db"
#       app_name = "supercheck"
#   - built-in defaults
#
import logging
import os
from typing import Any, Dict, Optional

try:
    import streamlit as st
except Exception:
    class _Dummy(dict):
        secrets = {}
        def get(self, *a, **k): return None
    st = _Dummy()


class _Empty(dict):
    def get(self, *a, **k):
        return k.get("default", a[1] if len(a) > 1 else None)


def _get_secrets():
    try:
        return st.secrets
    except Exception:
        return _Empty()


def _secret_table() -> Dict[str, Any]:
    try:
        table = _get_secrets().get("supercheck", {})
        return dict(table or {})
    except Exception:
        # no secrets.toml outside a Streamlit app
        return {}


BUILTIN_DEFAULTS = {
    "seed": 0,
    "q": 8,
    "max_rank": 6,
    "trials": 25,
    "max_degree": 6,
}

_ENV_KEYS = {
    "seed": "SUPERCHECK_SEED",
    "q": "SUPERCHECK_Q",
    "max_rank": "SUPERCHECK_MAX_RANK",
    "trials": "SUPERCHECK_TRIALS",
    "max_degree": "SUPERCHECK_MAX_DEGREE",
}

RUNS_DB_PATH = os.environ.get("SUPERCHECK_DB_PATH") or _secret_table().get("db_path") or "runs.db"
APP_NAME = os.environ.get("SUPERCHECK_APP_NAME") or _secret_table().get("app_name") or "supercheck"
LOG_LEVEL = os.environ.get("SUPERCHECK_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

_logging_configured = False


def _as_int(name: str, raw) -> int:
    try:
        return int(raw)
    except (TypeError, ValueError):
        from .scalars import DomainError
        raise DomainError(f"setting {name!r} must be an integer, got {raw!r}")


def defaults() -> Dict[str, int]:
    """Resolved defaults: environment over secrets over built-ins."""
    secrets = _secret_table()
    out = {}
    for key, builtin in BUILTIN_DEFAULTS.items():
        raw = os.environ.get(_ENV_KEYS[key])
        if raw is None or raw == "":
            raw = secrets.get(key, builtin)
        out[key] = _as_int(key, raw)
    return out


def resolve(overrides: Optional[Dict[str, Any]] = None) -> Dict[str, int]:
    params = defaults()
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        params[key] = _as_int(key, value)
    return params


def configure_logging(level: Optional[str] = None) -> None:
    global _logging_configured
    lvl = (level or LOG_LEVEL or "WARNING").upper()
    if not _logging_configured:
        logging.basicConfig(level=lvl, format=LOG_FORMAT)
        _logging_configured = True
    logging.getLogger("modules").setLevel(lvl)
