import pytest

from modules import settings
from modules.scalars import DomainError


def test_builtin_defaults(monkeypatch):
    for key in ("SUPERCHECK_SEED", "SUPERCHECK_Q", "SUPERCHECK_MAX_RANK", "SUPERCHECK_TRIALS",
                "SUPERCHECK_MAX_DEGREE"):
        monkeypatch.delenv(key, raising=False)
    assert settings.defaults() == settings.BUILTIN_DEFAULTS


def test_environment_override(monkeypatch):
    monkeypatch.setenv("SUPERCHECK_SEED", "7")
    assert settings.defaults()["seed"] == 7


def test_bad_environment_value(monkeypatch):
    monkeypatch.setenv("SUPERCHECK_Q", "eight")
    with pytest.raises(DomainError):
        settings.defaults()


def test_resolve_overrides(monkeypatch):
    monkeypatch.delenv("SUPERCHECK_Q", raising=False)
    params = settings.resolve({"q": "16", "trials": None})
    assert params["q"] == 16
    assert params["trials"] == settings.defaults()["trials"]
