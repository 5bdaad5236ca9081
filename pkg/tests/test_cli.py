import json

import pytest

from modules.cli import main


def test_verify_text(capsys):
    assert main(["verify", "factor-systems", "--q", "8", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "✓" in out
    assert "pass:" in out


def test_verify_json(capsys):
    assert main(["verify", "qsym", "--max-degree", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["suite"] == "qsym"
    assert data["params"]["max_degree"] == 3


def test_unknown_suite_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus"])
    assert exc.value.code == 2


def test_bad_parameter_returns_two(capsys):
    assert main(["verify", "factor-systems", "--q", "3"]) == 2
    assert "supercheck: error:" in capsys.readouterr().err


def test_table_csv(capsys):
    assert main(["table", "dictionary", "--max-degree", "3"]) == 0
    assert "(2,1)" in capsys.readouterr().out


def test_table_xlsx(tmp_path, capsys):
    assert main(["table", "qfun", "--max-degree", "2", "--format", "xlsx"]) == 2
    target = tmp_path / "qfun.xlsx"
    assert main(["table", "qfun", "--max-degree", "2", "--format", "xlsx", "--output", str(target)]) == 0
    assert target.read_bytes()[:2] == b"PK"


def test_record_and_history(tmp_path, capsys):
    path = str(tmp_path / "runs.db")
    assert main(["history", "--db", path]) == 0
    assert "No recorded runs." in capsys.readouterr().out
    assert main(["verify", "qsym", "--max-degree", "2", "--record", "--db", path]) == 0
    assert "Run 1 recorded." in capsys.readouterr().err
    assert main(["history", "--db", path]) == 0
    assert "qsym" in capsys.readouterr().out
