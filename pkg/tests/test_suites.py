import pytest

from modules import suites
from modules.report import ERROR, PASS
from modules.scalars import DomainError


class TestParams:
    def test_defaults_are_filled(self):
        p = suites.validate_params({"q": 4})
        assert p["q"] == 4
        assert set(p) == set(suites.PARAM_RANGES)

    @pytest.mark.parametrize("params", [{"q": 3}, {"q": 66}, {"trials": 0}, {"max_degree": 11}, {"seed": -1}])
    def test_out_of_range(self, params):
        with pytest.raises(DomainError):
            suites.validate_params(params)

    def test_unknown_parameter(self):
        with pytest.raises(DomainError):
            suites.validate_params({"depth": 2})


class TestRunSuite:
    def test_unknown_suite(self):
        with pytest.raises(DomainError):
            suites.run_suite("nope")

    def test_factor_systems(self):
        rep = suites.run_suite("factor-systems", {"q": 8, "seed": 0})
        assert rep.status == PASS, [c for c in rep.checks if not c.ok]
        assert any(c.id == "relations.q8.C=d(c)" for c in rep.checks)
        ids = {c.id for c in rep.checks}
        assert "factor.q4.A-at-parity-0" in ids
        assert {"B.q2.p1.cond7", "A.q16.p1.cond3", "factor.q4.coboundaries"} <= ids

    def test_qsym(self):
        rep = suites.run_suite("qsym", {"max_degree": 4})
        assert rep.status == PASS
        assert rep.params["max_degree"] == 4

    def test_clifford(self):
        rep = suites.run_suite("clifford", {"max_rank": 3})
        assert rep.status == PASS, [c for c in rep.checks if not c.ok]

    def test_q_not_divisible_by_four_is_reported(self):
        rep = suites.run_suite("species", {"q": 6, "max_rank": 2})
        assert rep.status == ERROR
        assert rep.checks[0].id == "species.species"
        assert "DomainError" in rep.checks[0].witness

    def test_raising_component_becomes_error_record(self, monkeypatch):
        def boom(params):
            raise RuntimeError("broken")

        monkeypatch.setitem(suites.SUITES, "qsym", [("boom", boom)])
        rep = suites.run_suite("qsym", {"max_degree": 2})
        assert rep.status == ERROR
        assert [c.id for c in rep.checks] == ["qsym.boom"]
        assert rep.checks[0].witness == "RuntimeError: broken"

    def test_rescaled_spin_braiding_runs_when_four_does_not_divide_q(self):
        rep = suites.run_suite("stilde", {"q": 2, "max_rank": 2})
        assert rep.status == PASS, [c for c in rep.checks if not c.ok]
        ids = [c.id for c in rep.checks]
        assert any(i.startswith("stilde.B.") for i in ids)
        assert not any(i.startswith("stilde.A") or i.startswith("stilde.braid") for i in ids)

    def test_tau_factorization_reaches_max_rank(self):
        rep = suites.run_suite("hecke", {"max_rank": 6})
        assert rep.status == PASS, [c for c in rep.checks if not c.ok]
        ids = {c.id for c in rep.checks}
        assert {"hecke.tau-factorization.3.3", "hecke.tau-factorization.1.5"} <= ids


@pytest.mark.slow
class TestDefaultParameters:
    @pytest.mark.parametrize("name", ["stilde", "species", "queer", "eversion", "hecke"])
    def test_suite_passes_at_defaults(self, name):
        rep = suites.run_suite(name)
        assert rep.checks
        assert rep.status == PASS, [c for c in rep.checks if not c.ok]

    def test_stilde_covers_braid_relations_and_mutations(self):
        ids = {c.id for c in suites.run_suite("stilde").checks}
        assert {"stilde.braid.X1.n3", "stilde.braid.X2.n3", "stilde.A.mutations", "stilde.B.mutations"} <= ids

    def test_all_passes_at_defaults(self):
        rep = suites.run_suite("all")
        assert rep.status == PASS, [c for c in rep.checks if not c.ok]
        assert {c.id.split(".")[0] for c in rep.checks} >= {"stilde", "queer", "hecke", "factor"}
