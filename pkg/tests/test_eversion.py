import pytest

from modules.axioms import SVecInstance, SVecObject
from modules.clifford import cl2_matrix_iso
from modules.eversion import (
    CliffordModule,
    cl1_double_check,
    clifford_module,
    eversion_checks,
    module_relations,
    morita_iso,
    periodicity_checks,
    spin_action,
    split_map,
    u2_module,
)
from modules.scalars import DomainError
from modules.spin_group import group_identity
from modules.supervec import K, K11, identity, is_invertible


class TestCliffordModules:
    def test_u2_is_a_rank_two_module(self):
        assert module_relations(u2_module()) is None

    def test_even_action_is_reported(self):
        M = CliffordModule(SVecObject(K11, 1), K11, (identity(K11),), "bad")
        assert module_relations(M) == "alpha_1 is even"

    def test_clifford_module_validates(self):
        base = SVecInstance(4, [])
        with pytest.raises(DomainError):
            clifford_module(base, SVecObject(K11, 1), (identity(K11),), "bad")

    def test_spin_action_rank_mismatch(self):
        with pytest.raises(DomainError):
            spin_action(K11, cl2_matrix_iso(), group_identity(3))


class TestPeriodicity:
    def test_morita_iso_of_u2(self):
        E, phi = morita_iso(u2_module())
        assert E == K
        assert is_invertible(phi)

    def test_morita_iso_needs_rank_two(self):
        x, _ = cl2_matrix_iso()
        with pytest.raises(DomainError):
            morita_iso(CliffordModule(SVecObject(K11, 1), K11, (x,), "X"))

    def test_random_modules_split(self):
        recs = periodicity_checks(3, seed=0)
        assert all(r.ok for r in recs), [r for r in recs if not r.ok]

    def test_cl1_modules_double(self):
        x, zy = cl2_matrix_iso()
        mods = [CliffordModule(SVecObject(K11, 1), K11, (a,), n) for a, n in ((x, "X"), (zy, "Y"))]
        recs = cl1_double_check(mods)
        assert all(r.ok for r in recs), [r for r in recs if not r.ok]

    def test_split_map_is_invertible(self):
        assert is_invertible(split_map(K11))


@pytest.mark.slow
def test_eversion_suite_passes():
    recs = eversion_checks(trials=2, seed=0)
    assert recs
    assert all(r.ok for r in recs), [r for r in recs if not r.ok]
