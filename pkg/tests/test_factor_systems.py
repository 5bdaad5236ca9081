import random

import pytest
from hypothesis import given

from modules.factor_systems import (
    BUILTIN_NAMES,
    binomial2_well_defined,
    builtin,
    c_function,
    check,
    coboundary,
    d_function,
    first_failure,
    fs_equal,
    fs_mul,
    is_coboundary_of,
    passes,
    random_phi,
    relation_suite,
    with_parity,
)
from modules.scalars import ONE, ZETA4, DomainError
from tests.strategies import seeds


class TestBuiltins:
    @pytest.mark.parametrize("q", [2, 4, 8, 16])
    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_builtin_systems_satisfy_every_condition(self, name, q):
        if name == "A" and q % 4:
            pytest.skip("A needs 4 | q")
        recs = check(builtin(name, q))
        assert all(r.ok for r in recs), [r for r in recs if not r.ok]

    def test_A_at_parity_zero_fails_condition_three(self):
        x = with_parity(builtin("A", 4), 0)
        assert first_failure(x) == (3, (1, 1, 1, 1))
        rec = next(r for r in check(x) if r.id == "A[p=0].q4.p0.cond3")
        assert not rec.ok
        assert rec.witness == "(1, 1, 1, 1)"

    def test_sharp_systems_report_seven_conditions(self):
        assert len(check(builtin("B", 8))) == 7

    def test_A_needs_four_to_divide_q(self):
        with pytest.raises(DomainError):
            builtin("A", 6)

    def test_unknown_name_and_odd_modulus(self):
        with pytest.raises(DomainError):
            builtin("X", 8)
        with pytest.raises(DomainError):
            builtin("trivial", 3)

    def test_values(self):
        B = builtin("B", 4)
        assert B.parity == 1
        assert B.omega2(1, 1, 1) == ZETA4
        assert B.omega2(1, 2, 1) == ONE
        assert builtin("D", 4).omega_sharp(1, 3) == -ONE

    def test_C_and_D_differ_only_in_the_sharp_part(self):
        C, D = builtin("C", 8), builtin("D", 8)
        assert not fs_equal(C, D)
        assert fs_equal(C, D, level="B")


class TestCoboundaries:
    def test_relations_at_sixteen(self):
        recs = relation_suite(16)
        assert len(recs) == 5
        assert all(r.ok for r in recs), [r for r in recs if not r.ok]

    def test_C_is_coboundary_of_c(self):
        assert is_coboundary_of(builtin("C", 8), c_function)
        assert is_coboundary_of(builtin("D", 8), d_function)

    def test_product_of_coboundaries_passes(self):
        assert passes(fs_mul(builtin("C", 8), builtin("D", 8)))

    @given(seeds())
    def test_random_coboundaries_pass(self, seed):
        phi = random_phi(4, random.Random(seed))
        assert passes(coboundary(phi, 4))

    def test_hundred_seeded_coboundaries_at_four(self):
        rng = random.Random(0)
        failed = [t for t in range(100) if not passes(coboundary(random_phi(4, rng), 4))]
        assert not failed

    def test_coboundary_rejects_zero_values(self):
        with pytest.raises(DomainError):
            coboundary(lambda r, s: 0, 4).table1

    def test_binomial_parity(self):
        assert binomial2_well_defined(4)
        assert binomial2_well_defined(8)
        assert not binomial2_well_defined(6)
