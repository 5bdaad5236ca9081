from math import comb

import pytest

from modules.clifford import CliffordElement
from modules.scalars import HALF, DomainError
from modules.spin_group import (
    FLAVORS,
    SpinFlavor,
    all_elements,
    c_power,
    canonical_lift,
    central,
    check_presentation,
    check_spin_conj,
    check_tauj,
    clifford_image,
    clifford_image_injective,
    from_word,
    generator,
    group_identity,
    group_inverse,
    group_mul,
    hecke_checks,
    tau_factorization,
    tau_rows,
    tau_symmetric_power,
    tau_tilde,
)


class TestPresentation:
    @pytest.mark.parametrize("flavor", FLAVORS, ids=str)
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_relations_hold(self, flavor, n):
        recs = check_presentation(n, flavor)
        assert all(r.ok for r in recs), [r for r in recs if not r.ok]

    def test_inverse(self):
        for g in all_elements(3):
            assert group_mul(g, group_inverse(g)) == group_identity(3)

    def test_central_element(self):
        assert c_power(central(3)) == 1
        assert c_power(group_mul(central(3), central(3))) == 0
        assert c_power(generator(3, 1)) is None

    def test_far_generators_anticommute(self):
        s1, s3 = generator(4, 1), generator(4, 3)
        assert group_mul(s1, s1) == group_identity(4)
        assert group_mul(s1, s3) == group_mul(central(4), group_mul(s3, s1))

    def test_mixed_ranks_do_not_multiply(self):
        with pytest.raises(DomainError):
            group_mul(group_identity(2), group_identity(3))
        with pytest.raises(DomainError):
            group_mul(group_identity(2), group_identity(2, SpinFlavor(0, 0)))

    def test_canonical_lift_rejects_non_permutation(self):
        with pytest.raises(DomainError):
            canonical_lift((0, 0))


class TestTau:
    @pytest.mark.parametrize("n", range(5))
    @pytest.mark.parametrize("m", range(5))
    def test_symmetric_power(self, n, m):
        assert tau_symmetric_power(n, m) == comb(n, 2) * comb(m, 2) % 2

    @pytest.mark.parametrize("n,m,p", [(1, 1, 1), (1, 2, 1), (2, 2, 2), (3, 1, 2)])
    def test_tau_composition(self, n, m, p):
        assert check_tauj(n, m, p)

    @pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 2), (1, 3)])
    def test_conjugation_of_embedded_pairs(self, n, m):
        assert all(check_spin_conj(n, m, g, h) for g in all_elements(n) for h in all_elements(m))

    def test_tau_rows(self):
        rows = tau_rows(4)
        assert len(rows) == 15
        assert all(r["c_power"] == r["expected"] for r in rows)

    def test_negative_block(self):
        with pytest.raises(DomainError):
            tau_tilde(-1, 2)


class TestCliffordAndHecke:
    def test_clifford_image_of_generator(self):
        img = clifford_image(from_word(2, [1]))
        assert img == CliffordElement(2, {0b10: HALF, 0b01: -HALF})

    def test_clifford_image_of_central(self):
        assert clifford_image(central(3)) == CliffordElement.scalar(3, -1)

    def test_clifford_image_needs_spin_flavour(self):
        with pytest.raises(DomainError):
            clifford_image(group_identity(2, SpinFlavor(0, 0)))

    @pytest.mark.parametrize("n", [2, 3])
    def test_clifford_image_injective(self, n):
        assert clifford_image_injective(n)

    @pytest.mark.parametrize("n", [2, 3])
    def test_hecke_isomorphism(self, n):
        recs = hecke_checks(n)
        assert all(r.ok for r in recs), [r for r in recs if not r.ok]

    @pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 2)])
    def test_tau_factorization(self, m, n):
        assert tau_factorization(m, n).ok
