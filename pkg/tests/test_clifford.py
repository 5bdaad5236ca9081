from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modules.clifford import (
    CliffordElement,
    appendix_iso_verify,
    check_relations,
    cl2_matrix_iso,
    cl8_matrix_iso,
    cl_from_word,
    cl_mul,
    cl_op_iso,
    clifford_perm_conjugation,
    end_op,
    left_ideal_dims,
    monomial_images,
    monomial_rank,
    periodicity_data,
    signed_transpose,
    spin_image,
    supercommutator,
)
from modules.scalars import DomainError
from modules.supervec import K11, SuperMap
from tests.strategies import cyc_numbers


def cl3_elements():
    return st.dictionaries(st.integers(0, 7), cyc_numbers(), max_size=3).map(lambda d: CliffordElement(3, d))


def gen(n, i):
    return CliffordElement.generator(n, i)


class TestCliffordProduct:
    def test_generators_square_to_two(self):
        for i in (1, 2, 3):
            assert cl_mul(gen(3, i), gen(3, i)) == CliffordElement.scalar(3, 2)

    def test_generators_anticommute(self):
        assert cl_mul(gen(2, 2), gen(2, 1)) == CliffordElement.monomial(2, [1, 2]).scale(-1)
        assert cl_mul(gen(2, 1), gen(2, 2)) == CliffordElement.monomial(2, [1, 2])

    def test_sum_of_generators_squares_to_four(self):
        s = gen(2, 1) + gen(2, 2)
        assert s * s == CliffordElement.scalar(2, 4)

    def test_words(self):
        assert cl_from_word(2, [1, 2, 1]) == gen(2, 2).scale(-2)
        assert cl_from_word(2, [1, 1, 1]) == gen(2, 1).scale(2)
        assert cl_from_word(2, [-1, 1]) == CliffordElement.scalar(2, -2)

    def test_supercommutator_of_generators(self):
        assert supercommutator(gen(2, 1), gen(2, 2)).is_zero()
        assert supercommutator(gen(2, 1), gen(2, 1)) == CliffordElement.scalar(2, 4)

    def test_parity(self):
        assert CliffordElement.monomial(3, [1, 3]).parity() == 0
        assert (gen(3, 1) + CliffordElement.one(3)).parity() is None

    def test_bad_generator_and_rank_mismatch(self):
        with pytest.raises(DomainError):
            gen(2, 3)
        with pytest.raises(DomainError):
            cl_mul(gen(2, 1), gen(3, 1))
        with pytest.raises(DomainError):
            CliffordElement.monomial(3, [1, 1])

    @given(cl3_elements(), cl3_elements(), cl3_elements())
    def test_product_is_associative(self, x, y, z):
        assert cl_mul(cl_mul(x, y), z) == cl_mul(x, cl_mul(y, z))


class TestSpinImage:
    @pytest.mark.parametrize("n,i", [(2, 1), (3, 1), (3, 2), (5, 4)])
    def test_spin_image_is_an_involution(self, n, i):
        s = spin_image(n, i)
        assert cl_mul(s, s) == CliffordElement.one(n)

    def test_conjugation_permutes_generators(self):
        assert all(clifford_perm_conjugation(4, j, i) for j in range(1, 4) for i in range(1, 5))

    def test_out_of_range_generator(self):
        with pytest.raises(DomainError):
            spin_image(3, 3)


class TestMatrixModels:
    def test_cl2_relations_and_rank(self):
        gens = list(cl2_matrix_iso())
        assert all(ok for _, ok in check_relations(gens))
        assert monomial_rank(monomial_images(gens)) == 4

    @pytest.mark.slow
    def test_cl8_relations_and_rank(self):
        gens = cl8_matrix_iso()
        assert len(gens) == 8
        assert all(ok for _, ok in check_relations(gens))
        assert monomial_rank(monomial_images(gens)) == 256

    def test_periodicity_two(self):
        data = periodicity_data(2)
        eps = data.idempotent_eps
        assert data.module_U == K11
        assert cl_mul(eps, eps) == eps
        assert left_ideal_dims(eps) == K11

    def test_periodicity_rejects_other_ranks(self):
        with pytest.raises(DomainError):
            periodicity_data(3)


class TestAppendixIsomorphisms:
    @pytest.mark.parametrize("which", ["cliff1", "cliff2", "cliff3"])
    def test_isomorphism_checks_pass(self, which):
        recs = appendix_iso_verify(which)
        assert recs
        assert all(r.ok for r in recs), [r for r in recs if not r.ok]

    def test_unknown_isomorphism(self):
        with pytest.raises(DomainError):
            appendix_iso_verify("cliff4")


class TestOppositeIsomorphism:
    def test_signed_transpose(self):
        f = SuperMap.build(K11, K11, 1, {(0, 1): 2, (1, 0): 1})
        assert signed_transpose(f) == SuperMap.build(K11, K11, 1, {(0, 1): -1, (1, 0): 2})

    def test_end_op_on_alpha4(self):
        expect = CliffordElement(4, {0b1000: Fraction(3, 4), 0b0111: Fraction(5, 8)})
        assert end_op(gen(4, 4)) == expect

    def test_end_op_reverses_squares(self):
        a = end_op(gen(4, 4))
        u = end_op(cl_from_word(4, [1, 2, 3]).scale(Fraction(1, 2)))
        assert cl_mul(a, a) == CliffordElement.scalar(4, -2)
        assert cl_mul(u, u) == CliffordElement.scalar(4, 2)
        assert end_op(CliffordElement.one(4)) == CliffordElement.one(4)

    def test_end_op_rejects_quaternion_part(self):
        with pytest.raises(DomainError):
            end_op(gen(4, 1))

    def test_generator_images_square_to_minus_two(self):
        # beta *op beta = -beta^2 must equal the image of alpha^2 = 2
        for b in cl_op_iso():
            assert cl_mul(b, b) == CliffordElement.scalar(4, -2)

    def test_cliff3_records_follow_the_factorisation(self):
        ids = [r.id for r in appendix_iso_verify("cliff3")]
        assert ids[:3] == ["cliff3.quaternion-split", "cliff3.signed-transpose-anti-hom", "cliff3.factorwise"]
        assert "cliff3.bijective" in ids
