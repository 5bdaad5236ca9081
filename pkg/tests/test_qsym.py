from fractions import Fraction

import pytest

from modules.qsym import (
    Q_lambda,
    Q_pair,
    StrictPartition,
    SymFun,
    class_dictionary,
    dictionary_rows,
    expand_in_Q_basis,
    expected_ratio,
    pfaffian,
    pfaffian_det_check,
    q_poly,
    qfun_rows,
    qsym_checks,
    strict_partitions,
)
from modules.scalars import DomainError, QSqrt2

F = Fraction
SP = StrictPartition


class TestQPolynomials:
    def test_q0_is_one(self):
        assert q_poly(0, 3) == SymFun.one(3)

    def test_q1(self):
        expected = SymFun.from_terms(3, {(1, 0, 0): 2, (0, 1, 0): 2, (0, 0, 1): 2})
        assert q_poly(1, 3) == expected

    def test_q2_coefficients(self):
        q2 = q_poly(2, 2)
        assert q2.coefficient((2, 0)) == 2
        assert q2.coefficient((1, 1)) == 4
        assert q2.is_symmetric()

    def test_generating_relation_in_degree_four(self):
        total = SymFun.zero(4)
        for i in range(5):
            term = q_poly(i, 4) * q_poly(4 - i, 4)
            total = total - term if i % 2 else total + term
        assert total == 0

    def test_Q_pair(self):
        expected = q_poly(2, 3) * q_poly(1, 3) - q_poly(3, 3).scale(2)
        assert Q_pair(2, 1, 3) == expected
        assert Q_pair(1, 2, 3) == -Q_pair(2, 1, 3)
        assert Q_pair(1, 0, 2) == q_poly(1, 2)

    def test_negative_pair_index(self):
        with pytest.raises(DomainError):
            Q_pair(-1, 2, 2)

    def test_symfun_needs_a_variable(self):
        with pytest.raises(DomainError):
            SymFun(0)
        with pytest.raises(DomainError):
            SymFun.from_terms(2, {(1,): 1})

    def test_sqrt2_coefficients_multiply(self):
        r = SymFun.from_terms(1, {(1,): QSqrt2(0, 1)})
        assert r * r == SymFun.from_terms(1, {(2,): 2})


class TestPfaffian:
    def test_two_by_two(self):
        assert pfaffian([[0, F(3)], [F(-3), 0]], one=F(1)) == 3

    def test_block_diagonal(self):
        a, b = F(2), F(5, 3)
        M = [[0, a, 0, 0], [-a, 0, 0, 0], [0, 0, 0, b], [0, 0, -b, 0]]
        assert pfaffian(M, one=F(1)) == a * b

    def test_empty_matrix(self):
        assert pfaffian([], one=F(1)) == 1

    @pytest.mark.parametrize("size,seed", [(2, 0), (4, 1), (6, 2)])
    def test_square_is_determinant(self, size, seed):
        assert pfaffian_det_check(size, seed) is None

    def test_rejects_bad_shapes(self):
        with pytest.raises(DomainError):
            pfaffian([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
        with pytest.raises(DomainError):
            pfaffian([[0, 1], [1, 0]])
        with pytest.raises(DomainError):
            pfaffian([[0, 1]])


class TestQFunctions:
    def test_single_row(self):
        assert Q_lambda(SP((1,)), 1) == q_poly(1, 1)
        assert Q_lambda(SP(()), 2) == SymFun.one(2)

    def test_integral_and_symmetric(self):
        Q = Q_lambda(SP((3, 1)), 4)
        assert Q.is_integral()
        assert Q.is_symmetric()
        assert Q.degrees() == [4]

    def test_expand_basis_element(self):
        lam = SP((2, 1))
        assert expand_in_Q_basis(Q_lambda(lam, 3)) == {lam: QSqrt2(1)}

    def test_expand_product(self):
        coeffs = expand_in_Q_basis(q_poly(2, 3) * q_poly(1, 3))
        assert coeffs == {SP((2, 1)): QSqrt2(1), SP((3,)): QSqrt2(2)}

    def test_expand_rejects_non_symmetric(self):
        with pytest.raises(DomainError):
            expand_in_Q_basis(SymFun.from_terms(2, {(1, 0): 1}))

    def test_expand_needs_enough_variables(self):
        with pytest.raises(DomainError):
            expand_in_Q_basis(q_poly(3, 2))


class TestPartitionsAndDictionary:
    def test_strict_partitions(self):
        assert strict_partitions(6) == [SP((6,)), SP((5, 1)), SP((4, 2)), SP((3, 2, 1))]
        assert strict_partitions(0) == [SP(())]
        assert strict_partitions(-1) == []

    @pytest.mark.parametrize("parts", [(1, 1), (0,), (1, 2)])
    def test_invalid_partitions(self, parts):
        with pytest.raises(DomainError):
            SP(parts)

    def test_queer_flag(self):
        assert SP((2, 1)).is_queer
        assert SP((2,)).is_queer
        assert not SP((1,)).is_queer
        assert not SP((3, 1)).is_queer

    def test_scalars(self):
        half_root = QSqrt2(0, F(1, 2))
        assert class_dictionary(SP((1,)), "L") == 1
        assert class_dictionary(SP((1,)), "N") == half_root
        assert class_dictionary(SP((2, 1)), "L") == F(1, 2)
        assert class_dictionary(SP((2, 1)), "N") == half_root
        with pytest.raises(DomainError):
            class_dictionary(SP((1,)), "M")

    def test_ratios(self):
        assert expected_ratio(SP((2, 1))) == QSqrt2(0, F(1, 2))
        assert expected_ratio(SP((3,))) == QSqrt2(0, 1)
        assert expected_ratio(SP((3, 1))) == 1

    def test_tables(self):
        rows = dictionary_rows(3)
        row = next(r for r in rows if r["lambda"] == "(2,1)")
        assert row["L_scalar"] == "1/2"
        assert row["queer"] is True
        q_rows = qfun_rows(2)
        assert [r["lambda"] for r in q_rows] == ["(1)", "(2)"]
        assert all(len(r["hash"]) == 12 for r in q_rows)

    def test_suite_passes(self):
        recs = qsym_checks(4)
        assert all(r.ok for r in recs), [r for r in recs if not r.ok]

    def test_dictionary_parity_covers_top_degree(self, monkeypatch):
        import modules.qsym as qsym

        original = qsym.expected_ratio
        monkeypatch.setattr(qsym, "expected_ratio", lambda lam: QSqrt2(0) if lam.size == 3 else original(lam))
        rec = next(r for r in qsym_checks(3) if r.id == "qsym.dictionary.parity")
        assert not rec.ok
        assert "ratio" in rec.witness
