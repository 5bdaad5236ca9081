from fractions import Fraction

import pytest
from hypothesis import given

from modules.scalars import (
    HALF,
    MINUS_ONE,
    ONE,
    SQRT2,
    ZERO,
    ZETA4,
    ZETA8,
    ZETA16,
    CycNumber,
    DomainError,
    QSqrt2,
    as_cyc,
    cyc_inv,
    cyc_root,
    embed_qsqrt2,
    sign,
)
from tests.strategies import cyc_numbers, qsqrt2_numbers


class TestCycNumberField:
    @given(cyc_numbers(), cyc_numbers(), cyc_numbers())
    def test_multiplication_is_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(cyc_numbers(), cyc_numbers(), cyc_numbers())
    def test_distributive_law(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(cyc_numbers(), cyc_numbers())
    def test_multiplication_commutes(self, a, b):
        assert a * b == b * a

    @given(cyc_numbers(nonzero=True))
    def test_inverse(self, a):
        assert a * cyc_inv(a) == ONE
        assert a / a == ONE

    @given(cyc_numbers(), cyc_numbers())
    def test_galois_is_multiplicative(self, a, b):
        assert (a * b).galois(3) == a.galois(3) * b.galois(3)

    @given(cyc_numbers())
    def test_conj_is_involution(self, a):
        assert a.conj().conj() == a


class TestRoots:
    def test_zeta16_has_order_16(self):
        assert ZETA16 ** 16 == ONE
        assert ZETA16 ** 8 == MINUS_ONE

    def test_smaller_roots(self):
        assert ZETA8 == ZETA16 ** 2
        assert ZETA4 ** 2 == MINUS_ONE
        assert cyc_root(4, 1) == ZETA4

    def test_sqrt2(self):
        assert SQRT2 * SQRT2 == 2
        assert SQRT2 == ZETA8 * (1 - ZETA4)

    def test_root_exponent(self):
        assert ZETA8.root_exponent() == 2
        assert MINUS_ONE.root_exponent() == 8
        assert (ONE + ZETA4).root_exponent() is None

    def test_negative_powers(self):
        assert ZETA16 ** -1 == ZETA16 ** 15
        assert CycNumber.from_int(2) ** -2 == CycNumber.from_fraction(Fraction(1, 4))

    def test_sign(self):
        assert sign(3) == MINUS_ONE
        assert sign(4) == ONE


class TestErrors:
    def test_zero_inverse(self):
        with pytest.raises(DomainError):
            cyc_inv(ZERO)
        with pytest.raises(DomainError):
            ONE / ZERO

    def test_root_order(self):
        with pytest.raises(DomainError):
            cyc_root(3, 1)

    def test_even_galois_exponent(self):
        with pytest.raises(DomainError):
            ZETA4.galois(2)

    def test_inexact_scalar(self):
        with pytest.raises(TypeError):
            CycNumber((0.5,))


class TestQSqrt2:
    @given(qsqrt2_numbers(), qsqrt2_numbers())
    def test_embedding_is_a_ring_map(self, x, y):
        assert embed_qsqrt2(x * y) == embed_qsqrt2(x) * embed_qsqrt2(y)
        assert embed_qsqrt2(x + y) == embed_qsqrt2(x) + embed_qsqrt2(y)

    @given(qsqrt2_numbers(nonzero=True))
    def test_inverse(self, x):
        assert x * x.inverse() == QSqrt2(1)

    def test_inverse_sqrt2(self):
        r = QSqrt2(0, 1).inverse()
        assert r == QSqrt2(0, Fraction(1, 2))
        assert r * r == QSqrt2(Fraction(1, 2))
        assert as_cyc(r) * SQRT2 == ONE

    def test_half(self):
        assert as_cyc(QSqrt2(Fraction(1, 2))) == HALF

    def test_rendering(self):
        assert str(QSqrt2(1, 1)) == "1 + √2"
        assert str(QSqrt2(0, -1)) == "-√2"
        assert str(QSqrt2(Fraction(1, 2))) == "1/2"
