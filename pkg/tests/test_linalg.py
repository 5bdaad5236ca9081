from fractions import Fraction

import pytest

from modules import linalg
from modules.scalars import ONE, ZETA4, DomainError

F = Fraction


def test_rank_counts_independent_rows():
    rows = [{0: F(1), 1: F(2)}, {0: F(2), 1: F(4)}, {2: F(1)}]
    assert linalg.rank(rows) == 2


def test_rref_has_unit_pivots():
    piv = linalg.rref([{0: F(2), 1: F(4)}, {1: F(3)}])
    assert piv == {0: {0: F(1)}, 1: {1: F(1)}}


def test_nullspace_is_annihilated():
    rows = [{0: F(1), 1: F(1), 2: F(1)}, {0: F(1), 1: F(-1)}]
    basis = linalg.nullspace(rows, 3, one=F(1))
    assert len(basis) == 1
    vec = basis[0]
    assert vec[2] == 1
    for row in rows:
        assert sum(v * vec.get(c, 0) for c, v in row.items()) == 0


def test_solve_and_inconsistent_system():
    rows = [{0: F(1), 1: F(1)}, {0: F(1), 1: F(-1)}]
    assert linalg.solve(rows, {0: F(3), 1: F(1)}, 2) == {0: F(2), 1: F(1)}
    assert linalg.solve([{0: F(1)}, {0: F(2)}], {0: F(1), 1: F(1)}, 1) is None


def test_solve_rejects_rows_outside_the_system():
    with pytest.raises(DomainError):
        linalg.solve([{0: F(1)}], {3: F(1)}, 1)


def test_inverse_over_cyclotomics():
    rows = [{0: ONE, 1: ZETA4}, {1: ONE}]
    inv = linalg.inverse(rows, 2)
    assert inv[0] == {0: ONE, 1: -ZETA4}
    assert inv[1] == {1: ONE}


def test_singular_inverse():
    with pytest.raises(DomainError):
        linalg.inverse([{0: ONE, 1: ONE}, {0: ONE, 1: ONE}], 2)
