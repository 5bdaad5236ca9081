import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modules.scalars import ONE, DomainError, sign
from modules.supervec import (
    K,
    K11,
    MixedMap,
    SuperMap,
    SuperSpace,
    compose,
    eigenspace,
    homogeneous,
    identity,
    inverse_map,
    pi_functor,
    pi_space,
    random_map,
    scalar_map,
    supercommutator,
    symmetry,
    tensor_map,
    tensor_space,
    xi,
    xi_power,
)
from tests.strategies import map_between, seeds, super_spaces

parities = st.integers(0, 1)


def _odd_swap():
    return SuperMap.build(K11, K11, 1, {(0, 1): 1, (1, 0): 1})


class TestSuperMapBasics:
    def test_negative_dimension_is_rejected(self):
        with pytest.raises(DomainError):
            SuperSpace(-1, 0)

    def test_build_rejects_parity_breaking_entry(self):
        with pytest.raises(DomainError):
            SuperMap.build(K11, K11, 0, {(0, 1): 1})

    def test_build_rejects_entry_outside_shape(self):
        with pytest.raises(DomainError):
            SuperMap.build(K, K, 0, {(1, 0): 1})

    def test_compose_rejects_shape_mismatch(self):
        with pytest.raises(DomainError):
            compose(identity(K), identity(K11))

    def test_adding_different_parities_raises(self):
        with pytest.raises(DomainError):
            identity(K11) + _odd_swap()

    def test_mixed_map_with_two_parts_is_not_homogeneous(self):
        with pytest.raises(DomainError):
            homogeneous(MixedMap(identity(K11), _odd_swap()))

    def test_mixed_map_of_homogeneous_round_trips(self):
        f = _odd_swap()
        assert homogeneous(MixedMap.of(f)) == f

    def test_tensor_dimensions(self):
        T, idx = tensor_space(SuperSpace(2, 1), SuperSpace(1, 2))
        assert T == SuperSpace(4, 5)
        assert sorted(idx.values()) == list(range(9))


class TestInterchange:
    @given(super_spaces(), super_spaces(), super_spaces(), parities, parities, seeds())
    def test_super_interchange_law(self, U, V, W, pf, pg, seed):
        rng = random.Random(seed)
        f1 = random_map(U, V, rng.randrange(2), rng)
        f = random_map(V, W, pf, rng)
        g1 = random_map(U, V, rng.randrange(2), rng)
        g = random_map(V, W, pg, rng)
        lhs = compose(tensor_map(f, g), tensor_map(f1, g1))
        rhs = tensor_map(compose(f, f1), compose(g, g1)).scale(sign(g.parity * f1.parity))
        assert lhs == rhs

    @given(super_spaces(), super_spaces(), parities, parities, seeds())
    def test_tau_is_natural(self, V, W, pf, pg, seed):
        f = map_between(V, W, pf, seed)
        g = map_between(W, V, pg, seed + 1)
        lhs = compose(symmetry("tau", W, V), tensor_map(f, g))
        rhs = compose(tensor_map(g, f), symmetry("tau", V, W)).scale(sign(pf * pg))
        assert lhs == rhs

    @given(super_spaces(), super_spaces())
    def test_tau_squares_to_identity(self, V, W):
        T, _ = tensor_space(V, W)
        assert compose(symmetry("tau", W, V), symmetry("tau", V, W)) == identity(T)

    def test_unknown_symmetry_kind(self):
        with pytest.raises(DomainError):
            symmetry("braid", K, K)


class TestPi:
    @given(super_spaces())
    def test_pi_functor_preserves_identity(self, V):
        assert pi_functor(identity(V)) == identity(pi_space(V))

    @given(super_spaces())
    def test_xi_power_inverts_xi(self, V):
        assert compose(xi_power(1, 0, V), xi(V)) == identity(V)
        assert xi_power(0, 1, V) == xi(V)

    @given(super_spaces(), parities, parities, seeds())
    def test_pi_functor_is_multiplicative(self, V, pf, pg, seed):
        f = map_between(V, V, pf, seed)
        g = map_between(V, V, pg, seed + 7)
        assert pi_functor(compose(g, f)) == compose(pi_functor(g), pi_functor(f))

    def test_negative_pi_power(self):
        with pytest.raises(DomainError):
            xi_power(-1, 0, K)


class TestSubspacesAndInverses:
    @given(super_spaces())
    def test_scalar_map_eigenspace_is_everything(self, V):
        E, incl = eigenspace(scalar_map(V, 2), 2)
        assert E == V
        assert incl == identity(V)

    def test_eigenspace_of_odd_map_raises(self):
        with pytest.raises(DomainError):
            eigenspace(_odd_swap(), 1)

    def test_inverse_of_unipotent_map(self):
        V = SuperSpace(2, 0)
        f = SuperMap.build(V, V, 0, {(0, 0): 1, (0, 1): 1, (1, 1): 1})
        inv = inverse_map(f)
        assert inv.entries[(0, 1)] == -ONE
        assert compose(inv, f) == identity(V)

    @given(super_spaces(), seeds())
    def test_odd_supercommutator_is_twice_the_square(self, V, seed):
        f = map_between(V, V, 1, seed)
        assert supercommutator(f, f) == compose(f, f).scale(2)
