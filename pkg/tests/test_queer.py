import random

import pytest

from modules.queer import (
    QueerSpace,
    half_tensor,
    instance_checks,
    queer_tensor,
    random_queer_morphism,
    random_queer_space,
    space_of,
    trial_checks,
)
from modules.scalars import DomainError
from modules.supervec import K11, SuperMap, SuperSpace, compose, identity


class TestQueerSpaces:
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_random_structure_is_an_odd_involution(self, d):
        U = random_queer_space(d, seed=d)
        assert U.space == SuperSpace(d, d)
        assert U.nu.parity == 1
        assert compose(U.nu, U.nu) == identity(U.space)

    def test_even_structure_is_rejected(self):
        with pytest.raises(DomainError):
            QueerSpace(K11, identity(K11))

    def test_structure_must_square_to_one(self):
        with pytest.raises(DomainError):
            QueerSpace(K11, SuperMap.build(K11, K11, 1, {(0, 1): 1, (1, 0): 2}))

    def test_empty_queer_space(self):
        with pytest.raises(DomainError):
            random_queer_space(0)

    def test_half_tensor_has_half_the_dimension(self):
        U, V = random_queer_space(1, 1), random_queer_space(2, 2)
        E, incl = half_tensor(U, V)
        assert 2 * E.dim == U.space.dim * V.space.dim
        assert incl.target.dim == 8

    def test_tensor_of_plain_and_queer_is_queer(self):
        U = random_queer_space(1, 4)
        X = queer_tensor(SuperSpace(1, 0), U)
        assert isinstance(X, QueerSpace)
        assert space_of(X).dim == 2

    def test_morphisms_preserve_degree(self):
        with pytest.raises(DomainError):
            random_queer_morphism(SuperSpace(1, 1), random_queer_space(1), 0, random.Random(0))


class TestTrials:
    def test_seeded_trials_pass(self):
        recs = trial_checks(4, seed=0, max_dim=2)
        assert len(recs) == 6
        assert all(r.ok for r in recs), [r for r in recs if not r.ok]


class TestInstance:
    def test_axiom_suite_passes_with_morphisms(self):
        recs = instance_checks(seed=0)
        assert [r.id for r in recs] == [
            "queer.instance.pentagon", "queer.instance.triangle", "queer.instance.naturality",
            "queer.instance.H1", "queer.instance.H2", "queer.instance.symmetry", "queer.instance.mutations",
        ]
        assert all(r.ok for r in recs), [r for r in recs if not r.ok]
