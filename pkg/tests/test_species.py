import random

import pytest

from modules.axioms import check_symmetry
from modules.scalars import DomainError
from modules.species import (
    basic_spin_srep,
    beta_star,
    induce_product,
    make_srep,
    printed_type2,
    random_srep_morphism,
    regular_srep,
    sergeev_commutant_check,
    shuffles,
    species_checks,
    species_instance,
    srep_checks,
    srep_morphism_check,
    srep_relations,
    symmetry_map_checks,
)
from modules.supervec import SuperSpace, identity


def _bad(recs):
    return [r for r in recs if not r.ok]


class TestSReps:
    def test_regular_and_basic_reps_are_valid(self):
        assert not _bad(srep_checks(3))

    def test_basic_spin_rep_space(self):
        assert basic_spin_srep(3).space == SuperSpace(2, 2)

    def test_wrong_generator_count(self):
        with pytest.raises(DomainError):
            make_srep(3, SuperSpace(1, 1), [])

    def test_even_generator_is_rejected(self):
        V = SuperSpace(1, 1)
        assert srep_relations(2, V, [identity(V)]) == "s~_1 acts evenly"

    @pytest.mark.parametrize("parity", [0, 1])
    def test_averaged_morphisms_commute_with_the_action(self, parity):
        R = regular_srep(2)
        f = random_srep_morphism(R, R, parity, random.Random(parity))
        assert srep_morphism_check(f, R, R)


class TestInduction:
    def test_shuffles(self):
        assert shuffles(1, 2) == [(0, 1, 2), (1, 0, 2), (2, 0, 1)]
        assert len(shuffles(2, 2)) == 6

    @pytest.mark.parametrize("i,j", [(1, 1), (1, 2), (2, 1)])
    def test_induced_dimension_and_relations(self, i, j):
        V, W = regular_srep(i), regular_srep(j)
        P = induce_product(V, W)
        assert P.n == i + j
        assert P.space.dim == len(shuffles(i, j)) * V.space.dim * W.space.dim
        assert srep_relations(P.n, P.space, P.gen_actions) is None


class TestSpeciesInstance:
    def test_needs_four_to_divide_q(self):
        with pytest.raises(DomainError):
            species_instance(6)

    def test_star_braiding_is_a_supersymmetry(self):
        cat = species_instance(4, 2, 3, trials=1, seed=0)
        recs = check_symmetry(cat, beta_star(cat))
        assert recs
        assert all(r.passed for r in recs)

    @pytest.mark.parametrize("n, m", [(1, 1), (1, 2), (2, 1), (3, 1)])
    def test_printed_symmetry_has_parity_nm(self, n, m):
        f = printed_type2(basic_spin_srep(n), basic_spin_srep(m))
        assert f.parity == (n * m) % 2

    def test_converted_symmetry_matches_printed_form(self):
        cat = species_instance(4, 2, 3, trials=1, seed=0)
        rec = next(r for r in symmetry_map_checks(cat) if r.id == "species.type2.printed")
        assert rec.ok, rec.witness

    @pytest.mark.slow
    def test_small_species_suite(self):
        recs = species_checks(max_rank=2, max_total=3, trials=2, seed=0)
        assert not _bad(recs), _bad(recs)


class TestSergeev:
    @pytest.mark.parametrize("n,d", [(1, 2), (1, 3), (2, 2)])
    def test_queer_algebra_supercommutes(self, n, d):
        assert not _bad(sergeev_commutant_check(n, d))

    def test_empty_tensor_power(self):
        with pytest.raises(DomainError):
            sergeev_commutant_check(1, 0)
