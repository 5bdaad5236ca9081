import random

import pytest

from modules.axioms import (
    SVecObject,
    braid_action,
    braiding_suite,
    check_pentagon,
    check_triangle,
    corrupt_braiding,
    full_suite,
    mutation_sweep,
    stilde_braiding,
    stilde_instance,
    svec_instance,
    tau_braiding,
)
from modules.scalars import DomainError, sign
from modules.supervec import K, K11, K_ODD


def _failures(records):
    return [r for r in records if not r.passed]


@pytest.fixture(scope="module")
def svec():
    objs = [SVecObject(K, 0), SVecObject(K_ODD, 1), SVecObject(K11, 2)]
    return svec_instance(4, objs, trials=3, seed=1)


@pytest.fixture(scope="module")
def stilde():
    return stilde_instance(8, 2, 3)


class TestSuperVectorSpaces:
    def test_koszul_swap_passes_every_axiom(self, svec):
        recs = full_suite(svec, tau_braiding(svec))
        assert recs
        assert not _failures(recs)

    @pytest.mark.parametrize("seed", range(20))
    def test_single_flipped_sign_fails_full_suite(self, svec, seed):
        rng = random.Random(seed)
        pair = rng.choice(svec.tuples(2))
        bad = corrupt_braiding(tau_braiding(svec), pair, seed)
        assert _failures(full_suite(svec, bad)), bad.name

    def test_fixed_point_flip_is_caught_by_hexagons(self, svec):
        # a flip on a fixed point of the K11 (x) K11 swap leaves beta^2 unchanged
        A = SVecObject(K11, 2)
        bad = corrupt_braiding(tau_braiding(svec), (A, A), seed=3)
        assert _failures(braiding_suite(svec, bad))

    def test_mutation_sweep(self, svec):
        rec = mutation_sweep(svec, tau_braiding(svec), "svec.mutations", mutations=20)
        assert rec.ok, rec.witness

    def test_braiding_suite_is_full_suite_without_coherence(self, svec):
        beta = tau_braiding(svec)
        coherence = check_pentagon(svec) + check_triangle(svec)
        assert len(full_suite(svec, beta)) == len(coherence) + len(braiding_suite(svec, beta))


class TestSpinCategory:
    def test_tau_tilde_braiding(self, stilde):
        assert not _failures(full_suite(stilde, stilde_braiding(stilde)))

    def test_rescaled_braiding(self, stilde):
        assert not _failures(full_suite(stilde, stilde_braiding(stilde, rescale=True)))

    @pytest.mark.slow
    @pytest.mark.parametrize("rescale", [False, True])
    def test_mutation_sweep(self, rescale):
        cat = stilde_instance(8, 2, 4)
        rec = mutation_sweep(cat, stilde_braiding(cat, rescale=rescale), "stilde.mutations", mutations=20)
        assert rec.ok, rec.witness

    def test_flip_on_equal_objects_fails_hexagons(self, stilde):
        bad = corrupt_braiding(stilde_braiding(stilde), (1, 1))
        assert _failures(braiding_suite(stilde, bad))

    def test_braid_relations_three_strands(self, stilde):
        sigmas, recs = braid_action(stilde, stilde_braiding(stilde), 1, 3)
        assert len(sigmas) == 2
        assert [r.check for r in recs].count("braid.braid") == 1
        assert not _failures(recs)

    @pytest.mark.slow
    def test_braid_relations_on_rank_two(self):
        cat = stilde_instance(8, 2, 6)
        _, recs = braid_action(cat, stilde_braiding(cat), 2, 3)
        squares = [r for r in recs if r.check == "braid.square"]
        assert squares and all(r.expected_scalar == str(sign(1)) for r in squares)
        assert not _failures(recs)

    def test_braid_relations_on_rank_one(self):
        cat = stilde_instance(8, 2, 4)
        sigmas, recs = braid_action(cat, stilde_braiding(cat), 1, 4, cat.generators)
        assert len(sigmas) == 3
        assert recs
        assert not _failures(recs)

    def test_braid_action_needs_two_strands(self, stilde):
        with pytest.raises(DomainError):
            braid_action(stilde, stilde_braiding(stilde), 1, 1)

    def test_braid_action_needs_a_supersymmetry(self, svec):
        with pytest.raises(DomainError):
            braid_action(svec, tau_braiding(svec), SVecObject(K, 0), 2)
