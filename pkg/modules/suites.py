# suites.py - named verification suites
#
# Each suite is a list of components; a component returns CheckRecords. A
# component that raises becomes a single error record so one broken piece
# never hides the rest of the report.
import logging
import random
import time
from itertools import product
from math import comb
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import spin_group as sg
from .axioms import braid_action, full_suite, mutation_sweep, stilde_braiding, stilde_instance, summarize
from .clifford import (
    CliffordElement,
    all_monomials,
    appendix_iso_verify,
    check_relations,
    cl2_matrix_iso,
    cl8_matrix_iso,
    cl_mul,
    clifford_perm_conjugation,
    left_ideal_dims,
    monomial_images,
    monomial_rank,
    periodicity_data,
    spin_image,
)
from .eversion import eversion_checks
from .factor_systems import (
    BUILTIN_NAMES, binomial2_well_defined, builtin, check, coboundary, first_failure, passes, random_phi,
    relation_suite, with_parity,
)
from .qsym import qsym_checks
from .queer import instance_checks, trial_checks
from .report import ERROR, CheckRecord, SuiteReport, record
from .scalars import DomainError
from .settings import resolve
from .species import sergeev_commutant_check, species_checks
from .supervec import SuperSpace

log = logging.getLogger(__name__)

Params = Dict[str, int]
Component = Tuple[str, Callable[[Params], List[CheckRecord]]]

PARAM_RANGES = {
    "q": (2, 64),
    "max_rank": (1, 10),
    "trials": (1, 1000),
    "seed": (0, 2 ** 31 - 1),
    "max_degree": (1, 10),
}


def validate_params(params: Dict[str, Any]) -> Params:
    """Fill defaults and check ranges; raises DomainError on anything out of range."""
    unknown = set(params) - set(PARAM_RANGES)
    if unknown:
        raise DomainError(f"unknown parameters: {', '.join(sorted(unknown))}")
    out = resolve(params)
    for key, (lo, hi) in PARAM_RANGES.items():
        v = out[key]
        if not lo <= v <= hi:
            raise DomainError(f"{key} must lie in [{lo}, {hi}], got {v}")
    if out["q"] % 2:
        raise DomainError(f"q must be even, got {out['q']}")
    return out


def _by_check(records, prefix: str, anchors: Dict[str, str]) -> List[CheckRecord]:
    out = []
    for name, anchor in anchors.items():
        rows = [r for r in records if r.check == name or r.check.startswith(name + ".")]
        if rows:
            out.append(summarize(rows, f"{prefix}.{name}", anchor))
    return out


def _require_q4(q: int, what: str):
    if q % 4:
        raise DomainError(f"{what} needs 4 | q, got q={q}")


# ---- factor systems ----
BUILTIN_MODULI = (2, 4, 8, 16)
COBOUNDARY_TRIALS = 100


def _factor_builtins(p: Params) -> List[CheckRecord]:
    out = []
    for q in sorted(set(BUILTIN_MODULI) | {p["q"]}):
        for name in BUILTIN_NAMES:
            if name == "A" and q % 4:
                continue
            out += check(builtin(name, q))
    got = first_failure(with_parity(builtin("A", 4), 0))
    out.append(record("factor.q4.A-at-parity-0", "A is an odd system: at parity 0 condition 3 fails at (1,1,1,1)",
                      got == (3, (1, 1, 1, 1)), got))
    return out


def _factor_coboundaries(p: Params) -> List[CheckRecord]:
    rng = random.Random(p["seed"])
    out = []
    runs = [(4, COBOUNDARY_TRIALS)] + ([(p["q"], 3)] if p["q"] != 4 else [])
    for q, trials in runs:
        bad = None
        for t in range(trials):
            if not passes(coboundary(random_phi(q, rng), q, f"d(phi{t})")):
                bad = bad if bad is not None else t
        out.append(record(f"factor.q{q}.coboundaries", "d(phi) is an even symmetric S-factor system",
                          bad is None, bad))
    q = p["q"]
    ok = binomial2_well_defined(q) == (q % 4 == 0)
    out.append(record(f"factor.q{q}.binom2", "C(n,2) mod 2 descends to Z/q iff 4 | q", ok))
    return out


def _factor_relations(p: Params) -> List[CheckRecord]:
    return relation_suite(p["q"])


# ---- spin groups ----
def _spin_presentations(p: Params) -> List[CheckRecord]:
    out = []
    for n in range(1, p["max_rank"] + 1):
        for flavor in sg.FLAVORS:
            out += sg.check_presentation(n, flavor)
    return out


def _spin_tau(p: Params) -> List[CheckRecord]:
    top = p["max_rank"]
    out = []
    for n in range(top + 1):
        for m in range(top + 1 - n):
            got = sg.tau_symmetric_power(n, m)
            want = comb(n, 2) * comb(m, 2) % 2
            out.append(record(f"spin.tau-symmetric.n{n}.m{m}", "tau~_{m,n} tau~_{n,m} = c^{C(n,2)C(m,2)}",
                              got == want, f"c^{got}"))
    bad = None
    for n in range(top + 1):
        for m in range(top + 1 - n):
            for k in range(top + 1 - n - m):
                if not sg.check_tauj(n, m, k):
                    bad = bad or (n, m, k)
    out.append(record("spin.tauj", "j(1, tau~_{m,p}) j(tau~_{m,n}, 1) = tau~_{m,n+p}", bad is None, bad))
    return out


CLIFFORD_IMAGE_MAX_RANK = 6


def _generators_with_unit(n: int) -> List[sg.SpinGroupElement]:
    return [sg.group_identity(n), sg.central(n)] + [sg.generator(n, i) for i in range(1, n)]


def _spin_conj(p: Params) -> List[CheckRecord]:
    top = p["max_rank"]
    bad = None
    for n in range(1, top):
        for m in range(1, top + 1 - n):
            for g, h in product(_generators_with_unit(n), _generators_with_unit(m)):
                if not sg.check_spin_conj(n, m, g, h):
                    bad = bad or (n, m, str(g), str(h))
    return [record("spin.conj", "tau~ j(g,h) tau~^-1 = c^{nm|g| + nm|h| + |g||h|} j(h,g)", bad is None, bad)]


def _spin_clifford(p: Params) -> List[CheckRecord]:
    top = min(p["max_rank"], CLIFFORD_IMAGE_MAX_RANK)
    bad = next((n for n in range(1, top + 1) if not sg.clifford_image_injective(n)), None)
    return [record("spin.clifford-image.injective", "S~_n embeds in Cl_n^x", bad is None, bad)]


# ---- S~ ----
STILDE_MAX_OBJECT = 3
STILDE_MAX_TOTAL = 7
STILDE_RESCALED_TOTAL = 5

STILDE_ANCHORS = {
    "pentagon": "S~ is strict",
    "triangle": "S~ is strict",
    "naturality": "tau~ j(g,h) = c^{...} j(h,g) tau~",
    "H1": "hexagon H1 with factor w",
    "H2": "hexagon H2 with factor w",
    "symmetry": "tau~_{m,n} tau~_{n,m} = w#(n,m)",
}


def _stilde_axioms(p: Params) -> List[CheckRecord]:
    q = p["q"]
    top = min(p["max_rank"], STILDE_MAX_OBJECT)
    cat = stilde_instance(q, top, min(p["max_rank"] + 1, STILDE_MAX_TOTAL))
    small = stilde_instance(q, min(top, 2), min(p["max_rank"], STILDE_RESCALED_TOTAL))
    out = []
    if q % 4 == 0:
        out += _by_check(full_suite(cat, stilde_braiding(cat)), "stilde.A", STILDE_ANCHORS)
        out.append(mutation_sweep(small, stilde_braiding(small), "stilde.A.mutations", seed=p["seed"]))
    else:
        log.info("tau~ with factor A needs 4 | q; q=%d runs only the rescaled braiding", q)
    rescaled = stilde_braiding(small, rescale=True)
    out += _by_check(full_suite(small, rescaled), "stilde.B", STILDE_ANCHORS)
    out.append(mutation_sweep(small, rescaled, "stilde.B.mutations", seed=p["seed"]))
    return out


def _stilde_braids(p: Params) -> List[CheckRecord]:
    if p["q"] % 4:
        log.info("braid actions need 4 | q; skipped at q=%d", p["q"])
        return []
    cat = stilde_instance(p["q"], 2, 6)
    beta = stilde_braiding(cat)
    out = []
    cases = sorted({(1, 3), (1, max(min(p["max_rank"], 4), 2)), (2, 3)})
    for X, n in cases:
        _, recs = braid_action(cat, beta, X, n, cat.generators)
        out.append(summarize(recs, f"stilde.braid.X{X}.n{n}", "sigmas satisfy the relations of S~^p_n"))
    return out


# ---- Clifford algebras ----
def _clifford_spin(p: Params) -> List[CheckRecord]:
    top = min(p["max_rank"], 6)
    bad_sq, bad_far, bad_braid, bad_conj = None, None, None, None
    for n in range(2, top + 1):
        one = CliffordElement.one(n)
        s = [spin_image(n, i) for i in range(1, n)]
        for i, x in enumerate(s, start=1):
            if cl_mul(x, x) != one:
                bad_sq = bad_sq or (n, i)
            for j in range(i + 2, n):
                y = s[j - 1]
                if cl_mul(x, y) != -cl_mul(y, x):
                    bad_far = bad_far or (n, i, j)
            if i < n - 1:
                y = s[i]
                if cl_mul(cl_mul(x, y), x) != cl_mul(cl_mul(y, x), y):
                    bad_braid = bad_braid or (n, i)
            for k in range(1, n + 1):
                if not clifford_perm_conjugation(n, i, k):
                    bad_conj = bad_conj or (n, i, k)
    anchor = "s~_i -> (alpha_{i+1} - alpha_i)/2, c -> -1"
    return [
        record("clifford.spin.square", anchor, bad_sq is None, bad_sq),
        record("clifford.spin.far", anchor, bad_far is None, bad_far),
        record("clifford.spin.braid", anchor, bad_braid is None, bad_braid),
        record("clifford.spin.conjugation", "phi(s) alpha_i = (-1)^{|s|} alpha_{s^-1(i)} phi(s)",
               bad_conj is None, bad_conj),
    ]


def _clifford_monomials(p: Params) -> List[CheckRecord]:
    top = min(p["max_rank"], 5)
    bad = None
    for n in range(top + 1):
        monos = all_monomials(n)
        if len(monos) != 2 ** n:
            bad = bad or (n, len(monos))
        for x, y in product(monos, repeat=2):
            if len(cl_mul(x, y).terms) != 1:
                bad = bad or (n, str(x), str(y))
    return [record("clifford.monomials", "alpha_S alpha_T = +-2^k alpha_{S^T}, dim Cl_n = 2^n", bad is None, bad)]


def _clifford_appendix(p: Params) -> List[CheckRecord]:
    out = []
    for which in ("cliff1", "cliff2", "cliff3"):
        out += appendix_iso_verify(which)
    return out


# ---- Bott periodicity ----
def _bott_matrices(p: Params) -> List[CheckRecord]:
    out = []
    for label, gens, expected in (("cl2", list(cl2_matrix_iso()), 4), ("cl8", cl8_matrix_iso(), 256)):
        bad = next((name for name, ok in check_relations(gens) if not ok), None)
        out.append(record(f"bott.{label}.relations", "alpha_i^2 = 2, alpha_i alpha_j = -alpha_j alpha_i",
                          bad is None, bad))
        r = monomial_rank(monomial_images(gens))
        out.append(record(f"bott.{label}.bijective", f"{label} = End(k^{{n|n}})", r == expected,
                          f"rank {r} of {expected}"))
    return out


def _bott_idempotents(p: Params) -> List[CheckRecord]:
    out = []
    for period, dims in ((2, SuperSpace(1, 1)), (8, SuperSpace(8, 8))):
        data = periodicity_data(period)
        eps = data.idempotent_eps
        ok = eps.parity() == 0 and cl_mul(eps, eps) == eps
        out.append(record(f"bott.eps{period}.idempotent", "eps_p even with eps_p^2 = eps_p", ok, str(eps)))
        got = left_ideal_dims(eps)
        out.append(record(f"bott.eps{period}.ideal", f"eps_p Cl_p has dimension {dims}", got == dims, str(got)))
    return out


# ---- Hecke-Clifford ----
HECKE_MAX_RANK = 4


def _hecke(p: Params) -> List[CheckRecord]:
    out = []
    for n in range(1, min(p["max_rank"], HECKE_MAX_RANK) + 1):
        out += sg.hecke_checks(n)
    top = p["max_rank"]
    for m in range(1, top):
        for n in range(1, top + 1 - m):
            out.append(sg.tau_factorization(m, n))
    return out


# ---- the rest ----
def _queer(p: Params) -> List[CheckRecord]:
    return trial_checks(p["trials"], p["seed"])


def _queer_instance(p: Params) -> List[CheckRecord]:
    return instance_checks(p["seed"])


def _species(p: Params) -> List[CheckRecord]:
    _require_q4(p["q"], "the species braiding")
    top = min(p["max_rank"], 3)
    return species_checks(top, min(top + 2, 5), min(p["trials"], 4), p["seed"], p["q"])


def _eversion(p: Params) -> List[CheckRecord]:
    _require_q4(p["q"], "Clifford eversion")
    return eversion_checks(min(p["trials"], 6), p["seed"], p["q"])


def _sergeev(p: Params) -> List[CheckRecord]:
    out = []
    for n in range(1, min(p["max_rank"], 2) + 1):
        for d in range(1, min(p["max_rank"], 3) + 1):
            out += sergeev_commutant_check(n, d)
    return out


def _qsym(p: Params) -> List[CheckRecord]:
    return qsym_checks(p["max_degree"], p["seed"])


SUITES: Dict[str, List[Component]] = {
    "factor-systems": [("builtins", _factor_builtins), ("coboundaries", _factor_coboundaries),
                       ("relations", _factor_relations)],
    "spin": [("presentations", _spin_presentations), ("tau", _spin_tau), ("conj", _spin_conj),
             ("clifford", _spin_clifford)],
    "stilde": [("axioms", _stilde_axioms), ("braids", _stilde_braids)],
    "clifford": [("spin", _clifford_spin), ("monomials", _clifford_monomials), ("appendix", _clifford_appendix)],
    "bott": [("matrices", _bott_matrices), ("idempotents", _bott_idempotents)],
    "hecke": [("hecke", _hecke)],
    "queer": [("trials", _queer), ("instance", _queer_instance)],
    "species": [("species", _species)],
    "eversion": [("eversion", _eversion)],
    "sergeev": [("commutant", _sergeev)],
    "qsym": [("qsym", _qsym)],
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def _run_component(suite: str, name: str, fn, params: Params) -> List[CheckRecord]:
    start = time.perf_counter()
    try:
        recs = fn(params)
    except Exception as e:
        log.exception("component %s.%s raised", suite, name)
        recs = [CheckRecord(f"{suite}.{name}", "component ran to completion", ERROR, f"{type(e).__name__}: {e}")]
    millis = int((time.perf_counter() - start) * 1000)
    share = millis // max(len(recs), 1)
    for r in recs:
        r.millis = share
        log.debug("%s %s %s", r.status, r.id, r.witness or "")
    return recs


def run_suite(name: str, params: Optional[Dict[str, Any]] = None) -> SuiteReport:
    """Run a named suite; DomainError for unknown names or bad parameters."""
    if name not in SUITE_NAMES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    resolved = validate_params(dict(params or {}))
    names: Sequence[str] = tuple(SUITES) if name == "all" else (name,)
    report = SuiteReport(name, resolved)
    for suite in names:
        for comp, fn in SUITES[suite]:
            report.checks.extend(_run_component(suite, comp, fn, resolved))
    log.info("suite %s: %s, %d passed, %d failed, %d ms",
             name, report.status, report.passed, report.failed, report.millis)
    return report
