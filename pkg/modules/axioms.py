# axioms.py - coherence checks for concrete monoidal Z/q-supercategories
#
# An instance realises every object as a SuperSpace and every morphism as a
# homogeneous SuperMap, so each axiom becomes an exact matrix identity.
# Associators run A (x) (B (x) C) -> (A (x) B) (x) C.
import logging
import random
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import spin_group as sg
from .factor_systems import FactorSystem, a_prime_function, builtin, type12_factor
from .report import AxiomRecord, CheckRecord, record
from .scalars import ONE, CycNumber, DomainError, as_cyc, sign
from .supervec import (
    K, SuperMap, SuperSpace, compose_all, identity, inverse_map, pi_power_space,
    random_map, reassociate, symmetry, tensor_map, tensor_space, xi_power,
)

log = logging.getLogger(__name__)

KINDS = ("ordinary", "typeI", "typeII")


# ---- morphisms ----
@dataclass(frozen=True, eq=False)
class Mor:
    source: Any
    target: Any
    map: SuperMap
    label: str = ""

    @property
    def parity(self) -> int:
        return self.map.parity

    def scale(self, c) -> "Mor":
        return Mor(self.source, self.target, self.map.scale(c), self.label)


def mor_compose(*mors: Mor) -> Mor:
    """mor_compose(h, g, f) == h o g o f."""
    return Mor(mors[-1].source, mors[0].target, compose_all(*(m.map for m in mors)))


# ---- instances ----
class CatInstance:
    """A finite window onto a monoidal Z/q-supercategory.

    Subclasses provide degree, space and tensor_obj; strict instances get
    identity associators for free, others override associator().
    """

    name = "instance"
    strict = False
    has_pi = False

    def __init__(self, q: int, objects: Sequence, unit, generators: Sequence[Mor] = ()):
        self.q = q
        self.objects = list(objects)
        self.unit = unit
        self.generators = list(generators)

    # ---- objects ----
    def degree(self, X) -> int:
        raise NotImplementedError

    def space(self, X) -> SuperSpace:
        raise NotImplementedError

    def tensor_obj(self, X, Y):
        raise NotImplementedError

    def label(self, X) -> str:
        return str(X)

    def tuples(self, k: int) -> List[tuple]:
        return list(product(self.objects, repeat=k))

    # ---- morphisms ----
    def identity(self, X) -> Mor:
        return Mor(X, X, identity(self.space(X)), "1")

    def tensor(self, f: Mor, g: Mor) -> Mor:
        return Mor(self.tensor_obj(f.source, g.source), self.tensor_obj(f.target, g.target),
                   tensor_map(f.map, g.map))

    def associator(self, X, Y, Z) -> Mor:
        if not self.strict:
            raise NotImplementedError(f"{self.name} must define its associator")
        src = self.tensor_obj(X, self.tensor_obj(Y, Z))
        tgt = self.tensor_obj(self.tensor_obj(X, Y), Z)
        return Mor(src, tgt, identity(self.space(src)))

    def associator_inverse(self, X, Y, Z) -> Mor:
        a = self.associator(X, Y, Z)
        if self.strict:
            return Mor(a.target, a.source, a.map)
        return Mor(a.target, a.source, inverse_map(a.map))

    def left_unitor(self, X) -> Mor:
        return self._unit_iso(self.tensor_obj(self.unit, X), X)

    def right_unitor(self, X) -> Mor:
        return self._unit_iso(self.tensor_obj(X, self.unit), X)

    def _unit_iso(self, src, X) -> Mor:
        if self.space(src) != self.space(X):
            raise DomainError(f"{self.name}: unit tensor changes the space of {self.label(X)}")
        return Mor(src, X, identity(self.space(X)))

    # ---- Pi-structure ----
    def pi(self, X, k: int):
        raise DomainError(f"{self.name} has no Pi-structure")

    def xi(self, X, n: int, m: int) -> Mor:
        """xi^{n,m}_X: Pi^n(X) -> Pi^m(X)."""
        raise DomainError(f"{self.name} has no Pi-structure")


def pi_mor(cat: CatInstance, g: Mor, k: int) -> Mor:
    """Pi^k(g) = (-1)^{k|g|} xi^{0,k} g xi^{k,0}."""
    if k == 0:
        return g
    out = mor_compose(cat.xi(g.target, 0, k), g, cat.xi(g.source, k, 0))
    return out.scale(sign(k * g.parity))


# ---- braidings ----
@dataclass
class BraidingData:
    kind: str
    beta: Callable[[Any, Any], Mor]
    factor: FactorSystem
    name: str = "beta"
    _cache: Dict[tuple, Mor] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown braiding kind {self.kind!r}")

    def __call__(self, A, B) -> Mor:
        try:
            key = (A, B)
            hash(key)
        except TypeError:
            return self.beta(A, B)
        if key not in self._cache:
            self._cache[key] = self.beta(A, B)
        return self._cache[key]

    @property
    def symmetric(self) -> bool:
        return self.factor.ws is not None


def corrupt_braiding(beta: BraidingData, pair: tuple, seed: int = 0) -> BraidingData:
    """A copy of beta with one sign flipped in beta_{pair}."""
    rng = random.Random(seed)
    target = beta(*pair)
    if not target.map.entries:
        raise DomainError(f"beta_{pair} has no entries to corrupt")
    key = rng.choice(sorted(target.map.entries))
    entries = dict(target.map.entries)
    entries[key] = -entries[key]
    bad = Mor(target.source, target.target,
              SuperMap.build(target.map.source, target.map.target, target.map.parity, entries))

    def corrupted(A, B):
        if (A, B) == tuple(pair):
            return bad
        return beta(A, B)

    return BraidingData(beta.kind, corrupted, beta.factor, f"{beta.name}~{key}")


# ---- comparison ----
def _compare(cat: CatInstance, check: str, objs: tuple, lhs: SuperMap, rhs: SuperMap,
             expected=ONE) -> AxiomRecord:
    """lhs == expected * rhs."""
    expected = as_cyc(expected)
    tup = tuple(cat.label(x) if not isinstance(x, str) else x for x in objs)
    if lhs.is_zero() and rhs.is_zero():
        return AxiomRecord(cat.name, check, tup, str(expected), str(expected), True)
    ratio = lhs.ratio_to(rhs)
    got = "not proportional" if ratio is None else str(ratio)
    ok = ratio is not None and ratio == expected
    if not ok:
        log.debug("%s %s %s: expected %s got %s", cat.name, check, tup, expected, got)
    return AxiomRecord(cat.name, check, tup, str(expected), got, ok)


def summarize(records: Iterable[AxiomRecord], check_id: str, anchor: str) -> CheckRecord:
    records = list(records)
    bad = next((r for r in records if not r.passed), None)
    witness = None
    if bad is not None:
        witness = f"{bad.check}{tuple(bad.tuple)} expected {bad.expected_scalar} got {bad.got}"
    return record(check_id, anchor, bad is None, witness)


# ---- monoidal axioms ----
def check_pentagon(cat: CatInstance, quadruples: Optional[Iterable[tuple]] = None) -> List[AxiomRecord]:
    out = []
    for A, B, C, D in (quadruples if quadruples is not None else cat.tuples(4)):
        t = cat.tensor_obj
        lhs = mor_compose(cat.associator(t(A, B), C, D), cat.associator(A, B, t(C, D)))
        rhs = mor_compose(
            cat.tensor(cat.associator(A, B, C), cat.identity(D)),
            cat.associator(A, t(B, C), D),
            cat.tensor(cat.identity(A), cat.associator(B, C, D)),
        )
        out.append(_compare(cat, "pentagon", (A, B, C, D), lhs.map, rhs.map))
    return out


def check_triangle(cat: CatInstance, pairs: Optional[Iterable[tuple]] = None) -> List[AxiomRecord]:
    out = []
    for A, B in (pairs if pairs is not None else cat.tuples(2)):
        lhs = mor_compose(cat.tensor(cat.right_unitor(A), cat.identity(B)), cat.associator(A, cat.unit, B))
        rhs = cat.tensor(cat.identity(A), cat.left_unitor(B))
        out.append(_compare(cat, "triangle", (A, B), lhs.map, rhs.map))
    return out


# ---- braiding axioms ----
def naturality_sign(kind: str, a: int, b: int, f: int, g: int) -> CycNumber:
    if kind == "typeII":
        return sign(a * b * (f + g) + f * g)
    return sign(f * g)


def check_naturality(cat: CatInstance, beta: BraidingData,
                     generators: Optional[Sequence[Mor]] = None) -> List[AxiomRecord]:
    """beta_{A',B'} (f (x) g) against (g (x) f) beta_{A,B} on generator pairs."""
    gens = list(generators if generators is not None else cat.generators)
    out = []
    for f, g in product(gens, repeat=2):
        a, b = cat.degree(f.source), cat.degree(g.source)
        lhs = mor_compose(beta(f.target, g.target), cat.tensor(f, g))
        if beta.kind == "typeI":
            g_side = pi_mor(cat, g, a * b)
        else:
            g_side = g
        rhs = mor_compose(cat.tensor(g_side, f), beta(f.source, g.source))
        expected = naturality_sign(beta.kind, a, b, f.parity, g.parity)
        out.append(_compare(cat, "naturality", (f.label or "f", g.label or "g"), lhs.map, rhs.map, expected))
    return out


def _h1_type2(cat, beta, A, B, C) -> Tuple[Mor, Mor]:
    t = cat.tensor_obj
    top = mor_compose(cat.associator_inverse(B, C, A), beta(A, t(B, C)), cat.associator_inverse(A, B, C))
    bottom = mor_compose(
        cat.tensor(cat.identity(B), beta(A, C)),
        cat.associator_inverse(B, A, C),
        cat.tensor(beta(A, B), cat.identity(C)),
    )
    return top, bottom


def _h2_type2(cat, beta, A, B, C) -> Tuple[Mor, Mor]:
    t = cat.tensor_obj
    top = mor_compose(cat.associator(C, A, B), beta(t(A, B), C), cat.associator(A, B, C))
    bottom = mor_compose(
        cat.tensor(beta(A, C), cat.identity(B)),
        cat.associator(A, C, B),
        cat.tensor(cat.identity(A), beta(B, C)),
    )
    return top, bottom


def _h1_type1(cat, beta, A, B, C) -> Tuple[Mor, Mor]:
    t = cat.tensor_obj
    a, b, c = cat.degree(A), cat.degree(B), cat.degree(C)
    k1, k2 = a * b, a * c
    k = k1 + k2
    BC = t(B, C)
    # Pi^k(B (x) C) -> Pi^k(B) (x) C
    split = mor_compose(cat.tensor(cat.xi(B, 0, k), cat.identity(C)), cat.xi(BC, k, 0))
    top = mor_compose(
        cat.associator_inverse(cat.pi(B, k), C, A),
        cat.tensor(split, cat.identity(A)),
        beta(A, BC),
        cat.associator_inverse(A, B, C),
    )
    psi2 = cat.tensor(cat.xi(B, k1, k), cat.tensor(cat.xi(C, k2, 0), cat.identity(A)))
    bottom = mor_compose(
        psi2,
        cat.tensor(cat.identity(cat.pi(B, k1)), beta(A, C)),
        cat.associator_inverse(cat.pi(B, k1), A, C),
        cat.tensor(beta(A, B), cat.identity(C)),
    )
    return top, bottom


def _h2_type1(cat, beta, A, B, C) -> Tuple[Mor, Mor]:
    t = cat.tensor_obj
    a, b, c = cat.degree(A), cat.degree(B), cat.degree(C)
    ka, kb = a * c, b * c
    top = mor_compose(cat.associator(cat.pi(C, ka + kb), A, B), beta(t(A, B), C), cat.associator(A, B, C))
    piC = cat.pi(C, kb)
    bottom = mor_compose(
        cat.tensor(beta(A, piC), cat.identity(B)),
        cat.associator(A, piC, B),
        cat.tensor(cat.identity(A), beta(B, C)),
    )
    return top, bottom


_HEXAGONS = {
    ("H1", "typeII"): _h1_type2, ("H2", "typeII"): _h2_type2,
    ("H1", "ordinary"): _h1_type2, ("H2", "ordinary"): _h2_type2,
    ("H1", "typeI"): _h1_type1, ("H2", "typeI"): _h2_type1,
}


def hexagon_paths(cat: CatInstance, beta: BraidingData, which: str, A, B, C) -> Tuple[Mor, Mor]:
    return _HEXAGONS[(which, beta.kind)](cat, beta, A, B, C)


def check_hexagons(cat: CatInstance, beta: BraidingData, which: Sequence[str] = ("H1", "H2"),
                   triples: Optional[Iterable[tuple]] = None) -> List[AxiomRecord]:
    """bottom == w1(|A|;|B|,|C|) top for H1 and bottom == w2(|A|,|B|;|C|) top for H2."""
    triples = list(triples if triples is not None else cat.tuples(3))
    out = []
    for h in which:
        for A, B, C in triples:
            a, b, c = cat.degree(A), cat.degree(B), cat.degree(C)
            top, bottom = hexagon_paths(cat, beta, h, A, B, C)
            if h == "H1":
                expected = beta.factor.omega1(a, b, c)
            else:
                expected = beta.factor.omega2(a, b, c)
            out.append(_compare(cat, h, (A, B, C), bottom.map, top.map, expected))
    return out


def hexagon_ratios(cat: CatInstance, beta: BraidingData, which: str,
                   triples: Optional[Iterable[tuple]] = None) -> Dict[tuple, Optional[CycNumber]]:
    """Observed bottom/top scalars keyed by degree triple; None marks a non-scalar or inconsistent triple."""
    seen: Dict[tuple, Optional[CycNumber]] = {}
    for A, B, C in (triples if triples is not None else cat.tuples(3)):
        top, bottom = hexagon_paths(cat, beta, which, A, B, C)
        if top.map.is_zero() and bottom.map.is_zero():
            continue
        key = (cat.degree(A), cat.degree(B), cat.degree(C))
        r = bottom.map.ratio_to(top.map)
        if key in seen and seen[key] != r:
            r = None
        seen[key] = r
    return seen


def check_symmetry(cat: CatInstance, beta: BraidingData,
                   pairs: Optional[Iterable[tuple]] = None) -> List[AxiomRecord]:
    if not beta.symmetric:
        raise DomainError(f"{beta.name} carries no symmetry component")
    out = []
    for A, B in (pairs if pairs is not None else cat.tuples(2)):
        a, b = cat.degree(A), cat.degree(B)
        expected = beta.factor.omega_sharp(a, b)
        if beta.kind == "typeI":
            k = a * b
            lhs = mor_compose(beta(cat.pi(B, k), A), beta(A, B))
            rhs = cat.tensor(cat.xi(A, 0, k), cat.xi(B, 0, k))
        else:
            lhs = mor_compose(beta(B, A), beta(A, B))
            rhs = cat.identity(cat.tensor_obj(A, B))
        out.append(_compare(cat, "symmetry", (A, B), lhs.map, rhs.map, expected))
    return out


def braiding_suite(cat: CatInstance, beta: BraidingData, which: Sequence[str] = ("H1", "H2"),
                   symmetric: bool = True) -> List[AxiomRecord]:
    """The checks that depend on beta: naturality, hexagons and the symmetry."""
    out = check_naturality(cat, beta) + check_hexagons(cat, beta, which)
    if symmetric and beta.symmetric:
        out += check_symmetry(cat, beta)
    return out


def full_suite(cat: CatInstance, beta: BraidingData, which: Sequence[str] = ("H1", "H2"),
               symmetric: bool = True) -> List[AxiomRecord]:
    return check_pentagon(cat) + check_triangle(cat) + braiding_suite(cat, beta, which, symmetric)


def mutation_sweep(cat: CatInstance, beta: BraidingData, check_id: str, mutations: int = 20, seed: int = 0,
                   which: Sequence[str] = ("H1", "H2")) -> CheckRecord:
    """Flip one sign of beta per seeded mutation; every mutant must fail some check."""
    rng = random.Random(seed)
    pairs = [t for t in cat.tuples(2) if beta(*t).map.entries]
    if not pairs:
        raise DomainError(f"{beta.name} has no entries to mutate on {cat.name}")
    missed = None
    for k in range(mutations):
        pair = pairs[rng.randrange(len(pairs))]
        bad = corrupt_braiding(beta, pair, rng.randrange(1 << 30))
        if all(r.passed for r in braiding_suite(cat, bad, which)):
            log.warning("mutation %s of %s went undetected", bad.name, beta.name)
            missed = missed or (k, tuple(cat.label(x) for x in pair), bad.name)
    return record(check_id, "a single flipped sign in beta fails some axiom", missed is None, missed)


# ---- type conversion ----
def _require_pi(cat: CatInstance):
    if not cat.has_pi:
        raise DomainError(f"{cat.name} does not admit a Pi-structure")


def convert_II_to_I(cat: CatInstance, beta: BraidingData) -> BraidingData:
    """beta'_{A,B} = (xi^{0,|A||B|}_B (x) 1_A) beta_{A,B}."""
    _require_pi(cat)
    if beta.kind != "typeII":
        raise DomainError(f"{beta.name} is not a type II braiding")

    def converted(A, B):
        k = cat.degree(A) * cat.degree(B)
        if k == 0:
            return beta(A, B)
        return mor_compose(cat.tensor(cat.xi(B, 0, k), cat.identity(A)), beta(A, B))

    return BraidingData("typeI", converted, type12_factor(beta.factor, beta.symmetric), f"{beta.name}'")


def convert_I_to_II(cat: CatInstance, beta: BraidingData) -> BraidingData:
    """beta_{A,B} = (xi^{|A||B|,0}_B (x) 1_A) beta'_{A,B}."""
    _require_pi(cat)
    if beta.kind != "typeI":
        raise DomainError(f"{beta.name} is not a type I braiding")

    def converted(A, B):
        k = cat.degree(A) * cat.degree(B)
        if k == 0:
            return beta(A, B)
        return mor_compose(cat.tensor(cat.xi(B, k, 0), cat.identity(A)), beta(A, B))

    # C and D take values +-1, so multiplying by them again undoes the conversion
    return BraidingData("typeII", converted, type12_factor(beta.factor, beta.symmetric), f"{beta.name}''")


# ---- braid group actions ----
def tensor_power(cat: CatInstance, X, n: int):
    out = cat.unit
    for _ in range(n):
        out = cat.tensor_obj(out, X)
    return out


def _tensor_power_mor(cat: CatInstance, f: Mor, n: int) -> Mor:
    out = cat.identity(cat.unit)
    for _ in range(n):
        out = cat.tensor(out, f)
    return out


def braid_action(cat: CatInstance, beta: BraidingData, X, n: int,
                 generators: Sequence[Mor] = ()) -> Tuple[List[SuperMap], List[AxiomRecord]]:
    """sigma_i = 1 (x) beta_{X,X} (x) 1 on X^{(x)n} and the relations they satisfy.

    sigma_i^2 = (-1)^{p(p-1)/2}, far sigmas commute up to (-1)^p, and the braid
    relation holds with no sign, so the sigmas realise S~^p_n.
    """
    if not cat.strict:
        raise DomainError("braid actions are built on strict instances")
    if beta.kind != "typeII" or not beta.symmetric:
        raise DomainError("braid actions need a type II supersymmetry")
    if cat.q % 4:
        raise DomainError(f"braid actions need 4 | q, got q={cat.q}")
    if n < 2:
        raise DomainError("braid actions need n >= 2")
    p = cat.degree(X)
    bxx = beta(X, X)
    sigmas = []
    for i in range(1, n):
        left = cat.identity(tensor_power(cat, X, i - 1))
        right = cat.identity(tensor_power(cat, X, n - i - 1))
        sigmas.append(cat.tensor(cat.tensor(left, bxx), right).map)
    tag = f"X={cat.label(X)},n={n}"
    one = identity(cat.space(tensor_power(cat, X, n)))
    out = []
    for i, s in enumerate(sigmas, start=1):
        out.append(_compare(cat, "braid.square", (tag, f"s{i}"), compose_all(s, s), one, sign(p * (p - 1) // 2)))
        for j in range(i + 2, n):
            t = sigmas[j - 1]
            out.append(_compare(cat, "braid.far", (tag, f"s{i}", f"s{j}"),
                                compose_all(s, t), compose_all(t, s), sign(p)))
        if i < n - 1:
            t = sigmas[i]
            out.append(_compare(cat, "braid.braid", (tag, f"s{i}"),
                                compose_all(s, t, s), compose_all(t, s, t)))
    for f in generators:
        if cat.degree(f.source) != p:
            continue
        fn = _tensor_power_mor(cat, f, n).map
        tgt = beta(f.target, f.target)
        for i in range(1, n):
            left = cat.identity(tensor_power(cat, f.target, i - 1))
            right = cat.identity(tensor_power(cat, f.target, n - i - 1))
            s_y = cat.tensor(cat.tensor(left, tgt), right).map
            out.append(_compare(cat, "braid.natural", (tag, f.label or "f", f"s{i}"),
                                compose_all(s_y, fn), compose_all(fn, sigmas[i - 1]), sign(f.parity)))
    return sigmas, out


# ---- super vector spaces with tau ----
@dataclass(frozen=True)
class SVecObject:
    base: SuperSpace
    degree: int = 0
    shift: int = 0

    @property
    def space(self) -> SuperSpace:
        return pi_power_space(self.base, self.shift)

    def __str__(self):
        pi = f"Pi^{self.shift}" if self.shift else ""
        return f"{pi}{self.base}[{self.degree}]"


class SVecInstance(CatInstance):
    """Z/q-graded super vector spaces with the Koszul swap and the Pi-structure of xi_power."""

    name = "svec"
    has_pi = True

    def __init__(self, q: int, objects: Sequence[SVecObject], generators: Sequence[Mor] = (),
                 pi_structure: str = "neutral"):
        super().__init__(q, objects, SVecObject(K, 0, 0), generators)
        self.pi_structure = pi_structure

    def degree(self, X: SVecObject) -> int:
        return X.degree

    def space(self, X: SVecObject) -> SuperSpace:
        return X.space

    def tensor_obj(self, X: SVecObject, Y: SVecObject) -> SVecObject:
        d = X.degree + Y.degree
        return SVecObject(tensor_space(X.space, Y.space)[0], d % self.q if self.q else d, 0)

    def associator(self, X, Y, Z) -> Mor:
        t = self.tensor_obj
        return Mor(t(X, t(Y, Z)), t(t(X, Y), Z), reassociate(X.space, Y.space, Z.space))

    def pi(self, X: SVecObject, k: int) -> SVecObject:
        return replace(X, shift=X.shift + k)

    def xi(self, X: SVecObject, n: int, m: int) -> Mor:
        f = xi_power(X.shift + n, X.shift + m, X.base, self.pi_structure)
        return Mor(self.pi(X, n), self.pi(X, m), f)


def tau_braiding(cat: CatInstance, q: Optional[int] = None) -> BraidingData:
    def tau(A, B):
        return Mor(cat.tensor_obj(A, B), cat.tensor_obj(B, A), symmetry("tau", cat.space(A), cat.space(B)))

    return BraidingData("ordinary", tau, builtin("trivial", q if q is not None else cat.q), "tau")


def svec_instance(q: int, objects: Sequence[SVecObject], trials: int = 0, seed: int = 0) -> SVecInstance:
    """SVec with seeded random homogeneous endomorphisms as generating morphisms."""
    rng = random.Random(seed)
    gens = []
    for t in range(trials):
        X = objects[rng.randrange(len(objects))]
        Ys = [Y for Y in objects if Y.degree == X.degree]
        Y = Ys[rng.randrange(len(Ys))]
        par = rng.randrange(2)
        gens.append(Mor(X, Y, random_map(X.space, Y.space, par, rng), f"g{t}"))
    return SVecInstance(q, objects, gens)


# ---- the category S~ ----
class STildeInstance(CatInstance):
    """Objects [n] with End([n]) = k[S~_n]/(c+1), realised on regular representations.

    [n] (x) [m] = [n+m] and x (x) y = j_{n,m}(x, y); the structure is strict.
    """

    name = "stilde"
    strict = True

    def __init__(self, q: int, max_rank: int, max_total: Optional[int] = None):
        gens = []
        for n in range(2, max_rank + 1):
            for i in range(1, n):
                x = sg.TgaElement.of(sg.generator(n, i))
                gens.append(Mor(n, n, sg.left_multiplication(x), f"s{i}[{n}]"))
        super().__init__(q, list(range(max_rank + 1)), 0, gens)
        self.max_total = max_total if max_total is not None else max_rank

    def degree(self, X: int) -> int:
        return X

    def space(self, X: int) -> SuperSpace:
        return sg.regular_basis(X)[0]

    def tensor_obj(self, X: int, Y: int) -> int:
        return X + Y

    def label(self, X) -> str:
        return f"[{X}]"

    def tuples(self, k: int) -> List[tuple]:
        return [t for t in product(self.objects, repeat=k) if sum(t) <= self.max_total]

    def tensor(self, f: Mor, g: Mor) -> Mor:
        n, m = f.source, g.source
        if f.target != n or g.target != m:
            raise DomainError("S~ has no morphisms between different ranks")
        x = sg.element_of(f.map, n)
        y = sg.element_of(g.map, m)
        z = sg.tga_embed(n, m, x, y)
        return Mor(n + m, n + m, sg.left_multiplication(z) if z.terms else
                   SuperMap(self.space(n + m), self.space(n + m), (f.parity + g.parity) % 2, {}))


def stilde_instance(q: int = 8, max_rank: int = 4, max_total: Optional[int] = None) -> STildeInstance:
    return STildeInstance(q, max_rank, max_total)


def stilde_braiding(cat: STildeInstance, rescale: bool = False) -> BraidingData:
    """tau~_{n,m} with factor A, or a'(n,m) tau~_{n,m} with factor B."""

    def beta(n, m):
        f = sg.left_multiplication(sg.TgaElement.of(sg.tau_tilde(n, m)))
        if rescale:
            f = f.scale(a_prime_function(n, m))
        return Mor(n + m, m + n, f, f"beta[{n},{m}]")

    if rescale:
        return BraidingData("typeII", beta, builtin("B", cat.q), "a'*tau~")
    return BraidingData("typeII", beta, builtin("A", cat.q), "tau~")
