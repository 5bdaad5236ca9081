# species.py - linear spin species at small rank
#
# An s-representation of S~_n is a SuperSpace with odd actions of
# s~_1 .. s~_{n-1} satisfying the S~_n relations with c = -1. Products are
# induced along j_{i,j}; the coset representatives are the (i,j)-shuffles,
# lifted canonically and ordered lexicographically. Pi means Pi_r throughout:
# g (v (x) pi) = gv (x) pi and xi_r(v) = (-1)^{|v|} v (x) pi.
import logging
import random
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from . import spin_group as sg
from .axioms import (
    BraidingData, CatInstance, Mor, check_hexagons, check_naturality, check_pentagon,
    check_symmetry, check_triangle, convert_I_to_II, summarize,
)
from .clifford import cl2_matrix_iso
from .eversion import spin_action
from .factor_systems import builtin, c_function, d_function, rescaled
from .report import CheckRecord, record
from .scalars import CycNumber, DomainError, sign
from .supervec import (
    K, K11, SuperMap, SuperSpace, compose, compose_all, identity, is_invertible, multi_tensor,
    permute_factors, pi_index, pi_power_space, pi_space, random_map, slot_operator, tensor_map,
    tensor_space, xi_power,
)

log = logging.getLogger(__name__)

Perm = sg.Perm


# ---- s-representations ----
@dataclass(frozen=True, eq=False)
class SRep:
    n: int
    space: SuperSpace
    gen_actions: Tuple[SuperMap, ...] = ()
    name: str = "V"
    origin: Optional["InducedModule"] = field(default=None, repr=False)
    _actions: Dict[Perm, SuperMap] = field(default_factory=dict, repr=False)

    def __str__(self):
        return f"{self.name}[{self.n}]"


def srep_relations(n: int, space: SuperSpace, gens: Sequence[SuperMap]) -> Optional[str]:
    """The first violated relation of S~_n (c = -1) on the given actions, or None, of parity nm."""
    if len(gens) != max(n - 1, 0):
        return f"S~_{n} needs {max(n - 1, 0)} generator actions, got {len(gens)}"
    one = identity(space)
    for i, s in enumerate(gens, start=1):
        if s.source != space or s.target != space:
            return f"s~_{i} is not an endomorphism of {space}"
        if s.parity != 1:
            return f"s~_{i} acts evenly"
        if compose(s, s) != one:
            return f"s~_{i}^2 != 1"
        if i < len(gens):
            t = gens[i]
            if compose_all(s, t, s) != compose_all(t, s, t):
                return f"braid relation fails at s~_{i}"
        for j in range(i + 2, len(gens) + 1):
            t = gens[j - 1]
            if compose(s, t) != -compose(t, s):
                return f"s~_{i} and s~_{j} do not anticommute"
    return None


def make_srep(n: int, space: SuperSpace, gen_actions: Sequence[SuperMap], name: str = "V") -> SRep:
    bad = srep_relations(n, space, gen_actions)
    if bad is not None:
        raise DomainError(f"{name}: {bad}")
    return SRep(n, space, tuple(gen_actions), name)


def rep_action(V: SRep, g: sg.SpinGroupElement) -> SuperMap:
    """rho(g): generator actions along the canonical word, negated for c."""
    if g.n != V.n:
        raise DomainError(f"S~_{g.n} element acting on {V}")
    if g.perm not in V._actions:
        out = identity(V.space)
        for i in sg.canonical_word(g.perm):
            out = compose(out, V.gen_actions[i - 1])
        V._actions[g.perm] = out
    out = V._actions[g.perm]
    return -out if g.sign else out


@lru_cache(maxsize=None)
def regular_srep(n: int) -> SRep:
    """k[S~_n]/(c+1) acting on itself by left multiplication."""
    space = sg.regular_basis(n)[0]
    gens = tuple(sg.left_multiplication(sg.TgaElement.of(sg.generator(n, i))) for i in range(1, n))
    return SRep(n, space, gens, f"R{n}")


@lru_cache(maxsize=None)
def basic_spin_srep(n: int) -> SRep:
    """s~_i -> (alpha_{i+1} - alpha_i)/2 on the Cl_n-module (k^{1|1})^{(x) ceil(n/2)}."""
    if n == 0:
        return SRep(0, K, (), "B0")
    x, y = cl2_matrix_iso()
    slots = (n + 1) // 2
    spaces = (K11,) * slots
    alphas = []
    for s in range(slots):
        alphas += [slot_operator(spaces, s, x), slot_operator(spaces, s, y)]
    alphas = alphas[:n]
    space = alphas[0].source
    gens = [spin_action(space, alphas, sg.generator(n, i)) for i in range(1, n)]
    return make_srep(n, space, gens, f"B{n}")


def _pi_reindex(f: SuperMap) -> SuperMap:
    return SuperMap.build(pi_space(f.source), pi_space(f.target), f.parity,
                          {(pi_index(f.target, 1, r), pi_index(f.source, 1, c)): v
                           for (r, c), v in f.entries.items()})


@lru_cache(maxsize=None)
def pi_srep(V: SRep, k: int) -> SRep:
    """Pi_r^k(V); even powers share the actions of V."""
    if k % 2 == 0:
        return V
    return SRep(V.n, pi_space(V.space), tuple(_pi_reindex(s) for s in V.gen_actions), f"Pi{V.name}")


def srep_morphism_check(f: SuperMap, V: SRep, W: SRep) -> bool:
    """f(gv) = (-1)^{|f||g|} g f(v) on every generator."""
    if V.n != W.n or f.source != V.space or f.target != W.space:
        return False
    s = sign(f.parity)
    return all(compose(f, a) == compose(b, f).scale(s) for a, b in zip(V.gen_actions, W.gen_actions))


def random_srep_morphism(V: SRep, W: SRep, parity: int, rng: random.Random) -> SuperMap:
    """Group average of a random map: sum_g (-1)^{|f||g|} rho_W(g) f rho_V(g)^-1."""
    if V.n != W.n:
        raise DomainError("s-representation morphisms preserve the rank")
    f = random_map(V.space, W.space, parity, rng)
    acc = None
    for perm in permutations(range(V.n)):
        g = sg.canonical_lift(perm)
        term = compose_all(rep_action(W, g), f, rep_action(V, sg.group_inverse(g)))
        if parity and g.parity:
            term = -term
        acc = term if acc is None else acc + term
    return acc


# ---- induction ----
def shuffles(i: int, j: int) -> List[Perm]:
    """Permutations increasing on [0, i) and on [i, i+j), in lexicographic order."""
    n = i + j
    out = []
    for first in combinations(range(n), i):
        rest = tuple(x for x in range(n) if x not in first)
        out.append(tuple(first) + rest)
    return out


class InducedModule:
    """Ind_{S~_i x S~_j}^{S~_{i+j}}(V (x) W) on the basis g_k (x) v_a (x) w_b, evens first."""

    def __init__(self, left: SRep, right: SRep):
        self.left, self.right = left, right
        i, j = left.n, right.n
        self.n = i + j
        self.shuffles = shuffles(i, j)
        self.lifts = [sg.canonical_lift(w) for w in self.shuffles]
        self.coset = {frozenset(w[:i]): k for k, w in enumerate(self.shuffles)}
        self.pair_space, self.pair_index = tensor_space(left.space, right.space)
        self.pairs = {pos: ab for ab, pos in self.pair_index.items()}
        triples, parities = [], []
        for k, w in enumerate(self.shuffles):
            for pos in range(self.pair_space.dim):
                a, b = self.pairs[pos]
                triples.append((k, a, b))
                parities.append((sg.length(w) + self.pair_space.parity(pos)) % 2)
        even = [t for t, p in zip(triples, parities) if p == 0]
        odd = [t for t, p in zip(triples, parities) if p == 1]
        self.basis = even + odd
        self.position = {t: p for p, t in enumerate(self.basis)}
        self.space = SuperSpace(len(even), len(odd))
        self._sub: Dict[Tuple[Perm, Perm], SuperMap] = {}
        gens = tuple(self._generator(t) for t in range(1, self.n))
        self.rep = SRep(self.n, self.space, gens, f"({left.name}*{right.name})", origin=self)

    def decompose(self, g: sg.SpinGroupElement) -> Tuple[int, sg.SpinGroupElement, sg.SpinGroupElement, int]:
        """g = g_k c^e j(x, y)."""
        i, j = self.left.n, self.right.n
        k = self.coset[frozenset(g.perm[:i])]
        h = sg.group_mul(sg.group_inverse(self.lifts[k]), g)
        x = sg.canonical_lift(h.perm[:i])
        y = sg.canonical_lift(tuple(p - i for p in h.perm[i:]))
        e = (h.sign + sg.j_embed(i, j, x, y).sign) % 2
        return k, x, y, e

    def subgroup_action(self, x: sg.SpinGroupElement, y: sg.SpinGroupElement) -> SuperMap:
        """(x, y)(v (x) w) = (-1)^{|v||y|} xv (x) yw."""
        key = (x.perm, y.perm)
        if key not in self._sub:
            self._sub[key] = tensor_map(rep_action(self.left, x), rep_action(self.right, y))
        return self._sub[key]

    def element(self, g: sg.SpinGroupElement, pair: int) -> Dict[int, CycNumber]:
        """Coordinates of g (x) (v_a (x) w_b)."""
        k, x, y, e = self.decompose(g)
        out = {}
        for r, v in self.subgroup_action(x, y).columns().get(pair, []):
            a, b = self.pairs[r]
            out[self.position[(k, a, b)]] = -v if e else v
        return out

    def _generator(self, t: int) -> SuperMap:
        s = sg.generator(self.n, t)
        entries = {}
        for k, lift in enumerate(self.lifts):
            g = sg.group_mul(s, lift)
            for pos, (a, b) in self.pairs.items():
                col = self.position[(k, a, b)]
                for row, v in self.element(g, pos).items():
                    entries[(row, col)] = v
        return SuperMap.build(self.space, self.space, 1, entries)


@lru_cache(maxsize=None)
def induced_module(V: SRep, W: SRep) -> InducedModule:
    return InducedModule(V, W)


def induce_product(V: SRep, W: SRep) -> SRep:
    return induced_module(V, W).rep


def induce_map(f: SuperMap, g: SuperMap, src: InducedModule, tgt: InducedModule) -> SuperMap:
    """(f (x) g)(s (x) v (x) w) = (-1)^{(|f|+|g|)|s|} s (x) (f (x) g)(v (x) w)."""
    if src.shuffles != tgt.shuffles or src.left.n != tgt.left.n:
        raise DomainError("induced maps need matching ranks")
    fg = tensor_map(f, g)
    entries = {}
    for (r, c), v in fg.entries.items():
        ra, rb = tgt.pairs[r]
        ca, cb = src.pairs[c]
        for k, w in enumerate(src.shuffles):
            val = -v if fg.parity and sg.length(w) % 2 else v
            entries[(tgt.position[(k, ra, rb)], src.position[(k, ca, cb)])] = val
    return SuperMap.build(src.space, tgt.space, fg.parity, entries)


def induce_associator(U: SRep, V: SRep, W: SRep) -> SuperMap:
    """U (x) (V (x) W) -> (U (x) V) (x) W, matched on triple-shuffle coordinates.

    g (x) u (x) (h (x) v (x) w) = (-1)^{|u||h|} g j(1, h) (x) u (x) v (x) w and
    g (x) (h (x) u (x) v) (x) w = g j(h, 1) (x) u (x) v (x) w.
    """
    i, j, k = U.n, V.n, W.n
    VW = induced_module(V, W)
    UV = induced_module(U, V)
    R = induced_module(U, VW.rep)
    L = induced_module(UV.rep, W)
    flat = {}
    for pos, (K_, a, w) in enumerate(L.basis):
        k1, u, v = UV.basis[a]
        s = sg.group_mul(L.lifts[K_], sg.j_embed(i + j, k, UV.lifts[k1], sg.group_identity(k)))
        flat[(s.perm, u, v, w)] = (pos, s.sign)
    entries = {}
    for col, (K_, u, b) in enumerate(R.basis):
        k2, v, w = VW.basis[b]
        h = VW.lifts[k2]
        s = sg.group_mul(R.lifts[K_], sg.j_embed(i, j + k, sg.group_identity(i), h))
        row, e = flat[(s.perm, u, v, w)]
        entries[(row, col)] = sign(e + s.sign + U.space.parity(u) * h.parity)
    return SuperMap.build(R.space, L.space, 0, entries)


def _signed_transpose(f: SuperMap) -> SuperMap:
    """Inverse of a signed permutation matrix."""
    return SuperMap.build(f.target, f.source, f.parity, {(c, r): v for (r, c), v in f.entries.items()})


# ---- the symmetry ----
def species_symmetry(V: SRep, W: SRep) -> SuperMap:
    """g (x) v (x) w -> (-1)^{nm(|v|+|w|)+|v||w|} g tau~^{-1}_{n,m} (x) w (x) v (x) pi^{nm}."""
    src, tgt = induced_module(V, W), induced_module(W, V)
    n, m = V.n, W.n
    k = n * m
    t_inv = sg.group_inverse(sg.tau_tilde(n, m))
    entries = {}
    for col, (kk, a, b) in enumerate(src.basis):
        pv, pw = V.space.parity(a), W.space.parity(b)
        s = sign(k * (pv + pw) + pv * pw)
        g = sg.group_mul(src.lifts[kk], t_inv)
        for row, v in tgt.element(g, tgt.pair_index[(b, a)]).items():
            entries[(pi_index(tgt.space, k, row), col)] = v * s
    return SuperMap.build(src.space, pi_power_space(tgt.space, k), 0, entries)


def printed_type2(V: SRep, W: SRep) -> SuperMap:
    """g (x) v (x) w -> (-1)^{|v||w| + nm|g| + nm} g tau~^{-1}_{n,m} (x) w (x) v."""
    src, tgt = induced_module(V, W), induced_module(W, V)
    n, m = V.n, W.n
    t_inv = sg.group_inverse(sg.tau_tilde(n, m))
    entries = {}
    for col, (kk, a, b) in enumerate(src.basis):
        g = src.lifts[kk]
        s = sign(V.space.parity(a) * W.space.parity(b) + n * m * (g.parity + 1))
        for row, v in tgt.element(sg.group_mul(g, t_inv), tgt.pair_index[(b, a)]).items():
            entries[(row, col)] = v * s
    return SuperMap.build(src.space, tgt.space, (n * m) % 2, entries)


def well_defined_check(V: SRep, W: SRep) -> Optional[tuple]:
    """Evaluate the symmetry on g (x) v (x) w for every g; None or the first mismatch."""
    src, tgt = induced_module(V, W), induced_module(W, V)
    n, m = V.n, W.n
    k = n * m
    beta = species_symmetry(V, W)
    t_inv = sg.group_inverse(sg.tau_tilde(n, m))
    for perm in permutations(range(n + m)):
        g = sg.canonical_lift(perm)
        for (a, b), pos in src.pair_index.items():
            lhs = beta.apply(src.element(g, pos))
            pv, pw = V.space.parity(a), W.space.parity(b)
            s = sign(k * (pv + pw) + pv * pw)
            rhs = {pi_index(tgt.space, k, r): v * s
                   for r, v in tgt.element(sg.group_mul(g, t_inv), tgt.pair_index[(b, a)]).items()}
            if {r: v for r, v in lhs.items() if v} != rhs:
                return perm, (a, b)
    return None


# ---- the species instance ----
@dataclass(frozen=True)
class SpeciesObject:
    rep: SRep
    shift: int = 0

    def __str__(self):
        pi = f"Pi^{self.shift}" if self.shift else ""
        return f"{pi}{self.rep}"


class SpeciesInstance(CatInstance):
    """Homogeneous s-representations with the induction product and Pi_r."""

    name = "species"
    has_pi = True

    def __init__(self, q: int, objects: Sequence[SpeciesObject], generators: Sequence[Mor] = (),
                 max_total: Optional[int] = None):
        super().__init__(q, objects, SpeciesObject(regular_srep(0)), generators)
        self.max_total = max_total

    def realize(self, X: SpeciesObject) -> SRep:
        return pi_srep(X.rep, X.shift)

    def degree(self, X: SpeciesObject) -> int:
        return X.rep.n

    def space(self, X: SpeciesObject) -> SuperSpace:
        return self.realize(X).space

    def tensor_obj(self, X: SpeciesObject, Y: SpeciesObject) -> SpeciesObject:
        return SpeciesObject(induce_product(self.realize(X), self.realize(Y)))

    def tuples(self, k: int) -> List[tuple]:
        out = super().tuples(k)
        if self.max_total is None:
            return out
        return [t for t in out if sum(X.rep.n for X in t) <= self.max_total]

    def tensor(self, f: Mor, g: Mor) -> Mor:
        src = induced_module(self.realize(f.source), self.realize(g.source))
        tgt = induced_module(self.realize(f.target), self.realize(g.target))
        return Mor(self.tensor_obj(f.source, g.source), self.tensor_obj(f.target, g.target),
                   induce_map(f.map, g.map, src, tgt))

    def associator(self, X, Y, Z) -> Mor:
        t = self.tensor_obj
        f = induce_associator(self.realize(X), self.realize(Y), self.realize(Z))
        return Mor(t(X, t(Y, Z)), t(t(X, Y), Z), f)

    def associator_inverse(self, X, Y, Z) -> Mor:
        a = self.associator(X, Y, Z)
        return Mor(a.target, a.source, _signed_transpose(a.map))

    def pi(self, X: SpeciesObject, k: int) -> SpeciesObject:
        return replace(X, shift=X.shift + k)

    def xi(self, X: SpeciesObject, n: int, m: int) -> Mor:
        f = xi_power(X.shift + n, X.shift + m, X.rep.space, "right")
        return Mor(self.pi(X, n), self.pi(X, m), f)


def species_instance(q: int = 4, max_rank: int = 3, max_total: int = 5, trials: int = 4,
                     seed: int = 0) -> SpeciesInstance:
    """Regular representations of rank <= max_rank with seeded averaged morphisms of rank <= 2."""
    if q % 4:
        raise DomainError(f"the species symmetry needs 4 | q, got q={q}")
    rng = random.Random(seed)
    objects = [SpeciesObject(regular_srep(n)) for n in range(max_rank + 1)]
    small = [X for X in objects if 1 <= X.rep.n <= 2]
    gens = []
    for t in range(trials):
        X = small[rng.randrange(len(small))]
        par = rng.randrange(2) if X.rep.n == 2 else 0
        f = random_srep_morphism(X.rep, X.rep, par, rng)
        gens.append(Mor(X, X, f, f"f{t}"))
    return SpeciesInstance(q, objects, gens, max_total)


def species_braiding(cat: SpeciesInstance) -> BraidingData:
    """Type I form (xi^{0,k}_W (x) 1)(xi^{0,k}_{W (x) V})^{-1} beta_{V,W}, k = nm, factor A."""

    def beta(X, Y):
        k = cat.degree(X) * cat.degree(Y)
        raw = species_symmetry(cat.realize(X), cat.realize(Y))
        back = cat.xi(cat.tensor_obj(Y, X), k, 0)
        split = cat.tensor(cat.xi(Y, 0, k), cat.identity(X))
        return Mor(cat.tensor_obj(X, Y), split.target, compose_all(split.map, back.map, raw), f"beta[{X},{Y}]")

    return BraidingData("typeI", beta, builtin("A", cat.q), "beta")


def beta_type2(cat: SpeciesInstance) -> BraidingData:
    """The type II form through the conversion; equals c(n,m) times printed_type2."""
    return convert_I_to_II(cat, species_braiding(cat))


def beta_star(cat: SpeciesInstance) -> BraidingData:
    """d(m,n) beta, a type II supersymmetry for A."""
    two = beta_type2(cat)

    def star(X, Y):
        return two(X, Y).scale(d_function(cat.degree(X), cat.degree(Y)))

    return BraidingData("typeII", star, rescaled(two.factor, d_function), "beta*")


# ---- Sergeev duality on (k^{n|n})^{(x)d} ----
def queer_xi(n: int) -> SuperMap:
    V = SuperSpace(n, n)
    ents = {}
    for j in range(n):
        ents[(n + j, j)] = 1
        ents[(j, n + j)] = 1
    return SuperMap.build(V, V, 1, ents)


def queer_basis(n: int) -> List[SuperMap]:
    """A basis of q(n): the supercommutant of xi in gl(n|n)."""
    V = SuperSpace(n, n)
    out = []
    for a in range(n):
        for b in range(n):
            out.append(SuperMap.build(V, V, 0, {(a, b): 1, (n + a, n + b): 1}))
            out.append(SuperMap.build(V, V, 1, {(a, n + b): 1, (n + a, b): -1}))
    return out


def _trailing_slot(spaces: Sequence[SuperSpace], k: int, f: SuperMap) -> SuperMap:
    """f in slot k, signed by (-1)^{|f|(|v_{k+1}| + .. + |v_d|)}."""
    src, idx = multi_tensor(tuple(spaces))
    cols = f.columns()
    out = {}
    for combo, col in idx.items():
        later = sum(spaces[j].parity(combo[j]) for j in range(k + 1, len(spaces)))
        for r, v in cols.get(combo[k], []):
            row = idx[combo[:k] + (r,) + combo[k + 1:]]
            out[(row, col)] = -v if f.parity and later % 2 else v
    return SuperMap.build(src, src, f.parity, out)


def sergeev_commutant_check(n: int, d: int) -> List[CheckRecord]:
    """(X v) h = (-1)^{|X||h|} X (v h) for X in q(n) and generators h of the Hecke-Clifford algebra."""
    if n < 1 or d < 1:
        raise DomainError("Sergeev duality needs n, d >= 1")
    V = SuperSpace(n, n)
    spaces = (V,) * d
    xi = queer_xi(n)
    right_alpha = [_trailing_slot(spaces, i, xi) for i in range(d)]
    right_swap = []
    for i in range(d - 1):
        perm = list(range(d))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        right_swap.append(permute_factors(spaces, perm))
    bad_cl, bad_perm = None, None
    for b, X in enumerate(queer_basis(n)):
        LX = None
        for k in range(d):
            term = _trailing_slot(spaces, k, X)
            LX = term if LX is None else LX + term
        for i, h in enumerate(right_alpha, start=1):
            if compose(h, LX) != compose(LX, h).scale(sign(X.parity)):
                bad_cl = bad_cl or (b, f"alpha_{i}")
        for i, h in enumerate(right_swap, start=1):
            if compose(h, LX) != compose(LX, h):
                bad_perm = bad_perm or (b, f"s_{i}")
    anchor = "q(n) supercommutes with the Hecke-Clifford action on V^{(x)d}"
    return [
        record(f"species.sergeev.n{n}.d{d}.clifford", anchor, bad_cl is None, bad_cl),
        record(f"species.sergeev.n{n}.d{d}.perm", anchor, bad_perm is None, bad_perm),
    ]


# ---- suite ----
SPECIES_ANCHORS = {
    "pentagon": "induction product is associative",
    "triangle": "unit constraints of the induction product",
    "naturality": "beta natural up to (-1)^{|f||g|}",
    "H1": "hexagon H1' with factor A",
    "symmetry": "beta_{Pi W,V} beta_{V,W} = (-1)^{C(n,2)C(m,2)} xi (x) xi",
}


def srep_checks(max_rank: int = 4) -> List[CheckRecord]:
    out = []
    for n in range(max_rank + 1):
        R = regular_srep(n)
        bad = srep_relations(n, R.space, R.gen_actions)
        out.append(record(f"species.srep.regular.n{n}", "k[S~_n]/(c+1) is an s-representation", bad is None, bad))
        B = basic_spin_srep(n)
        bad = srep_relations(n, B.space, B.gen_actions)
        out.append(record(f"species.srep.basic.n{n}", "s~_i -> (alpha_{i+1} - alpha_i)/2", bad is None, bad))
    return out


def induction_checks(cat: SpeciesInstance) -> List[CheckRecord]:
    bad_dim, bad_rel = None, None
    for X, Y in cat.tuples(2):
        V, W = cat.realize(X), cat.realize(Y)
        P = induce_product(V, W)
        if P.space.dim != comb(V.n + W.n, V.n) * V.space.dim * W.space.dim:
            bad_dim = bad_dim or (str(X), str(Y))
        if srep_relations(P.n, P.space, P.gen_actions) is not None:
            bad_rel = bad_rel or (str(X), str(Y))
    return [
        record("species.induce.dim", "dim = C(n,i) dim V dim W", bad_dim is None, bad_dim),
        record("species.induce.relations", "induced actions satisfy the S~_n relations", bad_rel is None, bad_rel),
    ]


def symmetry_map_checks(cat: SpeciesInstance) -> List[CheckRecord]:
    bad_iso, bad_def, bad_print = None, None, None
    two = beta_type2(cat)
    for X, Y in cat.tuples(2):
        V, W = cat.realize(X), cat.realize(Y)
        b = species_symmetry(V, W)
        target = pi_srep(induce_product(W, V), V.n * W.n)
        if not (b.parity == 0 and is_invertible(b) and srep_morphism_check(b, induce_product(V, W), target)):
            bad_iso = bad_iso or (str(X), str(Y))
        if bad_def is None:
            miss = well_defined_check(V, W)
            if miss is not None:
                bad_def = (str(X), str(Y), miss)
        expected = printed_type2(V, W).scale(c_function(V.n, W.n))
        if two(X, Y).map != expected:
            bad_print = bad_print or (str(X), str(Y))
    return [
        record("species.beta.even_iso", "beta is an even isomorphism of s-representations",
               bad_iso is None, bad_iso),
        record("species.beta.well_defined", "beta respects the k[S~_n x S~_m] relation", bad_def is None, bad_def),
        record("species.type2.printed", "converted symmetry = c(m,n) g tau~^{-1} (x) w (x) v form",
               bad_print is None, bad_print),
    ]


def species_checks(max_rank: int = 3, max_total: int = 5, trials: int = 4, seed: int = 0,
                   q: int = 4) -> List[CheckRecord]:
    cat = species_instance(q, max_rank, max_total, trials, seed)
    beta = species_braiding(cat)
    out = srep_checks(max_rank)
    out += induction_checks(cat)
    out.append(summarize(check_pentagon(cat), "species.pentagon", SPECIES_ANCHORS["pentagon"]))
    out.append(summarize(check_triangle(cat), "species.triangle", SPECIES_ANCHORS["triangle"]))
    out.append(summarize(check_naturality(cat, beta), "species.naturality", SPECIES_ANCHORS["naturality"]))
    out.append(summarize(check_hexagons(cat, beta, ("H1",)), "species.H1", SPECIES_ANCHORS["H1"]))
    out.append(summarize(check_symmetry(cat, beta), "species.symmetry", SPECIES_ANCHORS["symmetry"]))
    out += symmetry_map_checks(cat)
    out.append(summarize(check_symmetry(cat, beta_type2(cat)), "species.type2.symmetry",
                         "type II form is a supersymmetry for D A"))
    out.append(summarize(check_symmetry(cat, beta_star(cat)), "species.star.symmetry",
                         "beta* beta* = (-1)^{C(m,2)C(n,2)}"))
    log.debug("species suite: %d records over %d objects", len(out), len(cat.objects))
    return out
