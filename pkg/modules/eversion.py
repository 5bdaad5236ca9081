# eversion.py - Clifford modules over a concrete instance and Clifford eversion
#
# Periodicity runs at p = 2: Cl_2 = End(k^{1|1}) through the generators
# (xi, zeta4 y) of clifford.cl2_matrix_iso. Everted objects carry the rank
# equal to their degree representative in [0, q), tensor products the sum of
# ranks.
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from . import spin_group as sg
from .axioms import BraidingData, CatInstance, Mor, SVecInstance, SVecObject, full_suite, summarize, tau_braiding
from .clifford import CliffordElement, cl2_matrix_iso, image_of, monomial_images, periodicity_data
from .factor_systems import builtin, fs_mul
from .report import CheckRecord, record
from .scalars import HALF, ZETA4, DomainError, QSqrt2, sign
from .supervec import (
    K, K11, SuperMap, SuperSpace, compose, compose_all, direct_sum, direct_sum_map, eigenspace,
    identity, inverse_map, is_invertible, pi_index, pi_space, random_map, restrict, scalar_map,
    tensor_map, tensor_space, xi, xi_inverse,
)

log = logging.getLogger(__name__)

PERIOD = 2
QUARTER = HALF * HALF
INV_SQRT2 = QSqrt2(0, Fraction(1, 2))


# ---- Clifford modules ----
@dataclass(frozen=True, eq=False)
class CliffordModule:
    """(M; alpha_1, .., alpha_n) on an object of a base instance."""
    obj: Any
    space: SuperSpace
    actions: Tuple[SuperMap, ...] = ()
    name: str = "M"

    @property
    def rank(self) -> int:
        return len(self.actions)

    def __str__(self):
        return self.name


def module_relations(M: CliffordModule) -> Optional[str]:
    """The first violated Clifford relation of M, or None."""
    two = scalar_map(M.space, 2)
    for i, a in enumerate(M.actions, start=1):
        if a.source != M.space or a.target != M.space:
            return f"alpha_{i} is not an endomorphism of {M.space}"
        if a.parity != 1:
            return f"alpha_{i} is even"
        if compose(a, a) != two:
            return f"alpha_{i}^2 != 2"
        for j in range(i + 1, M.rank + 1):
            b = M.actions[j - 1]
            if not (compose(a, b) + compose(b, a)).is_zero():
                return f"alpha_{i} and alpha_{j} do not anticommute"
    return None


def clifford_module(base: CatInstance, obj, actions: Sequence[SuperMap], name: str = "M") -> CliffordModule:
    M = CliffordModule(obj, base.space(obj), tuple(actions), name)
    bad = module_relations(M)
    if bad is not None:
        raise DomainError(f"{name}: {bad}")
    return M


def action_of(M: CliffordModule, x: CliffordElement) -> SuperMap:
    if x.n != M.rank:
        raise DomainError(f"Cl_{x.n} element acting on a Cl_{M.rank}-module")
    if M.rank == 0:
        return scalar_map(M.space, x.terms.get(0, 0))
    return image_of(x, monomial_images(M.actions))


def spin_action(space: SuperSpace, actions: Sequence[SuperMap], g: sg.SpinGroupElement) -> SuperMap:
    """g acting through s~_i -> (alpha_{i+1} - alpha_i)/2."""
    if g.n != len(actions):
        raise DomainError(f"S~_{g.n} acting through {len(actions)} Clifford generators")
    if g.flavor != sg.SPIN:
        raise DomainError("only flavour (1,0) acts through the Clifford algebra")
    out = identity(space)
    for i in sg.canonical_word(g.perm):
        out = compose(out, (actions[i] - actions[i - 1]).scale(HALF))
    return out.scale(sign(g.sign))


def random_module_morphism(M: CliffordModule, N: CliffordModule, parity: int,
                           rng: random.Random) -> SuperMap:
    """Averages a random map so that f alpha_i = (-1)^{|f|} alpha'_i f."""
    if M.rank != N.rank:
        raise DomainError("Clifford module morphisms need equal ranks")
    f = random_map(M.space, N.space, parity, rng)
    for a, b in zip(M.actions, N.actions):
        f = f.scale(HALF) + compose_all(b, f, a).scale(sign(parity) * QUARTER)
    return f


# ---- the everted instance ----
def evert_tensor(base: CatInstance, M: CliffordModule, N: CliffordModule) -> CliffordModule:
    """(M (x) N; mu (x) 1, .., 1 (x) nu, ..)."""
    obj = base.tensor_obj(M.obj, N.obj)
    idM, idN = base.identity(M.obj), base.identity(N.obj)
    left = tuple(base.tensor(Mor(M.obj, M.obj, a), idN).map for a in M.actions)
    right = tuple(base.tensor(idM, Mor(N.obj, N.obj, b)).map for b in N.actions)
    return CliffordModule(obj, base.space(obj), left + right, f"({M.name}{N.name})")


def _check_rank(base: CatInstance, M: CliffordModule):
    if (M.rank - base.degree(M.obj)) % PERIOD:
        raise DomainError(f"{M.name}: rank {M.rank} does not match degree {base.degree(M.obj)} mod {PERIOD}")


def evert_symmetry(base: CatInstance, beta: BraidingData, M: CliffordModule, N: CliffordModule) -> SuperMap:
    """tau~_{r,s}^{-1} o beta_{M,N}, acting on N (x) M through (1 (x) mu, nu (x) 1)."""
    _check_rank(base, M)
    _check_rank(base, N)
    b = beta(M.obj, N.obj).map
    r, s = M.rank, N.rank
    if r == 0 or s == 0:
        return b
    idM, idN = base.identity(M.obj), base.identity(N.obj)
    acts = tuple(base.tensor(idN, Mor(M.obj, M.obj, a)).map for a in M.actions)
    acts += tuple(base.tensor(Mor(N.obj, N.obj, v), idM).map for v in N.actions)
    g = sg.group_inverse(sg.tau_tilde(r, s))
    return compose(spin_action(b.target, acts, g), b)


class EvertedInstance(CatInstance):
    """Cl(A): Clifford modules over the objects of a base instance."""

    name = "evert"

    def __init__(self, base: CatInstance, objects: Sequence[CliffordModule], generators: Sequence[Mor] = ()):
        unit = CliffordModule(base.unit, base.space(base.unit), (), "1")
        super().__init__(base.q, objects, unit, generators)
        self.base = base
        self._tensors: Dict[Tuple[int, int], tuple] = {}

    def degree(self, M: CliffordModule) -> int:
        return self.base.degree(M.obj)

    def space(self, M: CliffordModule) -> SuperSpace:
        return M.space

    def label(self, M) -> str:
        return M.name

    def tensor_obj(self, M: CliffordModule, N: CliffordModule) -> CliffordModule:
        key = (id(M), id(N))
        if key not in self._tensors:
            # keep M and N alive so their ids stay unique
            self._tensors[key] = (M, N, evert_tensor(self.base, M, N))
        return self._tensors[key][2]

    def tensor(self, f: Mor, g: Mor) -> Mor:
        fb = Mor(f.source.obj, f.target.obj, f.map)
        gb = Mor(g.source.obj, g.target.obj, g.map)
        return Mor(self.tensor_obj(f.source, g.source), self.tensor_obj(f.target, g.target),
                   self.base.tensor(fb, gb).map)

    def associator(self, M, N, P) -> Mor:
        t = self.tensor_obj
        a = self.base.associator(M.obj, N.obj, P.obj)
        return Mor(t(M, t(N, P)), t(t(M, N), P), a.map)


def evert_braiding(cat: EvertedInstance, beta: BraidingData) -> BraidingData:
    """An ordinary braiding for w turns into a type II one for D A w, a type II one for w into an ordinary one for A w."""
    q = cat.q
    if beta.kind == "ordinary":
        kind, factor = "typeII", fs_mul(builtin("D", q), fs_mul(builtin("A", q), beta.factor))
    elif beta.kind == "typeII":
        kind, factor = "ordinary", fs_mul(builtin("A", q), beta.factor)
    else:
        raise DomainError("convert a type I braiding to type II before everting it")

    def twisted(M, N):
        return Mor(cat.tensor_obj(M, N), cat.tensor_obj(N, M), evert_symmetry(cat.base, beta, M, N),
                   f"beta'[{M.name},{N.name}]")

    return BraidingData(kind, twisted, factor, f"{beta.name}'")


def standard_modules(base: SVecInstance) -> List[CliffordModule]:
    """Rank-0 modules on k and k^{1|1}, two rank-1 modules and U_2, all over k^{1|1} bases."""
    x, zy = cl2_matrix_iso()
    return [
        clifford_module(base, SVecObject(K, 0), (), "k"),
        clifford_module(base, SVecObject(K11, 0), (), "P"),
        clifford_module(base, SVecObject(K11, 1), (x,), "X"),
        clifford_module(base, SVecObject(K11, 1), (zy,), "Y"),
        clifford_module(base, SVecObject(K11, 2 % base.q), (x, zy), "U"),
    ]


def everted_svec(q: int = 4, trials: int = 6, seed: int = 0) -> Tuple[EvertedInstance, BraidingData]:
    """Cl(SVec) over Z/q with seeded module morphisms as generators, and tau everted."""
    if q % 4:
        raise DomainError(f"eversion of braidings needs 4 | q, got q={q}")
    base = SVecInstance(q, [])
    mods = standard_modules(base)
    base.objects = [M.obj for M in mods]
    rng = random.Random(seed)
    pairs = [(M, N) for M in mods for N in mods
             if M.rank == N.rank and base.degree(M.obj) == base.degree(N.obj)]
    gens = []
    for t in range(trials):
        M, N = pairs[rng.randrange(len(pairs))]
        par = rng.randrange(2)
        gens.append(Mor(M, N, random_module_morphism(M, N, par, rng), f"f{t}"))
    cat = EvertedInstance(base, mods, gens)
    return cat, evert_braiding(cat, tau_braiding(base))


# ---- reordering for bifunctoriality ----
def reordering_element(r: int, s: int, p: int = PERIOD) -> sg.SpinGroupElement:
    """j_{r,p+s}(1, tau~_{p,s}) in S~_{r+p+s}."""
    return sg.j_embed(r, p + s, sg.group_identity(r), sg.tau_tilde(p, s))


def reordering_iso(M: CliffordModule, N: CliffordModule, base: CatInstance) -> Tuple[SuperMap, List[SuperMap], List[SuperMap]]:
    """The isomorphism (M N U; mu, nu, lambda) -> (M N U; mu, lambda, nu) and both action lists."""
    U = u2_module()
    X = evert_tensor(base, evert_tensor(base, M, N), U)
    r, s = M.rank, N.rank
    src = list(X.actions)
    tgt = src[:r] + src[r + s:] + src[r:r + s]
    return spin_action(X.space, src, reordering_element(r, s)), src, tgt


def reordering_checks(modules: Sequence[CliffordModule], base: CatInstance, max_rank: int = 4) -> List[CheckRecord]:
    odd = next(((r, s) for r in range(max_rank + 1) for s in range(max_rank + 1)
                if reordering_element(r, s).parity), None)
    bad = None
    for M in modules:
        for N in modules:
            f, src, tgt = reordering_iso(M, N, base)
            if f.parity or not is_invertible(f):
                bad = bad or (M.name, N.name, "not an even isomorphism")
                continue
            if any(compose(f, a) != compose(b, f) for a, b in zip(src, tgt)):
                bad = bad or (M.name, N.name, "does not intertwine")
    return [
        record("eversion.reorder.parity", "j(1, tau~_{p,s}) is even for even p", odd is None, odd),
        record("eversion.reorder.module", "(M N; mu, nu, lambda) = (M N; mu, lambda, nu)", bad is None, bad),
    ]


# ---- periodicity ----
def u2_module() -> CliffordModule:
    x, zy = cl2_matrix_iso()
    return CliffordModule(SVecObject(K11, 0), K11, (x, zy), "U")


def morita_iso(M: CliffordModule) -> Tuple[SuperSpace, SuperMap]:
    """eps M and the even map eps M (x) U_2 -> M, m (x) e0 -> m, m (x) e1 -> (-1)^{|m|} alpha_1 m."""
    if M.rank != PERIOD:
        raise DomainError(f"periodicity compares Cl_{PERIOD}-modules, got rank {M.rank}")
    eps = periodicity_data(PERIOD).idempotent_eps
    E, incl = eigenspace(action_of(M, eps), 1)
    src, idx = tensor_space(E, K11)
    cols = incl.columns()
    a1 = M.actions[0]
    ents = {}
    for k in range(E.dim):
        vec = dict(cols.get(k, ()))
        for r, v in vec.items():
            ents[(r, idx[(k, 0)])] = v
        moved = a1.apply(vec)
        s = sign(E.parity(k))
        for r, v in moved.items():
            ents[(r, idx[(k, 1)])] = s * v
    return E, SuperMap.build(src, M.space, 0, ents)


def random_rank2_module(rng: random.Random, max_dim: int = 2) -> Tuple[SuperSpace, CliffordModule]:
    """V (x) U_2 with its actions conjugated by a random even automorphism."""
    V = SuperSpace(rng.randint(0, max_dim), rng.randint(0, max_dim))
    if V.dim == 0:
        V = K
    x, zy = cl2_matrix_iso()
    T = tensor_space(V, K11)[0]
    acts = [tensor_map(identity(V), lam) for lam in (x, zy)]
    g = identity(T)
    for _ in range(8):
        h = random_map(T, T, 0, rng)
        if is_invertible(h):
            g = h
            break
    gi = inverse_map(g)
    return V, CliffordModule(SVecObject(T, 0), T, tuple(compose_all(g, a, gi) for a in acts), "R")


def periodicity_checks(samples: int = 10, seed: int = 0) -> List[CheckRecord]:
    rng = random.Random(seed)
    bad = None
    for t in range(samples):
        V, M = random_rank2_module(rng)
        if module_relations(M) is not None:
            bad = bad or (t, module_relations(M))
            continue
        E, phi = morita_iso(M)
        U = u2_module()
        lifted = [tensor_map(identity(E), lam) for lam in U.actions]
        if E != V or not is_invertible(phi):
            bad = bad or (t, str(V), str(E))
        elif any(compose(phi, l) != compose(a, phi) for l, a in zip(lifted, M.actions)):
            bad = bad or (t, "does not intertwine")
    return [record("eversion.periodicity", "M = eps M (x) U_2 for Cl_2-modules", bad is None, bad)]


# ---- Cl_1 double functors ----
def split_map(V: SuperSpace) -> SuperMap:
    """V (x) k^{1|1} -> V + Pi V, v (x) e0 -> v, v (x) e1 -> xi(v)."""
    T, idx = tensor_space(V, K11)
    S, iv, iw = direct_sum(V, pi_space(V))
    cv, cw = iv.columns(), iw.columns()
    ents = {}
    for i in range(V.dim):
        ents[(cv[i][0][0], idx[(i, 0)])] = 1
        ents[(cw[pi_index(V, 1, i)][0][0], idx[(i, 1)])] = 1
    return SuperMap.build(T, S, 0, ents)


def cl1_double_check(modules: Sequence[CliffordModule]) -> List[CheckRecord]:
    """F(M) = (M (x) k^{1|1}, 1 (x) xi) against (M, alpha) + Pi(M, alpha)."""
    xi_map = cl2_matrix_iso()[0]
    bad_iso, bad_gf, bad_fg = None, None, None
    for M in modules:
        if M.rank != 1:
            raise DomainError(f"{M.name} is not a Cl_1-module")
        V, alpha = M.space, M.actions[0]
        a = tensor_map(alpha, identity(K11))
        x = tensor_map(identity(V), xi_map)
        # 2 - xi alpha with xi applied first
        f = scalar_map(a.source, 2) - compose(a, x)
        if f.parity or not is_invertible(f) or compose(f, a) != compose(x, f):
            bad_iso = bad_iso or M.name
        s = split_map(V)
        if not is_invertible(s):
            bad_gf = bad_gf or M.name
        twin = compose_all(xi(V), alpha, xi_inverse(V))
        if compose(s, a) != compose(direct_sum_map(alpha, twin), s):
            bad_fg = bad_fg or M.name
    return [
        record("eversion.cl1.iso", "2 - xi alpha is an even Cl_1 isomorphism", bad_iso is None, bad_iso),
        record("eversion.cl1.GF", "G F = id + Pi", bad_gf is None, bad_gf),
        record("eversion.cl1.FG", "F G = id + Pi", bad_fg is None, bad_fg),
    ]


# ---- K_+ and the 1/sqrt2 normalization ----
KPLUS_UNIT = "[k]"


@dataclass
class KPlusElement:
    """Z[1/sqrt2]-combination of K_+ classes; K_+(SVec) has the single class [k], [Pi k] = [k]."""
    coeffs: Dict[str, QSqrt2] = field(default_factory=dict)

    @classmethod
    def of_space(cls, V: SuperSpace) -> "KPlusElement":
        return cls({KPLUS_UNIT: QSqrt2(V.dim)}) if V.dim else cls()

    def scale(self, c) -> "KPlusElement":
        c = QSqrt2.lift(c)
        return KPlusElement({k: v * c for k, v in self.coeffs.items() if not (v * c).is_zero()})

    def __add__(self, other: "KPlusElement") -> "KPlusElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return KPlusElement({k: v for k, v in out.items() if not v.is_zero()})

    def __mul__(self, other: "KPlusElement") -> "KPlusElement":
        out = KPlusElement()
        for a, u in self.coeffs.items():
            for b, v in other.coeffs.items():
                if KPLUS_UNIT not in (a, b):
                    raise DomainError(f"no product rule for {a} {b}")
                out = out + KPlusElement({b if a == KPLUS_UNIT else a: u * v})
        return out

    def __eq__(self, other):
        if not isinstance(other, KPlusElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({v}){k}" for k, v in sorted(self.coeffs.items()))


def _require_z2(cat: EvertedInstance):
    if cat.q != 2:
        raise DomainError(f"the K_+ map is defined for Z/2-gradings, got q={cat.q}")


def kplus_class(cat: EvertedInstance, M: CliffordModule) -> KPlusElement:
    """i([M]): [M] in degree 0, [M]/sqrt2 in degree 1; rank-2 modules pass through eps M."""
    _require_z2(cat)
    if M.rank == PERIOD:
        E, _ = eigenspace(compose(M.actions[0], M.actions[1]).scale(HALF), ZETA4)
        return KPlusElement.of_space(E)
    if M.rank == 0:
        return KPlusElement.of_space(M.space)
    if M.rank == 1:
        return KPlusElement.of_space(M.space).scale(INV_SQRT2)
    raise DomainError(f"K_+ classes are read off ranks 0, 1 and 2, got {M.rank}")


def kplus_map(cat: EvertedInstance, modules: Optional[Sequence[CliffordModule]] = None) -> List[CheckRecord]:
    """i([A][A']) == i([A]) i([A']) on every pair, and the odd-odd swap of eigenspaces."""
    _require_z2(cat)
    mods = list(modules if modules is not None else cat.objects)
    bad_ring, bad_swap = None, None
    for M in mods:
        for N in mods:
            T = cat.tensor_obj(M, N)
            lhs = kplus_class(cat, T)
            rhs = kplus_class(cat, M) * kplus_class(cat, N)
            if lhs != rhs:
                bad_ring = bad_ring or (M.name, N.name, str(lhs), str(rhs))
            if M.rank == 1 and N.rank == 1:
                prod = compose(T.actions[0], T.actions[1]).scale(HALF)
                _, plus = eigenspace(prod, ZETA4)
                _, minus = eigenspace(prod, -ZETA4)
                try:
                    swap = restrict(T.actions[0], plus, minus)
                    ok = is_invertible(swap)
                except DomainError:
                    ok = False
                if not ok:
                    bad_swap = bad_swap or (M.name, N.name)
    return [
        record("eversion.kplus.ring", "i([M][N]) = i([M]) i([N]) with i([(A, alpha)]) = [A]/sqrt2",
               bad_ring is None, bad_ring),
        record("eversion.kplus.swap", "alpha (x) 1 interchanges the +-zeta4 eigenspaces",
               bad_swap is None, bad_swap),
    ]


def kplus_rows(cat: EvertedInstance, modules: Optional[Sequence[CliffordModule]] = None) -> List[dict]:
    rows = []
    for M in (modules if modules is not None else cat.objects):
        rows.append({
            "object": M.name,
            "degree": cat.degree(M),
            "rank": M.rank,
            "space": str(M.space),
            "class": str(kplus_class(cat, M)),
        })
    return rows


def z2_everted_svec() -> EvertedInstance:
    base = SVecInstance(2, [])
    x, zy = cl2_matrix_iso()
    mods = [
        clifford_module(base, SVecObject(K, 0), (), "k"),
        clifford_module(base, SVecObject(SuperSpace(1, 1), 0), (), "P"),
        clifford_module(base, SVecObject(SuperSpace(2, 1), 0), (), "Q"),
        clifford_module(base, SVecObject(K11, 1), (x,), "X"),
        clifford_module(base, SVecObject(K11, 1), (zy,), "Y"),
    ]
    base.objects = [M.obj for M in mods]
    return EvertedInstance(base, mods)


# ---- suite ----
def _by_check(records, prefix: str, anchors: Dict[str, str]) -> List[CheckRecord]:
    out = []
    for check, anchor in anchors.items():
        rows = [r for r in records if r.check == check]
        if rows:
            out.append(summarize(rows, f"{prefix}.{check}", anchor))
    return out


EVERTED_ANCHORS = {
    "pentagon": "associators of Cl(SVec) are those of SVec",
    "triangle": "unit constraints of Cl(SVec)",
    "naturality": "beta' natural up to (-1)^{|f||g| + rs(|f|+|g|)}",
    "H1": "H1 up to (-1)^{rst} w1(r;s,t)",
    "H2": "H2 for D A w",
    "symmetry": "beta' beta' = (-1)^{C(r,2)C(s,2) + rs} w#",
}


def eversion_checks(trials: int = 6, seed: int = 0, q: int = 4) -> List[CheckRecord]:
    cat, beta = everted_svec(q, trials, seed)
    log.debug("everted %d objects with factor %s", len(cat.objects), beta.factor.name)
    out = _by_check(full_suite(cat, beta), "eversion.svec", EVERTED_ANCHORS)
    ranked = [M for M in cat.objects if M.rank == 1]
    out += reordering_checks(cat.objects[2:], cat.base)
    out += periodicity_checks(10, seed)
    out += cl1_double_check(ranked)
    out += kplus_map(z2_everted_svec())
    return out
