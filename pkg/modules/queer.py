# queer.py - queer vector spaces, the half tensor product and the category Queer
#
# Degree-0 objects are plain SuperSpaces, degree-1 objects are QueerSpaces.
# Composite objects are nested tuples of atoms; each is realised as a subspace
# of the tensor product of its two children, and the fixed choice of
# eigenvalue for half tensor products is zeta4.
import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

from . import linalg
from .axioms import (
    BraidingData, CatInstance, Mor, check_hexagons, check_naturality, check_pentagon, check_symmetry,
    check_triangle, mutation_sweep, summarize,
)
from .factor_systems import builtin
from .report import CheckRecord, record
from .scalars import HALF, ONE, SQRT2, ZETA4, ZETA16, DomainError, sign
from .supervec import (
    K, SuperMap, SuperSpace, compose, compose_all, eigenspace, identity, is_invertible, random_map,
    reassociate, restrict, scalar_map, symmetry, tensor_map,
)

log = logging.getLogger(__name__)

INV_SQRT2 = SQRT2 * HALF


@dataclass(frozen=True, eq=False)
class QueerSpace:
    """A super vector space with an odd involution nu."""
    space: SuperSpace
    nu: SuperMap
    name: str = "U"

    def __post_init__(self):
        if self.nu.source != self.space or self.nu.target != self.space:
            raise DomainError(f"queer structure on {self.name} must be an endomorphism of {self.space}")
        if self.nu.parity != 1:
            raise DomainError(f"queer structure on {self.name} must be odd")
        if compose(self.nu, self.nu) != identity(self.space):
            raise DomainError(f"queer structure on {self.name} does not square to 1")

    def __str__(self):
        return f"{self.name}{self.space}"


Atom = Union[SuperSpace, QueerSpace]


def degree_of(x) -> int:
    return 1 if isinstance(x, QueerSpace) else 0


def space_of(x) -> SuperSpace:
    return x.space if isinstance(x, QueerSpace) else x


def half_tensor(U: QueerSpace, V: QueerSpace) -> Tuple[SuperSpace, SuperMap]:
    """The zeta4-eigenspace of mu (x) nu inside U (x) V, with its inclusion."""
    return eigenspace(tensor_map(U.nu, V.nu), ZETA4)


def _tensor_with_inclusion(X: Atom, Y: Atom) -> Tuple[Atom, SuperMap]:
    UV = tensor_map(identity(space_of(X)), identity(space_of(Y)))
    full = UV.source
    dx, dy = degree_of(X), degree_of(Y)
    if dx and dy:
        E, incl = half_tensor(X, Y)
        return E, incl
    if dx:
        return QueerSpace(full, tensor_map(X.nu, identity(space_of(Y))), f"({X.name}.)"), UV
    if dy:
        return QueerSpace(full, tensor_map(identity(space_of(X)), Y.nu), f"(.{Y.name})"), UV
    return full, UV


def queer_tensor(X: Atom, Y: Atom) -> Atom:
    """U (.) V: plain tensor, tensor with the inherited structure, or half tensor."""
    return _tensor_with_inclusion(X, Y)[0]


def random_queer_space(dims: int, seed: int = 0, name: str = "U") -> QueerSpace:
    """(d|d) with nu = [[0, A^-1], [A, 0]] for a seeded invertible A."""
    if dims < 1:
        raise DomainError("queer spaces need positive dimension")
    rng = random.Random(seed)
    d = dims
    perm = list(range(d))
    rng.shuffle(perm)
    # unitriangular times a signed permutation: invertible with small entries
    A = [{} for _ in range(d)]
    for r in range(d):
        A[r][perm[r]] = ONE if rng.random() < 0.5 else -ONE
    for r in range(d):
        for s in range(r + 1, d):
            c = rng.choice((0, 0, 1, -1))
            if c:
                for col, v in A[s].items():
                    A[r][col] = A[r].get(col, 0) + v * c
                A[r] = {k: v for k, v in A[r].items() if v}
    A_inv = linalg.inverse(A, d)
    V = SuperSpace(d, d)
    ents = {}
    for r in range(d):
        for c, v in A[r].items():
            ents[(d + r, c)] = v
        for c, v in A_inv[r].items():
            ents[(r, d + c)] = v
    return QueerSpace(V, SuperMap.build(V, V, 1, ents), name)


def random_queer_morphism(X: Atom, Y: Atom, parity: int, rng: random.Random) -> SuperMap:
    """f with f mu = (-1)^{|f|} nu f, by averaging a random map."""
    g = random_map(space_of(X), space_of(Y), parity, rng)
    if degree_of(X) != degree_of(Y):
        raise DomainError("morphisms in Queer preserve degree")
    if not degree_of(X):
        return g
    twisted = compose_all(Y.nu, g, X.nu).scale(sign(parity))
    return g + twisted


# ---- the instance ----
class QueerInstance(CatInstance):
    """Queer with (.) as tensor product, the 1/sqrt2 (mu sigma - 1) associator and the IIb symmetry."""

    name = "queer"

    def __init__(self, atoms: Sequence[Atom], generators: Sequence[Mor] = ()):
        super().__init__(2, list(atoms), K, generators)
        self._real: Dict[object, Atom] = {}
        self._incl: Dict[object, SuperMap] = {}

    def realize(self, X) -> Atom:
        if not isinstance(X, tuple):
            return X
        if X not in self._real:
            L, R = X
            obj, incl = _tensor_with_inclusion(self.realize(L), self.realize(R))
            self._real[X], self._incl[X] = obj, incl
        return self._real[X]

    def inclusion(self, X) -> SuperMap:
        """space(L (.) R) -> space(L) (x) space(R)."""
        self.realize(X)
        return self._incl[X]

    def degree(self, X) -> int:
        if isinstance(X, tuple):
            return (self.degree(X[0]) + self.degree(X[1])) % 2
        return degree_of(X)

    def space(self, X) -> SuperSpace:
        return space_of(self.realize(X))

    def tensor_obj(self, X, Y):
        return (X, Y)

    def label(self, X) -> str:
        if isinstance(X, tuple):
            return f"({self.label(X[0])}.{self.label(X[1])})"
        return X.name if isinstance(X, QueerSpace) else str(X)

    def structure(self, X) -> SuperMap:
        obj = self.realize(X)
        if not isinstance(obj, QueerSpace):
            raise DomainError(f"{self.label(X)} has degree 0")
        return obj.nu

    def tensor(self, f: Mor, g: Mor) -> Mor:
        src, tgt = (f.source, g.source), (f.target, g.target)
        m = tensor_map(f.map, g.map)
        return Mor(src, tgt, restrict(m, self.inclusion(src), self.inclusion(tgt)))

    def _nested(self, U, V, W) -> Tuple[SuperMap, SuperMap, SuperMap]:
        """Inclusions of U.(V.W) and (U.V).W into (U x V) x W, and that ambient's identity."""
        su, sv, sw = self.space(U), self.space(V), self.space(W)
        vw, uv = (V, W), (U, V)
        src_obj, tgt_obj = (U, vw), (uv, W)
        inner_src = compose(tensor_map(identity(su), self.inclusion(vw)), self.inclusion(src_obj))
        incl_src = compose(reassociate(su, sv, sw), inner_src)
        incl_tgt = compose(tensor_map(self.inclusion(uv), identity(sw)), self.inclusion(tgt_obj))
        return incl_src, incl_tgt, identity(incl_tgt.target)

    def associator(self, U, V, W) -> Mor:
        return Mor((U, (V, W)), ((U, V), W), queer_associator(self, U, V, W))

    def associator_inverse(self, U, V, W) -> Mor:
        return Mor(((U, V), W), (U, (V, W)), queer_associator_inverse(self, U, V, W))


def _all_odd(cat: QueerInstance, U, V, W) -> bool:
    return cat.degree(U) == 1 and cat.degree(V) == 1 and cat.degree(W) == 1


def _mu_sigma(cat: QueerInstance, U, V, W) -> SuperMap:
    """mu sigma on (U x V) x W, with mu acting on U and sigma on W."""
    su, sv, sw = cat.space(U), cat.space(V), cat.space(W)
    mu = tensor_map(tensor_map(cat.structure(U), identity(sv)), identity(sw))
    sigma = tensor_map(tensor_map(identity(su), identity(sv)), cat.structure(W))
    return compose(mu, sigma)


def queer_associator(cat: QueerInstance, U, V, W) -> SuperMap:
    """alpha = (1/sqrt2)(mu sigma - 1) when U, V, W all have degree 1, else the identity."""
    incl_src, incl_tgt, one = cat._nested(U, V, W)
    if _all_odd(cat, U, V, W):
        a = (_mu_sigma(cat, U, V, W) - one).scale(INV_SQRT2)
    else:
        a = one
    return restrict(a, incl_src, incl_tgt)


def queer_associator_inverse(cat: QueerInstance, U, V, W) -> SuperMap:
    """alpha^-1 = -(1/sqrt2)(mu sigma + 1), from (mu sigma)^2 = -1."""
    incl_src, incl_tgt, one = cat._nested(U, V, W)
    if _all_odd(cat, U, V, W):
        a = (_mu_sigma(cat, U, V, W) + one).scale(-INV_SQRT2)
    else:
        a = one
    return restrict(a, incl_tgt, incl_src)


def queer_symmetry(cat: QueerInstance, U, V) -> SuperMap:
    """tau when either factor has degree 0, else zeta16^-1 (nu (x) 1) tau."""
    su, sv = cat.space(U), cat.space(V)
    t = symmetry("tau", su, sv)
    if cat.degree(U) and cat.degree(V):
        t = compose(tensor_map(cat.structure(V), identity(su)), t).scale(ZETA16 ** -1)
    return restrict(t, cat.inclusion((U, V)), cat.inclusion((V, U)))


def queer_braiding(cat: QueerInstance) -> BraidingData:
    def beta(U, V):
        return Mor((U, V), (V, U), queer_symmetry(cat, U, V))

    return BraidingData("typeII", beta, builtin("B", 2), "queer")


def build_queer_instance(sizes: Sequence[Tuple[int, int]], seed: int = 0,
                         morphisms: int = 0) -> QueerInstance:
    """Atoms from (degree, d) pairs: the plain space (d|d-1) for degree 0, a random (d|d) queer space for degree 1."""
    rng = random.Random(seed)
    atoms: List[Atom] = []
    for k, (deg, d) in enumerate(sizes):
        if deg % 2:
            atoms.append(random_queer_space(d, rng.randrange(1 << 30), f"U{k}"))
        else:
            atoms.append(SuperSpace(d, max(d - 1, 0)))
    cat = QueerInstance(atoms)
    gens = []
    for t in range(morphisms):
        X = atoms[rng.randrange(len(atoms))]
        same = [Y for Y in atoms if degree_of(Y) == degree_of(X)]
        Y = same[rng.randrange(len(same))]
        par = rng.randrange(2)
        gens.append(Mor(X, Y, random_queer_morphism(X, Y, par, rng), f"f{t}"))
    cat.generators = gens
    return cat


# ---- seeded property trials ----
def trial_checks(trials: int = 25, seed: int = 0, max_dim: int = 3) -> List[CheckRecord]:
    rng = random.Random(seed)
    square, halfdim, iso, pent, hexa, sym = [], [], [], [], [], []
    for t in range(trials):
        dims = [rng.randint(1, max_dim) for _ in range(3)]
        U, V, W = (random_queer_space(d, rng.randrange(1 << 30), n) for d, n in zip(dims, "UVW"))
        mn = tensor_map(U.nu, V.nu)
        square.append(compose(mn, mn) == scalar_map(mn.source, -1) or (t, dims))
        E, _ = half_tensor(U, V)
        halfdim.append(2 * E.dim == U.space.dim * V.space.dim or (t, dims))
        cat = QueerInstance([U, V, W])
        a = queer_associator(cat, U, V, W)
        iso.append(is_invertible(a) or (t, dims))
        # the pentagon's fourth factor stays small to bound the nested eigenspaces
        X = random_queer_space(rng.randint(1, min(max_dim, 2)), rng.randrange(1 << 30), "X")
        cat4 = QueerInstance([U, V, W, X])
        pent.extend(check_pentagon(cat4, [(U, V, W, X)]))
        beta = queer_braiding(cat)
        hexa.extend(check_hexagons(cat, beta, ("H1",), [(U, V, W)]))
        sym.extend(check_symmetry(cat, beta, [(U, V)]))

    def first_bad(results):
        return next((r for r in results if r is not True), None)

    return [
        record("queer.trials.square", "(mu (x) nu)^2 = -1", first_bad(square) is None, first_bad(square)),
        record("queer.trials.half-dim", "dim 2^-1(U (x) V) = dim U dim V / 2",
               first_bad(halfdim) is None, first_bad(halfdim)),
        record("queer.trials.associator-iso", "(1/sqrt2)(mu sigma - 1) is an isomorphism",
               first_bad(iso) is None, first_bad(iso)),
        summarize(pent, "queer.trials.pentagon", "(mu sigma - 1)(nu tau - 1) = 2"),
        summarize(hexa, "queer.trials.hexagon", "H1 commutes exactly since B1 = 1"),
        summarize(sym, "queer.trials.symmetry", "beta_{V,U} beta_{U,V} = zeta8"),
    ]


# ---- the full axiom suite on a fixed instance ----
INSTANCE_SIZES = ((0, 1), (1, 1), (1, 1))


def instance_checks(seed: int = 0, morphisms: int = 4,
                    sizes: Sequence[Tuple[int, int]] = INSTANCE_SIZES) -> List[CheckRecord]:
    """Pentagon, triangle, naturality against random morphisms, H1, H2 and the symmetry."""
    cat = build_queer_instance(sizes, seed, morphisms)
    beta = queer_braiding(cat)
    return [
        summarize(check_pentagon(cat), "queer.instance.pentagon", "(mu sigma - 1)(nu tau - 1) = 2"),
        summarize(check_triangle(cat), "queer.instance.triangle", "unitors are identities"),
        summarize(check_naturality(cat, beta), "queer.instance.naturality",
                  "beta (f (x) g) = (-1)^{|f||g|} (g (x) f) beta"),
        summarize(check_hexagons(cat, beta, ("H1",)), "queer.instance.H1", "H1 commutes exactly since B1 = 1"),
        summarize(check_hexagons(cat, beta, ("H2",)), "queer.instance.H2", "H2 up to B2"),
        summarize(check_symmetry(cat, beta), "queer.instance.symmetry", "beta_{V,U} beta_{U,V} = zeta8"),
        mutation_sweep(cat, beta, "queer.instance.mutations", seed=seed),
    ]
