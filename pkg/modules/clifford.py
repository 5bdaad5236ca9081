# clifford.py - Clifford algebras Cl_n (alpha_i^2 = 2), matrix isomorphisms and Morita data
#
# Monomials alpha_S are stored as bitmasks: bit i-1 set means alpha_i occurs.
# alpha_S alpha_T = (-1)^{#(s > t)} 2^{|S & T|} alpha_{S ^ T}.
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .report import CheckRecord, record
from .scalars import HALF, ONE, ZERO, ZETA4, CycNumber, DomainError, as_cyc, sign
from .supervec import K11, SuperMap, SuperSpace, compose, identity, slot_operator, zero_map

log = logging.getLogger(__name__)


def _popcount(x: int) -> int:
    return bin(x).count("1")


@lru_cache(maxsize=None)
def monomial_product(s: int, t: int) -> Tuple[int, int]:
    """alpha_s * alpha_t = (-1)^e 2^k alpha_{s^t}; returns (e, k)."""
    e = 0
    tt = t
    while tt:
        low = tt & -tt
        e += _popcount(s & ~((low << 1) - 1))
        tt ^= low
    return e, _popcount(s & t)


def _mono_coeff(s: int, t: int) -> CycNumber:
    e, k = monomial_product(s, t)
    c = CycNumber.from_int(2 ** k)
    return -c if e % 2 else c


def subset_mask(subset: Iterable[int]) -> int:
    m = 0
    for i in subset:
        m |= 1 << (i - 1)
    return m


def mask_subset(mask: int) -> Tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


class CliffordElement:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Dict[int, CycNumber]] = None):
        self.n = n
        self.terms = {m: as_cyc(c) for m, c in (terms or {}).items() if c}
        for m in self.terms:
            if m >> n:
                raise DomainError(f"monomial {mask_subset(m)} outside Cl_{n}")

    @classmethod
    def one(cls, n: int) -> "CliffordElement":
        return cls(n, {0: ONE})

    @classmethod
    def scalar(cls, n: int, c) -> "CliffordElement":
        return cls(n, {0: as_cyc(c)})

    @classmethod
    def generator(cls, n: int, i: int) -> "CliffordElement":
        if not 1 <= i <= n:
            raise DomainError(f"generator alpha_{i} outside Cl_{n}")
        return cls(n, {1 << (i - 1): ONE})

    @classmethod
    def monomial(cls, n: int, subset: Iterable[int]) -> "CliffordElement":
        subset = list(subset)
        if sorted(set(subset)) != sorted(subset) or any(not 1 <= i <= n for i in subset):
            raise DomainError(f"bad subset {subset} for Cl_{n}")
        return cls(n, {subset_mask(subset): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def parity(self) -> Optional[int]:
        ps = {_popcount(m) % 2 for m in self.terms}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def even_part(self) -> "CliffordElement":
        return CliffordElement(self.n, {m: c for m, c in self.terms.items() if _popcount(m) % 2 == 0})

    def odd_part(self) -> "CliffordElement":
        return CliffordElement(self.n, {m: c for m, c in self.terms.items() if _popcount(m) % 2})

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        _same_rank(self, other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return CliffordElement(self.n, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "CliffordElement":
        c = as_cyc(c)
        return CliffordElement(self.n, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            return cl_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (_popcount(m), mask_subset(m))):
            c = self.terms[m]
            name = "".join(f"a{i}" for i in mask_subset(m))
            if not name:
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append(f"({c})*{name}")
        return " + ".join(parts)

    __repr__ = __str__


def _same_rank(x: CliffordElement, y: CliffordElement):
    if x.n != y.n:
        raise DomainError(f"rank mismatch Cl_{x.n} vs Cl_{y.n}")


def cl_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    _same_rank(x, y)
    out: Dict[int, CycNumber] = {}
    for s, a in x.terms.items():
        for t, b in y.terms.items():
            m = s ^ t
            v = a * b * _mono_coeff(s, t)
            out[m] = out[m] + v if m in out else v
    return CliffordElement(x.n, out)


def cl_product(n: int, elements: Sequence[CliffordElement]) -> CliffordElement:
    out = CliffordElement.one(n)
    for e in elements:
        out = cl_mul(out, e)
    return out


def cl_from_word(n: int, word: Sequence) -> CliffordElement:
    """Evaluate a word of generators left to right.

    Items are an index i (alpha_i), a negative index (-alpha_i) or a pair (i, scalar).
    """
    out = CliffordElement.one(n)
    for item in word:
        if isinstance(item, tuple):
            i, c = item
        else:
            i, c = abs(item), (-1 if item < 0 else 1)
        out = cl_mul(out, CliffordElement.generator(n, i).scale(c))
    return out


def supercommutator(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    px, py = x.parity(), y.parity()
    if px is None or py is None:
        raise DomainError("supercommutator needs homogeneous elements")
    return cl_mul(x, y) - cl_mul(y, x).scale(sign(px * py))


def spin_image(n: int, i: int) -> CliffordElement:
    """The image of s~_i: (alpha_{i+1} - alpha_i) / 2."""
    if not 1 <= i <= n - 1:
        raise DomainError(f"s~_{i} is not a generator of S~_{n}")
    return CliffordElement(n, {1 << i: HALF, 1 << (i - 1): -HALF})


def clifford_perm_conjugation(n: int, j: int, i: int) -> bool:
    """phi(s~_j) alpha_i == -alpha_{s_j(i)} phi(s~_j)."""
    s = spin_image(n, j)
    target = j + 1 if i == j else (j if i == j + 1 else i)
    lhs = cl_mul(s, CliffordElement.generator(n, i))
    rhs = cl_mul(CliffordElement.generator(n, target), s).scale(-1)
    return lhs == rhs


def vector_rank(elements: Sequence[CliffordElement]) -> int:
    return linalg.rank([dict(e.terms) for e in elements])


def all_monomials(n: int) -> List[CliffordElement]:
    return [CliffordElement(n, {m: ONE}) for m in range(2 ** n)]


# ---- quaternions ----
@dataclass(frozen=True)
class QuaternionElement:
    """a + b*i + c*j + d*ij with i^2 = j^2 = -1, ij = -ji (all even)."""
    a: CycNumber = ZERO
    b: CycNumber = ZERO
    c: CycNumber = ZERO
    d: CycNumber = ZERO

    def coords(self):
        return (self.a, self.b, self.c, self.d)


QUATERNION_BASIS = (
    QuaternionElement(ONE, ZERO, ZERO, ZERO),
    QuaternionElement(ZERO, ONE, ZERO, ZERO),
    QuaternionElement(ZERO, ZERO, ONE, ZERO),
    QuaternionElement(ZERO, ZERO, ZERO, ONE),
)


def quaternion_mul(x: QuaternionElement, y: QuaternionElement) -> QuaternionElement:
    a1, b1, c1, d1 = x.coords()
    a2, b2, c2, d2 = y.coords()
    return QuaternionElement(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


# ---- matrix images ----
def _x_matrix() -> SuperMap:
    """e0 -> e1, e1 -> 2 e0."""
    return SuperMap.build(K11, K11, 1, {(1, 0): 1, (0, 1): 2})


def _y_matrix() -> SuperMap:
    """e0 -> e1, e1 -> -2 e0."""
    return SuperMap.build(K11, K11, 1, {(1, 0): 1, (0, 1): -2})


def cl2_matrix_iso() -> Tuple[SuperMap, SuperMap]:
    return _x_matrix(), _y_matrix().scale(ZETA4)


def cl8_matrix_iso() -> List[SuperMap]:
    """Generators of Cl_8 on (k^{1|1})^{(x)4}: Cl_8 = Cl_2 (x) Cl_2 (x) Cl_2 (x) Cl_2 with Koszul signs."""
    x, y = cl2_matrix_iso()
    spaces = (K11,) * 4
    gens = []
    for slot in range(4):
        gens.append(slot_operator(spaces, slot, x))
        gens.append(slot_operator(spaces, slot, y))
    return gens


def monomial_images(gens: Sequence[SuperMap]) -> List[SuperMap]:
    """Images of alpha_S for every bitmask S, built incrementally."""
    space = gens[0].source
    out = [identity(space)]
    for m in range(1, 2 ** len(gens)):
        top = m.bit_length() - 1
        out.append(compose(out[m ^ (1 << top)], gens[top]))
    return out


def image_of(x: CliffordElement, images: Sequence[SuperMap]) -> SuperMap:
    acc = None
    for m, c in x.terms.items():
        term = images[m].scale(c)
        acc = term if acc is None else _loose_add(acc, term)
    return acc if acc is not None else zero_map(images[0].source, images[0].target)


def _loose_add(f: SuperMap, g: SuperMap) -> SuperMap:
    out = dict(f.entries)
    for k, v in g.entries.items():
        out[k] = out[k] + v if k in out else v
    par = f.parity if f.entries else g.parity
    return SuperMap._trusted(f.source, f.target, par, out)


def _flat(f: SuperMap) -> Dict[int, CycNumber]:
    width = f.source.dim
    return {r * width + c: v for (r, c), v in f.entries.items()}


def monomial_rank(images: Sequence[SuperMap]) -> int:
    """Rank of the span of the given maps; blocks with disjoint supports are ranked separately."""
    return linalg.block_rank([_flat(f) for f in images])


def preimage(target: SuperMap, images: Sequence[SuperMap]) -> Optional[Dict[int, CycNumber]]:
    """Coefficients c_S with sum c_S image(alpha_S) == target (images assumed independent)."""
    vecs = [_flat(f) for f in images]
    tvec = _flat(target)
    coeffs: Dict[int, CycNumber] = {}
    covered = set()
    for comp in linalg.components(vecs):
        coords = set()
        for k in comp:
            coords.update(vecs[k])
        if not coords & set(tvec):
            continue
        covered |= coords
        cols = sorted(coords)
        pos = {c: r for r, c in enumerate(cols)}
        rows = [dict() for _ in cols]
        for j, k in enumerate(comp):
            for c, v in vecs[k].items():
                rows[pos[c]][j] = v
        rhs = {pos[c]: v for c, v in tvec.items() if c in pos}
        sol = linalg.solve(rows, rhs, len(comp))
        if sol is None:
            return None
        for j, v in sol.items():
            coeffs[comp[j]] = v
    if not set(tvec) <= covered:
        return None
    return coeffs


def check_relations(gens: Sequence[SuperMap]) -> List[Tuple[str, bool]]:
    out = []
    V = gens[0].source
    two = identity(V).scale(2)
    for i, g in enumerate(gens):
        out.append((f"alpha_{i + 1}^2 = 2", compose(g, g) == two))
        for j in range(i + 1, len(gens)):
            h = gens[j]
            out.append((f"alpha_{i + 1} alpha_{j + 1} = -alpha_{j + 1} alpha_{i + 1}",
                        compose(g, h) == -compose(h, g)))
    return out


# ---- Cl_4 -> Cl_4^op ----
# Inside Cl_4: H spanned by 1, i = alpha_1 alpha_2 / 2, j = alpha_1 alpha_3 / 2, ij and
# End(k^{1|1}) spanned by 1, alpha_4 -> x, u = alpha_1 alpha_2 alpha_3 / 2 -> y, alpha_4 u.
# alpha_k = c h_a u for k <= 3, as (a, c).
ALPHA_SPLIT = ((3, 1), (2, 1), (1, -1))
# i -> -i and j -> -j on H, hence ij -> ji = -ij.
QUATERNION_OP_SIGNS = (1, -1, -1, -1)


def _lift(x: CliffordElement, n: int) -> CliffordElement:
    return CliffordElement(n, dict(x.terms))


def signed_transpose(f: SuperMap) -> SuperMap:
    """[[a, b], [c, d]] -> [[a, -c], [b, d]] on End(k^{1|1})."""
    e = f.entries
    moved = {(0, 0): e.get((0, 0), ZERO), (0, 1): -e.get((1, 0), ZERO),
             (1, 0): e.get((0, 1), ZERO), (1, 1): e.get((1, 1), ZERO)}
    return SuperMap.build(f.target, f.source, f.parity, {k: v for k, v in moved.items() if v})


def _quaternion_factor() -> List[CliffordElement]:
    return [_lift(h, 4) for h in _cliff2_images()[0]]


def _end_factor() -> Tuple[List[CliffordElement], List[SuperMap]]:
    """Basis 1, alpha_4, u, alpha_4 u of the End(k^{1|1}) factor and its matrices."""
    a4 = CliffordElement.generator(4, 4)
    u = _lift(_cliff2_images()[1], 4)
    x, y = _x_matrix(), _y_matrix()
    return [CliffordElement.one(4), a4, u, cl_mul(a4, u)], [identity(K11), x, y, compose(x, y)]


def coordinates(x: CliffordElement, basis: Sequence[CliffordElement]) -> Optional[Dict[int, CycNumber]]:
    """Coefficients of x in basis, or None when x is outside its span."""
    cols = sorted({m for b in basis for m in b.terms} | set(x.terms))
    pos = {m: r for r, m in enumerate(cols)}
    rows = [dict() for _ in cols]
    for j, b in enumerate(basis):
        for m, c in b.terms.items():
            rows[pos[m]][j] = c
    return linalg.solve(rows, {pos[m]: c for m, c in x.terms.items()}, len(basis))


def _end_matrix(e: CliffordElement) -> SuperMap:
    elems, mats = _end_factor()
    coords = coordinates(e, elems)
    if coords is None:
        raise DomainError(f"{e} is not in the End(k^{{1|1}}) factor")
    acc = zero_map(K11, K11, e.parity() or 0)
    for k, c in coords.items():
        acc = acc + mats[k].scale(c)
    return acc


def end_op(e: CliffordElement) -> CliffordElement:
    """Signed transpose on the End(k^{1|1}) factor of Cl_4."""
    elems, mats = _end_factor()
    coords = preimage(signed_transpose(_end_matrix(e)), mats)
    if coords is None:
        raise DomainError(f"signed transpose of {e} left the End(k^{{1|1}}) factor")
    acc = CliffordElement(4)
    for k, c in coords.items():
        acc = acc + elems[k].scale(c)
    return acc


def cl_op_iso() -> List[CliffordElement]:
    """Images of alpha_1..alpha_4 under Cl_4 = H (x) End(k^{1|1}) -> its opposite.

    H -> H^op sends i, j to -i, -j and End(k^{1|1}) -> End^op is the signed
    transpose. The factors commute, so c h_a u goes to c h_a' u'.
    """
    hq = _quaternion_factor()
    u_op = end_op(_end_factor()[0][2])
    betas = [cl_mul(hq[a].scale(c * QUATERNION_OP_SIGNS[a]), u_op) for a, c in ALPHA_SPLIT]
    betas.append(end_op(CliffordElement.generator(4, 4)))
    log.debug("Cl4 op images %s", betas)
    return betas


def op_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """x *op y = (-1)^{|x||y|} y x."""
    px, py = x.parity(), y.parity()
    return cl_mul(y, x).scale(sign((px or 0) * (py or 0)))


def _op_images(betas: Sequence[CliffordElement]) -> List[CliffordElement]:
    n = len(betas)
    out = [CliffordElement.one(n)]
    for m in range(1, 2 ** n):
        top = m.bit_length() - 1
        out.append(op_mul(out[m ^ (1 << top)], betas[top]))
    return out


def _apply_linear(x: CliffordElement, images: Sequence[CliffordElement]) -> CliffordElement:
    acc = CliffordElement(images[0].n)
    for m, c in x.terms.items():
        acc = acc + images[m].scale(c)
    return acc


# ---- appendix isomorphisms ----
def appendix_iso_verify(which: str) -> List[CheckRecord]:
    if which == "cliff1":
        return _verify_cliff1()
    if which == "cliff2":
        return _verify_cliff2()
    if which == "cliff3":
        return _verify_cliff3()
    raise DomainError(f"unknown appendix isomorphism {which!r}")


def _verify_cliff1() -> List[CheckRecord]:
    x, y = _x_matrix(), _y_matrix()
    two = identity(K11).scale(2)
    recs = [
        record("cliff1.left-square", "Cl1 (x) Cl1^op = End(k^{1|1})", compose(x, x) == two),
        # alpha *op alpha = -alpha^2 = -2
        record("cliff1.right-square", "Cl1 (x) Cl1^op = End(k^{1|1})", compose(y, y) == two.scale(-1)),
        record("cliff1.anticommute", "Cl1 (x) Cl1^op = End(k^{1|1})", compose(x, y) == -compose(y, x)),
    ]
    images = [identity(K11), x, y, compose(x, y)]
    recs.append(record("cliff1.bijective", "Cl1 (x) Cl1^op = End(k^{1|1})", monomial_rank(images) == 4,
                       witness=f"rank {monomial_rank(images)}"))
    return recs


def _cliff2_images() -> Tuple[List[CliffordElement], CliffordElement]:
    """Images of 1, i, j, ij and of 1 (x) alpha in Cl_3."""
    n = 3
    i_img = cl_from_word(n, [1, 2]).scale(HALF)
    j_img = cl_from_word(n, [1, 3]).scale(HALF)
    u = cl_from_word(n, [1, 2, 3]).scale(HALF)
    return [CliffordElement.one(n), i_img, j_img, cl_mul(i_img, j_img)], u


def _verify_cliff2() -> List[CheckRecord]:
    anchor = "Cl3 = H (x) Cl1^op"
    hq, u = _cliff2_images()
    recs = []
    ok = True
    witness = None
    for a, qa in enumerate(QUATERNION_BASIS):
        for b, qb in enumerate(QUATERNION_BASIS):
            prod = quaternion_mul(qa, qb)
            expect = CliffordElement(3)
            for k, c in enumerate(prod.coords()):
                if c:
                    expect = expect + hq[k].scale(c)
            if cl_mul(hq[a], hq[b]) != expect:
                ok = False
                witness = witness or (a, b)
    recs.append(record("cliff2.quaternion-hom", anchor, ok, witness))
    recs.append(record("cliff2.i-square", anchor, cl_mul(hq[1], hq[1]) == CliffordElement.scalar(3, -1)))
    recs.append(record("cliff2.u-square", anchor, cl_mul(u, u) == CliffordElement.scalar(3, -2)))
    central = all(cl_mul(u, h) == cl_mul(h, u) for h in hq)
    recs.append(record("cliff2.u-commutes-with-H", anchor, central))
    basis = hq + [cl_mul(h, u) for h in hq]
    r = vector_rank(basis)
    recs.append(record("cliff2.bijective", anchor, r == 8, witness=f"rank {r}"))
    return recs


def _cliff3_factor_records(anchor: str, imgs: Sequence[CliffordElement]) -> List[CheckRecord]:
    hq = _quaternion_factor()
    elems, mats = _end_factor()
    u = elems[2]
    split_bad = [k + 1 for k, (a, c) in enumerate(ALPHA_SPLIT)
                 if cl_mul(hq[a], u).scale(c) != CliffordElement.generator(4, k + 1)]
    recs = [record("cliff3.quaternion-split", anchor, not split_bad, split_bad or None)]
    transpose_bad = None
    for s, f in enumerate(mats):
        for t, g in enumerate(mats):
            lhs = signed_transpose(compose(f, g))
            rhs = compose(signed_transpose(g), signed_transpose(f)).scale(sign(f.parity * g.parity))
            if lhs != rhs:
                transpose_bad = transpose_bad or (s, t)
    recs.append(record("cliff3.signed-transpose-anti-hom", anchor, transpose_bad is None, transpose_bad))
    factor_bad = None
    for a, h in enumerate(hq):
        for b, e in enumerate(elems):
            expect = cl_mul(h.scale(QUATERNION_OP_SIGNS[a]), end_op(e))
            if _apply_linear(cl_mul(h, e), imgs) != expect:
                factor_bad = factor_bad or (a, b)
    recs.append(record("cliff3.factorwise", anchor, factor_bad is None, factor_bad))
    return recs


def _verify_cliff3() -> List[CheckRecord]:
    anchor = "Cl4 = Cl4^op"
    betas = cl_op_iso()
    imgs = _op_images(betas)
    monos = all_monomials(4)
    bad = None
    for s in range(16):
        for t in range(16):
            lhs = _apply_linear(cl_mul(monos[s], monos[t]), imgs)
            rhs = op_mul(imgs[s], imgs[t])
            if lhs != rhs:
                bad = (mask_subset(s), mask_subset(t))
                break
        if bad:
            break
    recs = _cliff3_factor_records(anchor, imgs)
    recs.append(record("cliff3.anti-hom-all-monomials", anchor, bad is None, bad))
    recs.append(record("cliff3.generators-odd", anchor, all(b.parity() == 1 for b in betas)))
    r = vector_rank(imgs)
    recs.append(record("cliff3.bijective", anchor, r == 16, witness=f"rank {r}"))
    return recs


# ---- periodicity ----
@dataclass
class PeriodicityData:
    p: int
    module_U: SuperSpace
    actions: List[SuperMap]
    idempotent_eps: CliffordElement


def periodicity_data(p: int) -> PeriodicityData:
    if p == 2:
        gens = list(cl2_matrix_iso())
    elif p == 8:
        gens = cl8_matrix_iso()
    else:
        raise DomainError(f"periodicity is 2 or 8, got {p}")
    U = gens[0].source
    images = monomial_images(gens)
    e00 = SuperMap.build(U, U, 0, {(0, 0): 1})
    coeffs = preimage(e00, images)
    if coeffs is None:
        raise DomainError("matrix unit has no preimage; generators do not span End(U)")
    eps = CliffordElement(p, coeffs)
    log.debug("periodicity p=%s eps=%s", p, eps)
    return PeriodicityData(p, U, gens, eps)


def left_ideal_dims(eps: CliffordElement) -> SuperSpace:
    """Graded dimension of eps * Cl_n."""
    prods = [cl_mul(eps, m) for m in all_monomials(eps.n)]
    even = [p.even_part() for p in prods]
    odd = [p.odd_part() for p in prods]
    return SuperSpace(vector_rank(even), vector_rank(odd))
