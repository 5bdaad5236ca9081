# supervec.py - super vector spaces, parity-tagged maps and the Koszul sign rule
#
# Basis convention: indices 0..dim_even-1 are even, the rest odd.
# Tensor bases list even basis pairs first, then odd ones, each block in
# row-major order of the factor indices.
import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .scalars import ONE, ZERO, CycNumber, DomainError, as_cyc, sign

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuperSpace:
    dim_even: int
    dim_odd: int

    def __post_init__(self):
        if self.dim_even < 0 or self.dim_odd < 0:
            raise DomainError(f"negative dimension ({self.dim_even}|{self.dim_odd})")

    @property
    def dim(self) -> int:
        return self.dim_even + self.dim_odd

    def parity(self, i: int) -> int:
        return 0 if i < self.dim_even else 1

    def parities(self) -> List[int]:
        return [0] * self.dim_even + [1] * self.dim_odd

    def __str__(self):
        return f"({self.dim_even}|{self.dim_odd})"


K = SuperSpace(1, 0)
K_ODD = SuperSpace(0, 1)
K11 = SuperSpace(1, 1)


class PiGenerator:
    """The formal odd symbol spanning k[1]."""
    parity = 1

    def __repr__(self):
        return "π"


PI = PiGenerator()


@lru_cache(maxsize=None)
def multi_tensor(spaces: Tuple[SuperSpace, ...]) -> Tuple[SuperSpace, Dict[tuple, int]]:
    """Tensor product of several spaces with its index map {(i1, .., ik): position}."""
    combos: List[tuple] = [()]
    pars: List[int] = [0]
    for sp in spaces:
        combos = [c + (i,) for c in combos for i in range(sp.dim)]
        pars = [p ^ sp.parity(i) for p in pars for i in range(sp.dim)]
    even = [c for c, p in zip(combos, pars) if p == 0]
    odd = [c for c, p in zip(combos, pars) if p == 1]
    index = {c: k for k, c in enumerate(even + odd)}
    return SuperSpace(len(even), len(odd)), index


def tensor_space(V: SuperSpace, W: SuperSpace) -> Tuple[SuperSpace, Dict[Tuple[int, int], int]]:
    return multi_tensor((V, W))


def pi_space(V: SuperSpace) -> SuperSpace:
    return SuperSpace(V.dim_odd, V.dim_even)


def pi_power_space(V: SuperSpace, k: int) -> SuperSpace:
    return pi_space(V) if k % 2 else V


def pi_index(V: SuperSpace, k: int, i: int) -> int:
    """Position of base vector i of V inside Pi^k(V)."""
    if k % 2 == 0:
        return i
    if i < V.dim_even:
        return V.dim_odd + i
    return i - V.dim_even


@dataclass(frozen=True, eq=False)
class SuperMap:
    source: SuperSpace
    target: SuperSpace
    parity: int
    entries: Dict[Tuple[int, int], CycNumber]
    _cols: Optional[dict] = field(default=None, repr=False, compare=False)

    @classmethod
    def build(cls, source: SuperSpace, target: SuperSpace, parity: int, entries) -> "SuperMap":
        parity %= 2
        clean = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for (r, c), v in items:
            if not (0 <= r < target.dim and 0 <= c < source.dim):
                raise DomainError(f"entry ({r},{c}) outside a {target}x{source} map")
            v = as_cyc(v)
            if not v:
                continue
            if target.parity(r) != (source.parity(c) + parity) % 2:
                raise DomainError(f"entry ({r},{c}) breaks parity {parity} homogeneity")
            clean[(r, c)] = clean[(r, c)] + v if (r, c) in clean else v
            if not clean[(r, c)]:
                del clean[(r, c)]
        return cls(source, target, parity, clean)

    @classmethod
    def _trusted(cls, source, target, parity, entries) -> "SuperMap":
        return cls(source, target, parity % 2, {k: v for k, v in entries.items() if v})

    @classmethod
    def from_dense(cls, source: SuperSpace, target: SuperSpace, parity: int, rows) -> "SuperMap":
        ents = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    ents[(r, c)] = v
        return cls.build(source, target, parity, ents)

    def columns(self) -> Dict[int, List[Tuple[int, CycNumber]]]:
        if self._cols is None:
            cols: Dict[int, list] = {}
            for (r, c), v in self.entries.items():
                cols.setdefault(c, []).append((r, v))
            object.__setattr__(self, "_cols", cols)
        return self._cols

    def rows(self) -> List[Dict[int, CycNumber]]:
        out = [dict() for _ in range(self.target.dim)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def to_dense(self) -> List[List[CycNumber]]:
        m = [[ZERO] * self.source.dim for _ in range(self.target.dim)]
        for (r, c), v in self.entries.items():
            m[r][c] = v
        return m

    def apply(self, vec: Dict[int, CycNumber]) -> Dict[int, CycNumber]:
        cols = self.columns()
        out: Dict[int, CycNumber] = {}
        for c, x in vec.items():
            for r, v in cols.get(c, ()):
                out[r] = out[r] + v * x if r in out else v * x
        return {r: v for r, v in out.items() if v}

    def is_zero(self) -> bool:
        return not self.entries

    def scale(self, c) -> "SuperMap":
        c = as_cyc(c)
        return SuperMap._trusted(self.source, self.target, self.parity,
                                 {k: v * c for k, v in self.entries.items()})

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other: "SuperMap") -> "SuperMap":
        _same_shape(self, other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.parity != other.parity:
            raise DomainError("sum of maps of different parity; use MixedMap")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return SuperMap._trusted(self.source, self.target, self.parity, out)

    def __sub__(self, other: "SuperMap") -> "SuperMap":
        return self + (-other)

    def __matmul__(self, other: "SuperMap") -> "SuperMap":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, SuperMap):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        if self.entries != other.entries:
            return False
        return self.is_zero() or self.parity == other.parity

    __hash__ = None

    def ratio_to(self, other: "SuperMap") -> Optional[CycNumber]:
        """The scalar s with self == s * other, or None."""
        if self.source != other.source or self.target != other.target:
            return None
        if other.is_zero():
            return ONE if self.is_zero() else None
        if set(self.entries) != set(other.entries):
            return None
        k0 = next(iter(other.entries))
        s = self.entries[k0] / other.entries[k0]
        for k, v in other.entries.items():
            if self.entries[k] != v * s:
                return None
        return s

    def __str__(self):
        return f"SuperMap{self.source}->{self.target} |{self.parity}| nnz={len(self.entries)}"


def _same_shape(f: SuperMap, g: SuperMap):
    if f.source != g.source or f.target != g.target:
        raise DomainError(f"shape mismatch {f.source}->{f.target} vs {g.source}->{g.target}")


def identity(V: SuperSpace) -> SuperMap:
    return SuperMap(V, V, 0, {(i, i): ONE for i in range(V.dim)})


def scalar_map(V: SuperSpace, c) -> SuperMap:
    return identity(V).scale(c)


def zero_map(source: SuperSpace, target: SuperSpace, parity: int = 0) -> SuperMap:
    return SuperMap(source, target, parity % 2, {})


def compose(g: SuperMap, f: SuperMap) -> SuperMap:
    """g o f."""
    if f.target != g.source:
        raise DomainError(f"cannot compose {g.source}->{g.target} after {f.source}->{f.target}")
    gcols = g.columns()
    out: Dict[Tuple[int, int], CycNumber] = {}
    for (r, c), v in f.entries.items():
        for r2, w in gcols.get(r, ()):
            key = (r2, c)
            out[key] = out[key] + w * v if key in out else w * v
    return SuperMap._trusted(f.source, g.target, f.parity + g.parity, out)


def compose_all(*maps: SuperMap) -> SuperMap:
    """compose_all(h, g, f) == h o g o f."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def tensor_map(f: SuperMap, g: SuperMap) -> SuperMap:
    """(f (x) g)(v1 (x) v2) = (-1)^{|v1||g|} f(v1) (x) g(v2)."""
    src, sidx = tensor_space(f.source, g.source)
    tgt, tidx = tensor_space(f.target, g.target)
    out = {}
    gp = g.parity
    for (r1, c1), v1 in f.entries.items():
        s = -1 if (gp and f.source.parity(c1)) else 1
        for (r2, c2), v2 in g.entries.items():
            val = v1 * v2
            out[(tidx[(r1, r2)], sidx[(c1, c2)])] = -val if s < 0 else val
    return SuperMap._trusted(src, tgt, f.parity + g.parity, out)


def tensor_maps(*maps: SuperMap) -> SuperMap:
    """Koszul tensor product of several maps on flat multi-tensor bases."""
    srcs = tuple(m.source for m in maps)
    tgts = tuple(m.target for m in maps)
    src, sidx = multi_tensor(srcs)
    tgt, tidx = multi_tensor(tgts)
    terms = [((), (), ONE, 0)]
    for m in maps:
        nxt = []
        for rows, cols, val, par in terms:
            for (r, c), v in m.entries.items():
                s = val * v
                if m.parity and par:
                    s = -s
                nxt.append((rows + (r,), cols + (c,), s, par ^ m.source.parity(c)))
        terms = nxt
    out = {}
    for rows, cols, val, _ in terms:
        key = (tidx[rows], sidx[cols])
        out[key] = out[key] + val if key in out else val
    total = sum(m.parity for m in maps)
    return SuperMap._trusted(src, tgt, total, out)


def slot_operator(spaces: Sequence[SuperSpace], k: int, f: SuperMap) -> SuperMap:
    """1 (x) .. (x) f (x) .. (x) 1 with f in slot k."""
    maps = [identity(sp) for sp in spaces]
    if f.source != spaces[k]:
        raise DomainError(f"slot {k} holds {spaces[k]}, map expects {f.source}")
    maps[k] = f
    return tensor_maps(*maps)


def permute_factors(spaces: Sequence[SuperSpace], perm: Sequence[int], koszul: bool = True) -> SuperMap:
    """Reorder tensor factors: factor perm[t] of the source lands in slot t of the target."""
    spaces = tuple(spaces)
    src, sidx = multi_tensor(spaces)
    tgt_spaces = tuple(spaces[p] for p in perm)
    tgt, tidx = multi_tensor(tgt_spaces)
    out = {}
    for combo, col in sidx.items():
        pars = [spaces[s].parity(i) for s, i in enumerate(combo)]
        inv = 0
        if koszul:
            for a in range(len(perm)):
                for b in range(a + 1, len(perm)):
                    if perm[a] > perm[b]:
                        inv += pars[perm[a]] * pars[perm[b]]
        row = tidx[tuple(combo[p] for p in perm)]
        out[(row, col)] = sign(inv)
    return SuperMap._trusted(src, tgt, 0, out)


def reassociate(U: SuperSpace, V: SuperSpace, W: SuperSpace) -> SuperMap:
    """U (x) (V (x) W) -> (U (x) V) (x) W on nested bases; no signs."""
    vw, i_vw = tensor_space(V, W)
    src, i_src = tensor_space(U, vw)
    uv, i_uv = tensor_space(U, V)
    tgt, i_tgt = tensor_space(uv, W)
    out = {}
    for u in range(U.dim):
        for v in range(V.dim):
            for w in range(W.dim):
                out[(i_tgt[(i_uv[(u, v)], w)], i_src[(u, i_vw[(v, w)])])] = ONE
    return SuperMap._trusted(src, tgt, 0, out)


def symmetry(kind: str, V: SuperSpace, W: SuperSpace) -> SuperMap:
    if kind not in ("tau", "sigma", "τ", "σ"):
        raise DomainError(f"unknown symmetry kind {kind!r}")
    return permute_factors((V, W), (1, 0), koszul=kind in ("tau", "τ"))


# ---- Pi-structures ----
def xi(V: SuperSpace) -> SuperMap:
    """The neutral odd isomorphism V -> Pi(V)."""
    P = pi_space(V)
    return SuperMap(V, P, 1, {(pi_index(V, 1, i), i): ONE for i in range(V.dim)})


def xi_power(n: int, m: int, V: SuperSpace, structure: str = "neutral") -> SuperMap:
    """xi^{n,m}: Pi^n(V) -> Pi^m(V) as the composite of single xi steps.

    structure "neutral": every step has coefficient 1.
    structure "right":   the step out of Pi^j(V) multiplies v (x) pi^j by (-1)^{|v|+j}.
    """
    if n < 0 or m < 0:
        raise DomainError("Pi powers are non-negative")
    if structure not in ("neutral", "right"):
        raise DomainError(f"unknown Pi-structure {structure!r}")
    src = pi_power_space(V, n)
    tgt = pi_power_space(V, m)
    lo, hi = min(n, m), max(n, m)
    out = {}
    for i in range(V.dim):
        e = 0
        if structure == "right":
            p = V.parity(i)
            e = sum(p + j for j in range(lo, hi))
        out[(pi_index(V, m, i), pi_index(V, n, i))] = sign(e)
    return SuperMap(src, tgt, (m - n) % 2, out)


def xi_inverse(V: SuperSpace) -> SuperMap:
    return xi_power(1, 0, V)


def pi_right(V: SuperSpace) -> Tuple[SuperSpace, SuperMap]:
    """Pi_r(V) = V (x) k[1] with xi_r(v) = (-1)^{|v|} v (x) pi."""
    return pi_space(V), xi_power(0, 1, V, structure="right")


def pi_functor(f: SuperMap) -> SuperMap:
    """Pi(f) = (-1)^{|f|} xi_Y f xi_X^{-1} for the neutral structure."""
    out = compose_all(xi(f.target), f, xi_inverse(f.source))
    return out.scale(sign(f.parity))


# ---- subspaces ----
def eigenspace(f: SuperMap, lam) -> Tuple[SuperSpace, SuperMap]:
    """ker(f - lam) with homogeneous basis (evens first) and its inclusion."""
    if f.source != f.target:
        raise DomainError("eigenspace needs an endomorphism")
    if f.parity != 0 and not f.is_zero():
        raise DomainError("eigenspace needs an even map")
    V = f.source
    lam = as_cyc(lam)
    rows = f.rows()
    for i in range(V.dim):
        v = rows[i].get(i, ZERO) - lam
        if v:
            rows[i][i] = v
        else:
            rows[i].pop(i, None)
    vecs = linalg.nullspace(rows, V.dim)
    vecs.sort(key=lambda vec: (V.parity(min(vec)), min(vec)))
    return span_inclusion(V, vecs)


def span_inclusion(V: SuperSpace, vecs: List[Dict[int, CycNumber]]) -> Tuple[SuperSpace, SuperMap]:
    """Subspace spanned by homogeneous vectors (listed evens first) and its inclusion."""
    pars = []
    for vec in vecs:
        ps = {V.parity(i) for i in vec}
        if len(ps) != 1:
            raise DomainError("span_inclusion needs homogeneous vectors")
        pars.append(ps.pop())
    if pars != sorted(pars):
        raise DomainError("basis vectors must be listed evens first")
    E = SuperSpace(pars.count(0), pars.count(1))
    ents = {(r, k): v for k, vec in enumerate(vecs) for r, v in vec.items()}
    return E, SuperMap.build(E, V, 0, ents)


def restrict(f: SuperMap, incl_src: SuperMap, incl_tgt: SuperMap) -> SuperMap:
    """The map g with incl_tgt o g == f o incl_src; DomainError if f leaves the subspace."""
    fi = compose(f, incl_src)
    cols = fi.columns()
    rhs = [dict(cols.get(c, ())) for c in range(fi.source.dim)]
    sols = linalg.solve_columns(incl_tgt.rows(), rhs, incl_tgt.source.dim)
    if sols is None:
        raise DomainError("image is not contained in the target subspace")
    ents = {(r, c): v for c, sol in enumerate(sols) for r, v in sol.items()}
    return SuperMap.build(incl_src.source, incl_tgt.source, f.parity, ents)


def is_invertible(f: SuperMap) -> bool:
    if f.source.dim != f.target.dim:
        return False
    return linalg.rank(f.rows()) == f.source.dim


def inverse_map(f: SuperMap) -> SuperMap:
    if f.source.dim != f.target.dim:
        raise DomainError("only square maps are invertible")
    inv_rows = linalg.inverse(f.rows(), f.source.dim)
    ents = {(r, c): v for r, row in enumerate(inv_rows) for c, v in row.items()}
    return SuperMap.build(f.target, f.source, f.parity, ents)


# ---- sums and brackets ----
def direct_sum(V: SuperSpace, W: SuperSpace) -> Tuple[SuperSpace, SuperMap, SuperMap]:
    S = SuperSpace(V.dim_even + W.dim_even, V.dim_odd + W.dim_odd)

    def pos_v(i):
        return i if i < V.dim_even else W.dim_even + i

    def pos_w(j):
        return V.dim_even + j if j < W.dim_even else V.dim + j

    inj_v = SuperMap(V, S, 0, {(pos_v(i), i): ONE for i in range(V.dim)})
    inj_w = SuperMap(W, S, 0, {(pos_w(j), j): ONE for j in range(W.dim)})
    return S, inj_v, inj_w


def direct_sum_map(f: SuperMap, g: SuperMap) -> SuperMap:
    if f.parity != g.parity and not (f.is_zero() or g.is_zero()):
        raise DomainError("direct sum of maps of different parity")
    S, iv, iw = direct_sum(f.source, g.source)
    T, jv, jw = direct_sum(f.target, g.target)
    ents = {}
    for (r, c), v in f.entries.items():
        ents[(next(iter(jv.columns()[r]))[0], next(iter(iv.columns()[c]))[0])] = v
    for (r, c), v in g.entries.items():
        ents[(next(iter(jw.columns()[r]))[0], next(iter(iw.columns()[c]))[0])] = v
    par = f.parity if not f.is_zero() else g.parity
    return SuperMap.build(S, T, par, ents)


def supercommutator(f: SuperMap, g: SuperMap) -> SuperMap:
    """[f, g] = fg - (-1)^{|f||g|} gf."""
    return compose(f, g) - compose(g, f).scale(sign(f.parity * g.parity))


_RANDOM_VALUES = (
    CycNumber.from_int(1), CycNumber.from_int(-1), CycNumber.from_int(2),
    CycNumber.zeta(4), CycNumber.zeta(2), CycNumber.zeta(12),
)


def random_map(source: SuperSpace, target: SuperSpace, parity: int, rng: random.Random,
               density: float = 0.6) -> SuperMap:
    """Seeded random homogeneous map with small cyclotomic entries."""
    ents = {}
    for r in range(target.dim):
        for c in range(source.dim):
            if target.parity(r) != (source.parity(c) + parity) % 2:
                continue
            if rng.random() < density:
                ents[(r, c)] = rng.choice(_RANDOM_VALUES)
    return SuperMap.build(source, target, parity, ents)


@dataclass(frozen=True)
class MixedMap:
    """An inhomogeneous map stored as its even and odd parts."""
    even: SuperMap
    odd: SuperMap

    def __post_init__(self):
        _same_shape(self.even, self.odd)
        if self.even.parity != 0 and not self.even.is_zero():
            raise DomainError("even part is not even")
        if self.odd.parity != 1 and not self.odd.is_zero():
            raise DomainError("odd part is not odd")

    @classmethod
    def of(cls, f: SuperMap) -> "MixedMap":
        z = zero_map(f.source, f.target, 1 - f.parity)
        return cls(f, z) if f.parity == 0 else cls(z, f)

    def even_part(self) -> SuperMap:
        return self.even

    def odd_part(self) -> SuperMap:
        return self.odd

    def __add__(self, other: "MixedMap") -> "MixedMap":
        return MixedMap(_add_keep(self.even, other.even, 0), _add_keep(self.odd, other.odd, 1))

    def compose(self, other: "MixedMap") -> "MixedMap":
        """self o other."""
        e = _add_keep(compose(self.even, other.even), compose(self.odd, other.odd), 0)
        o = _add_keep(compose(self.even, other.odd), compose(self.odd, other.even), 1)
        return MixedMap(e, o)

    def apply(self, vec):
        out = dict(self.even.apply(vec))
        for r, v in self.odd.apply(vec).items():
            out[r] = out[r] + v if r in out else v
        return {r: v for r, v in out.items() if v}


def _add_keep(f: SuperMap, g: SuperMap, parity: int) -> SuperMap:
    s = f + g
    return s if not s.is_zero() else zero_map(f.source, f.target, parity)


def homogeneous(m: MixedMap) -> SuperMap:
    if not m.even.is_zero() and not m.odd.is_zero():
        raise DomainError("map has both an even and an odd part")
    return m.odd if m.even.is_zero() and not m.odd.is_zero() else m.even


def basis_vector(i: int) -> Dict[int, CycNumber]:
    return {i: ONE}


def vector_parity(V: SuperSpace, vec: Dict[int, CycNumber]) -> Optional[int]:
    ps = {V.parity(i) for i, v in vec.items() if v}
    return ps.pop() if len(ps) == 1 else None
