# factor_systems.py - B- and S-factor systems over Z/q
#
# A factor system holds its three functions as callables and materializes dense
# tables on demand. When every value is a 16th root of unity (all builtins,
# coboundaries of root-valued functions) the conditions are checked on
# exponents in Z/16, otherwise on CycNumbers with both sides cross-multiplied.
# q = 0 stands for Z-grading: values come from the closed forms and only
# pointwise evaluation is available.
import logging
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import comb
from typing import Callable, Dict, List, Optional, Tuple

from .report import CheckRecord, record
from .scalars import ONE, ZETA4, ZETA8, ZETA16, CycNumber, DomainError, as_cyc, sign

log = logging.getLogger(__name__)

F3 = Callable[[int, int, int], CycNumber]
F2 = Callable[[int, int], CycNumber]

_ANCHOR = {
    1: "w1(a;b,c) w1(a;b+c,d) = w1(a;b,c+d) w1(a;c,d)",
    2: "w2(a+b,c;d) w2(a,b;d) = w2(b,c;d) w2(a,b+c;d)",
    3: "(-1)^{abcd p} w2(a,b;c) w2(a,b;d)",
    4: "w1(a;b,c) w1(a;c,b)^-1 = w2(b,a;c) w2(a,b;c)^-1",
    5: "w1(a;b,c) w2(b,c;a) = ws(a,b) ws(a,c) ws(a,b+c)^-1",
    6: "w1(c;a,b) w2(a,b;c) = ws(a,c) ws(b,c)",
    7: "ws(a,b) = ws(b,a)",
}


def _check_modulus(q: int):
    if q < 0 or q % 2:
        raise DomainError(f"modulus must be even and non-negative, got {q}")


@dataclass(frozen=True, eq=False)
class FactorSystem:
    q: int
    parity: int
    w1: F3
    w2: F3
    ws: Optional[F2] = None
    name: str = "w"

    def __post_init__(self):
        _check_modulus(self.q)
        object.__setattr__(self, "parity", self.parity % 2)

    # ---- evaluation ----
    def _r(self, x: int) -> int:
        return x % self.q if self.q else x

    def omega1(self, a: int, b: int, c: int) -> CycNumber:
        if self.q:
            return self.table1[self._r(a)][self._r(b)][self._r(c)]
        return as_cyc(self.w1(a, b, c))

    def omega2(self, a: int, b: int, c: int) -> CycNumber:
        if self.q:
            return self.table2[self._r(a)][self._r(b)][self._r(c)]
        return as_cyc(self.w2(a, b, c))

    def omega_sharp(self, a: int, b: int) -> CycNumber:
        if self.ws is None:
            raise DomainError(f"{self.name} is a B-factor system; it has no sharp component")
        if self.q:
            return self.table_sharp[self._r(a)][self._r(b)]
        return as_cyc(self.ws(a, b))

    @property
    def is_s_system(self) -> bool:
        return self.ws is not None

    # ---- dense tables ----
    def _residues(self) -> range:
        if not self.q:
            raise DomainError("tables need a finite modulus")
        return range(self.q)

    @cached_property
    def table1(self) -> List[List[List[CycNumber]]]:
        r = self._residues()
        return [[[_nonzero(self.w1(a, b, c), self.name) for c in r] for b in r] for a in r]

    @cached_property
    def table2(self) -> List[List[List[CycNumber]]]:
        r = self._residues()
        return [[[_nonzero(self.w2(a, b, c), self.name) for c in r] for b in r] for a in r]

    @cached_property
    def table_sharp(self) -> List[List[CycNumber]]:
        r = self._residues()
        return [[_nonzero(self.ws(a, b), self.name) for b in r] for a in r]

    @cached_property
    def exponents(self) -> Optional[Tuple[list, list, Optional[list]]]:
        """Tables as exponents of zeta16, or None if some value is not a root of unity."""
        try:
            e1 = [[[_exp(v) for v in row] for row in plane] for plane in self.table1]
            e2 = [[[_exp(v) for v in row] for row in plane] for plane in self.table2]
            es = None
            if self.ws is not None:
                es = [[_exp(v) for v in row] for row in self.table_sharp]
        except _NotRoot:
            return None
        return e1, e2, es

    def __str__(self):
        kind = "S" if self.is_s_system else "B"
        return f"{self.name} ({kind}-factor system, q={self.q}, parity={self.parity})"


class _NotRoot(Exception):
    pass


def _exp(v: CycNumber) -> int:
    e = v.root_exponent()
    if e is None:
        raise _NotRoot()
    return e


def _nonzero(v, name: str) -> CycNumber:
    v = as_cyc(v)
    if not v:
        raise DomainError(f"factor system {name} takes the value 0")
    return v


# ---- builtins ----
def binom2(n: int) -> int:
    return comb(n, 2) if n >= 0 else n * (n - 1) // 2


def binomial2_well_defined(q: int) -> bool:
    """n -> C(n,2) mod 2 descends to Z/q."""
    return all(binom2(n + q) % 2 == binom2(n) % 2 for n in range(q))


def _one3(a, b, c):
    return ONE


def _one2(a, b):
    return ONE


def _odd(x: int) -> bool:
    return x % 2 == 1


def builtin(name: str, q: int) -> FactorSystem:
    _check_modulus(q)
    if name == "trivial":
        return FactorSystem(q, 0, _one3, _one3, _one2, "trivial")
    if name == "A":
        if q % 4:
            raise DomainError(f"A needs 4 | q, got q={q}")
        return FactorSystem(
            q, 1, _one3,
            lambda a, b, c: sign(binom2(c) * a * b),
            lambda a, b: sign(binom2(a) * binom2(b)),
            "A")
    if name == "B":
        return FactorSystem(
            q, 1, _one3,
            lambda a, b, c: ZETA4 if _odd(a) and _odd(b) and _odd(c) else ONE,
            lambda a, b: ZETA8 if _odd(a) and _odd(b) else ONE,
            "B")
    if name == "C":
        return FactorSystem(
            q, 0,
            lambda r, s, t: sign(r * s * t),
            lambda r, s, t: sign(r * s * t),
            _one2, "C")
    if name == "D":
        return FactorSystem(
            q, 0,
            lambda r, s, t: sign(r * s * t),
            lambda r, s, t: sign(r * s * t),
            lambda r, s: sign(r * s), "D")
    raise DomainError(f"unknown factor system {name!r}")


BUILTIN_NAMES = ("trivial", "A", "B", "C", "D")


# ---- group structure ----
def fs_mul(x: FactorSystem, y: FactorSystem) -> FactorSystem:
    if x.q != y.q:
        raise DomainError(f"modulus mismatch {x.q} vs {y.q}")
    ws = None
    if x.ws is not None and y.ws is not None:
        ws = lambda a, b: x.omega_sharp(a, b) * y.omega_sharp(a, b)
    return FactorSystem(
        x.q, x.parity + y.parity,
        lambda a, b, c: x.omega1(a, b, c) * y.omega1(a, b, c),
        lambda a, b, c: x.omega2(a, b, c) * y.omega2(a, b, c),
        ws, f"{x.name}*{y.name}")


def fs_inv(x: FactorSystem) -> FactorSystem:
    ws = None
    if x.ws is not None:
        ws = lambda a, b: 1 / x.omega_sharp(a, b)
    return FactorSystem(
        x.q, x.parity,
        lambda a, b, c: 1 / x.omega1(a, b, c),
        lambda a, b, c: 1 / x.omega2(a, b, c),
        ws, f"{x.name}^-1")


def with_parity(x: FactorSystem, parity: int) -> FactorSystem:
    return FactorSystem(x.q, parity, x.w1, x.w2, x.ws, f"{x.name}[p={parity % 2}]")


def type12_factor(x: FactorSystem, symmetric: bool) -> FactorSystem:
    """C*w for type I superbraidings, D*w for type I supersymmetries."""
    return fs_mul(builtin("D" if symmetric else "C", x.q), x)


# ---- coboundaries ----
def coboundary(phi: F2, q: int, name: str = "d(phi)") -> FactorSystem:
    """The even symmetric S-factor system of phi.

    w1(r;s,t) = phi(r,s+t) / (phi(r,s) phi(r,t)) and
    w2(r,s;t) = phi(r+s,t) / (phi(r,t) phi(s,t)), the ratios a rescaled hexagon
    picks up; ws(r,s) = (phi(r,s) phi(s,r))^-1, the normalization under which
    conditions (5) and (6) hold.
    """
    _check_modulus(q)
    if q:
        for r, s in product(range(q), repeat=2):
            _nonzero(phi(r, s), name)

    def p(r, s):
        return as_cyc(phi(r % q if q else r, s % q if q else s))

    return FactorSystem(
        q, 0,
        lambda r, s, t: p(r, s + t) / (p(r, s) * p(r, t)),
        lambda r, s, t: p(r + s, t) / (p(r, t) * p(s, t)),
        lambda r, s: 1 / (p(r, s) * p(s, r)),
        name)


def c_function(r: int, s: int) -> CycNumber:
    return sign(binom2(r * s))


def d_function(x: int, y: int) -> CycNumber:
    return ZETA4 if _odd(x) and _odd(y) else ONE


def zeta4_product(x: int, y: int) -> CycNumber:
    return ZETA4 ** ((x * y) % 4)


def eps(n: int) -> int:
    return -1 if n % 4 == 3 else 1


def a_function(n: int, m: int) -> CycNumber:
    """eps(n)^m zeta4^{-C(n,2) m}."""
    return sign(m if eps(n) < 0 else 0) * ZETA4 ** ((-binom2(n) * m) % 4)


def a_prime_function(n: int, m: int) -> CycNumber:
    return a_function(n, m) * ZETA16 ** ((n * m) % 16)


def rescaled(x: FactorSystem, phi: F2) -> FactorSystem:
    """Factor system of phi*beta when beta carries x: x * d(phi)^-1."""
    return fs_mul(x, fs_inv(coboundary(phi, x.q)))


def is_coboundary_of(x: FactorSystem, phi: F2) -> bool:
    return fs_equal(x, coboundary(phi, x.q), level="S")


# ---- comparison ----
def fs_equal(x: FactorSystem, y: FactorSystem, level: str = "S") -> bool:
    return first_difference(x, y, level) is None


def first_difference(x: FactorSystem, y: FactorSystem, level: str = "S"):
    if x.q != y.q or not x.q:
        raise DomainError("comparison needs equal finite moduli")
    r = range(x.q)
    for a, b, c in product(r, repeat=3):
        if x.omega1(a, b, c) != y.omega1(a, b, c):
            return ("w1", (a, b, c))
        if x.omega2(a, b, c) != y.omega2(a, b, c):
            return ("w2", (a, b, c))
    if level == "S":
        for a, b in product(r, repeat=2):
            if x.omega_sharp(a, b) != y.omega_sharp(a, b):
                return ("ws", (a, b))
    return None


# ---- conditions ----
def first_failure(x: FactorSystem) -> Optional[Tuple[int, tuple]]:
    """(condition number, witness) of the first violated condition, or None."""
    for cond, witness in _violations(x):
        return cond, witness
    return None


def check(x: FactorSystem) -> List[CheckRecord]:
    """One record per condition; the witness is the first violating tuple."""
    first: Dict[int, tuple] = {}
    for cond, witness in _violations(x, all_conditions=True):
        first.setdefault(cond, witness)
    conds = [1, 2, 3, 4] + ([5, 6, 7] if x.is_s_system else [])
    return [record(f"{x.name}.q{x.q}.p{x.parity}.cond{k}", _ANCHOR[k], k not in first, first.get(k))
            for k in conds]


def passes(x: FactorSystem) -> bool:
    return first_failure(x) is None


def _violations(x: FactorSystem, all_conditions: bool = False):
    """Yield (condition, witness); one per condition when all_conditions, else stop at the first."""
    q = x.q
    if not q:
        raise DomainError("exhaustive checks need a finite modulus")
    exps = x.exponents
    if exps is not None:
        conds = _exp_conditions(x, *exps)
    else:
        conds = _cyc_conditions(x)
    for cond, test, arity in conds:
        for t in product(range(q), repeat=arity):
            if not test(*t):
                yield cond, t
                if not all_conditions:
                    return
                break


def _exp_conditions(x: FactorSystem, e1, e2, es):
    q, p = x.q, x.parity
    M = 16

    def c1(a, b, c, d):
        return (e1[a][b][c] + e1[a][(b + c) % q][d] - e1[a][b][(c + d) % q] - e1[a][c][d]) % M == 0

    def c2(a, b, c, d):
        return (e2[(a + b) % q][c][d] + e2[a][b][d] - e2[b][c][d] - e2[a][(b + c) % q][d]) % M == 0

    def c3(a, b, c, d):
        lhs = e1[b][c][d] + e1[a][c][d] + e2[a][b][(c + d) % q]
        rhs = 8 * (a * b * c * d * p % 2) + e2[a][b][c] + e2[a][b][d] + e1[(a + b) % q][c][d]
        return (lhs - rhs) % M == 0

    def c4(a, b, c):
        return (e1[a][b][c] + e2[a][b][c] - e2[b][a][c] - e1[a][c][b]) % M == 0

    out = [(1, c1, 4), (2, c2, 4), (3, c3, 4), (4, c4, 3)]
    if es is not None:
        def c5(a, b, c):
            return (e1[a][b][c] + e2[b][c][a] + es[a][(b + c) % q] - es[a][b] - es[a][c]) % M == 0

        def c6(a, b, c):
            return (e1[c][a][b] + e2[a][b][c] + es[(a + b) % q][c] - es[a][c] - es[b][c]) % M == 0

        def c7(a, b):
            return es[a][b] == es[b][a]

        out += [(5, c5, 3), (6, c6, 3), (7, c7, 2)]
    return out


def _cyc_conditions(x: FactorSystem):
    p = x.parity
    w1, w2 = x.omega1, x.omega2

    def c1(a, b, c, d):
        return w1(a, b, c) * w1(a, b + c, d) == w1(a, b, c + d) * w1(a, c, d)

    def c2(a, b, c, d):
        return w2(a + b, c, d) * w2(a, b, d) == w2(b, c, d) * w2(a, b + c, d)

    def c3(a, b, c, d):
        lhs = w1(b, c, d) * w1(a, c, d) * w2(a, b, c + d)
        rhs = w2(a, b, c) * w2(a, b, d) * w1(a + b, c, d) * sign(a * b * c * d * p)
        return lhs == rhs

    def c4(a, b, c):
        return w1(a, b, c) * w2(a, b, c) == w2(b, a, c) * w1(a, c, b)

    out = [(1, c1, 4), (2, c2, 4), (3, c3, 4), (4, c4, 3)]
    if x.is_s_system:
        ws = x.omega_sharp

        def c5(a, b, c):
            return w1(a, b, c) * w2(b, c, a) * ws(a, b + c) == ws(a, b) * ws(a, c)

        def c6(a, b, c):
            return w1(c, a, b) * w2(a, b, c) * ws(a + b, c) == ws(a, c) * ws(b, c)

        def c7(a, b):
            return ws(a, b) == ws(b, a)

        out += [(5, c5, 3), (6, c6, 3), (7, c7, 2)]
    return out


# ---- named relations ----
def relation_suite(q: int) -> List[CheckRecord]:
    """Coboundary identities available at modulus q."""
    _check_modulus(q)
    recs = []
    if q % 4 == 0:
        ok = is_coboundary_of(builtin("C", q), c_function)
        recs.append(record(f"relations.q{q}.C=d(c)", "C is the coboundary of c", ok))
        cd = fs_mul(builtin("C", q), builtin("D", q))
        recs.append(record(f"relations.q{q}.CD=d(zeta4^xy)", "C D is the coboundary of zeta4^{xy}",
                           is_coboundary_of(cd, zeta4_product)))
    if q:
        recs.append(record(f"relations.q{q}.D=d(d)", "D is the coboundary of d",
                           is_coboundary_of(builtin("D", q), d_function)))
    if q % 8 == 0:
        rhs = fs_mul(builtin("B", q), coboundary(a_function, q, "d(a)"))
        diff = first_difference(builtin("A", q), rhs, level="B")
        recs.append(record(f"relations.q{q}.A=B*d(a)", "A = B d(a) as B-factor systems", diff is None, diff))
    if q % 16 == 0:
        rhs = fs_mul(builtin("B", q), coboundary(a_prime_function, q, "d(a')"))
        diff = first_difference(builtin("A", q), rhs, level="S")
        recs.append(record(f"relations.q{q}.A=B*d(a')", "A = B d(a') as S-factor systems", diff is None, diff))
    return recs


ROOT_SAMPLE = (ONE, -ONE, ZETA4, -ZETA4, ZETA8, -ZETA8)


def random_phi(q: int, rng: random.Random) -> F2:
    table = {(r, s): rng.choice(ROOT_SAMPLE) for r in range(q) for s in range(q)}
    return lambda r, s: table[(r % q, s % q)]
