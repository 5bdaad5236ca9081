# qsym.py - Schur Q-functions and the sqrt2-normalized class dictionaries
#
# A symmetric function of degree d is stored faithfully in exactly d variables.
# Polynomials live in sympy's sparse rings over QQ; a coefficient a + b*sqrt2
# is split into a rational part and a sqrt2 part, each its own polynomial.
import hashlib
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, Rational
from sympy.polys.domains import QQ
from sympy.polys.rings import ring
from sympy.utilities.iterables import partitions

from . import linalg
from .report import CheckRecord, record
from .scalars import DomainError, QSqrt2

log = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
SQRT2 = QSqrt2(0, 1)


# ---- coefficient plumbing ----
def _to_qq(x):
    f = Fraction(x)
    return QQ(f.numerator, f.denominator)


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


@lru_cache(maxsize=None)
def _ring(n_vars: int):
    names = ",".join(f"x{i}" for i in range(1, n_vars + 1))
    return ring(names, QQ)[0]


# ---- symmetric functions ----
class SymFun:
    """A polynomial in n_vars variables with coefficients in Q(sqrt2).

    Equality against the integer 0 is a zero test, so Pfaffian skewness checks
    read the same for SymFun entries and plain rationals.
    """
    __slots__ = ("n_vars", "rat", "irr")

    def __init__(self, n_vars: int, rat=None, irr=None):
        if n_vars < 1:
            raise DomainError(f"a symmetric function needs at least one variable, got {n_vars}")
        R = _ring(n_vars)
        self.n_vars = n_vars
        self.rat = R.zero if rat is None else rat
        self.irr = R.zero if irr is None else irr

    @classmethod
    def zero(cls, n_vars: int) -> "SymFun":
        return cls(n_vars)

    @classmethod
    def one(cls, n_vars: int) -> "SymFun":
        return cls(n_vars, _ring(n_vars).one)

    @classmethod
    def from_terms(cls, n_vars: int, terms: Dict[Exponent, object]) -> "SymFun":
        R = _ring(n_vars)
        rat, irr = {}, {}
        for exp, c in terms.items():
            if len(exp) != n_vars:
                raise DomainError(f"exponent {exp} does not have {n_vars} entries")
            c = QSqrt2.lift(c)
            if c.a:
                rat[tuple(exp)] = _to_qq(c.a)
            if c.b:
                irr[tuple(exp)] = _to_qq(c.b)
        return cls(n_vars, R.from_dict(rat) if rat else R.zero, R.from_dict(irr) if irr else R.zero)

    @property
    def degree_bound(self) -> int:
        return self.n_vars

    @property
    def terms(self) -> Dict[Exponent, QSqrt2]:
        out: Dict[Exponent, QSqrt2] = {}
        for exp, c in self.rat.items():
            out[exp] = QSqrt2(_to_fraction(c))
        for exp, c in self.irr.items():
            out[exp] = out.get(exp, QSqrt2()) + QSqrt2(0, _to_fraction(c))
        return out

    def coefficient(self, exp: Sequence[int]) -> QSqrt2:
        exp = tuple(exp)
        a = self.rat.get(exp)
        b = self.irr.get(exp)
        return QSqrt2(_to_fraction(a) if a is not None else 0, _to_fraction(b) if b is not None else 0)

    def degrees(self) -> List[int]:
        return sorted({sum(e) for e in self.rat} | {sum(e) for e in self.irr})

    def homogeneous_part(self, d: int) -> "SymFun":
        return SymFun.from_terms(self.n_vars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def is_zero(self) -> bool:
        return not self.rat and not self.irr

    def is_symmetric(self) -> bool:
        for poly in (self.rat, self.irr):
            terms = dict(poly.items())
            for i in range(self.n_vars - 1):
                for e, c in terms.items():
                    s = list(e)
                    s[i], s[i + 1] = s[i + 1], s[i]
                    if terms.get(tuple(s)) != c:
                        return False
        return True

    def is_integral(self) -> bool:
        return not self.irr and all(c.denominator == 1 for c in self.rat.values())

    def _same(self, other: "SymFun"):
        if other.n_vars != self.n_vars:
            raise DomainError(f"variable counts differ: {self.n_vars} vs {other.n_vars}")

    def __add__(self, other: "SymFun") -> "SymFun":
        self._same(other)
        return SymFun(self.n_vars, self.rat + other.rat, self.irr + other.irr)

    def __neg__(self) -> "SymFun":
        return SymFun(self.n_vars, -self.rat, -self.irr)

    def __sub__(self, other: "SymFun") -> "SymFun":
        return self + (-other)

    def scale(self, c) -> "SymFun":
        c = QSqrt2.lift(c)
        a, b = _to_qq(c.a), _to_qq(c.b)
        return SymFun(self.n_vars, self.rat * a + self.irr * (2 * b), self.rat * b + self.irr * a)

    def __mul__(self, other) -> "SymFun":
        if not isinstance(other, SymFun):
            return self.scale(other)
        self._same(other)
        rat = self.rat * other.rat
        irr = self.rat * other.irr + self.irr * other.rat
        if self.irr and other.irr:
            rat = rat + self.irr * other.irr * 2
        return SymFun(self.n_vars, rat, irr)

    def __rmul__(self, other) -> "SymFun":
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, SymFun):
            return NotImplemented
        return self.n_vars == other.n_vars and self.rat == other.rat and self.irr == other.irr

    __hash__ = None

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(exp) if k)
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    def __repr__(self):
        return f"SymFun({self.n_vars}, {self})"


def symfun_add(f: SymFun, g: SymFun) -> SymFun:
    return f + g


def symfun_mul(f: SymFun, g: SymFun) -> SymFun:
    return f * g


def symfun_scale(f: SymFun, c) -> SymFun:
    return f.scale(c)


# ---- strict partitions ----
@dataclass(frozen=True)
class StrictPartition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise DomainError(f"strict partition parts must be positive: {parts}")
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"strict partition parts must strictly decrease: {parts}")

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def eps(self) -> int:
        return (self.size - self.length) % 2

    @property
    def is_queer(self) -> bool:
        """N_lambda carries an odd involution exactly when |lambda| - l(lambda) is odd."""
        return self.eps == 1

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def is_queer(lam: StrictPartition) -> bool:
    return lam.is_queer


def _partition_tuples(d: int, max_parts: Optional[int] = None) -> List[Tuple[int, ...]]:
    if d == 0:
        return [()]
    out = []
    for p in partitions(d, m=max_parts):
        parts = []
        for k in sorted(p, reverse=True):
            parts.extend([k] * p[k])
        out.append(tuple(parts))
    return sorted(out, reverse=True)


def strict_partitions(d: int) -> List[StrictPartition]:
    """Strict partitions of d, in decreasing lexicographic order."""
    if d < 0:
        return []
    return [StrictPartition(p) for p in _partition_tuples(d) if len(set(p)) == len(p)]


# ---- q_k, Q_(a,b), Pfaffians ----
@lru_cache(maxsize=None)
def q_poly(k: int, n_vars: int) -> SymFun:
    """Degree-k coefficient of prod_i (1 + x_i t)/(1 - x_i t).

    Each factor is 1 + 2*sum_j x_i^j t^j, so the coefficient of x^e is 2^(number of i with e_i > 0).
    """
    if k < 0:
        return SymFun.zero(n_vars)
    if k == 0:
        return SymFun.one(n_vars)
    terms = {}
    for combo in combinations_with_replacement(range(n_vars), k):
        exp = [0] * n_vars
        for i in combo:
            exp[i] += 1
        terms[tuple(exp)] = 2 ** sum(1 for e in exp if e)
    return SymFun.from_terms(n_vars, terms)


@lru_cache(maxsize=None)
def Q_pair(a: int, b: int, n_vars: int) -> SymFun:
    """Q_(a,b) = q_a q_b + 2 sum_{i=1..b} (-1)^i q_{a+i} q_{b-i}."""
    if a < 0 or b < 0:
        raise DomainError(f"Q_({a},{b}) needs non-negative indices")
    out = q_poly(a, n_vars) * q_poly(b, n_vars)
    for i in range(1, b + 1):
        term = (q_poly(a + i, n_vars) * q_poly(b - i, n_vars)).scale(2)
        out = out - term if i % 2 else out + term
    return out


def pfaffian(M: Sequence[Sequence], one=1):
    """Pfaffian by first-row expansion with memoized minors.

    Entries need + - * and an `== 0` test; `one` is returned for the empty matrix.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise DomainError("pfaffian needs a square matrix")
    if n % 2:
        raise DomainError(f"pfaffian needs even size, got {n}")
    for i in range(n):
        if not M[i][i] == 0:
            raise DomainError(f"diagonal entry {i} is not zero")
        for j in range(i + 1, n):
            if not (M[i][j] + M[j][i]) == 0:
                raise DomainError(f"matrix is not skew-symmetric at ({i},{j})")
    memo: Dict[Tuple[int, ...], object] = {}

    def pf(idx: Tuple[int, ...]):
        if not idx:
            return one
        if idx in memo:
            return memo[idx]
        i0 = idx[0]
        total = None
        for t in range(1, len(idx)):
            rest = idx[1:t] + idx[t + 1:]
            term = M[i0][idx[t]] * pf(rest)
            if total is None:
                total = term if t % 2 else -term
            else:
                total = total + term if t % 2 else total - term
        memo[idx] = total
        return total

    return pf(tuple(range(n)))


@lru_cache(maxsize=None)
def Q_lambda(lam: StrictPartition, n_vars: int) -> SymFun:
    """Q_lambda as the Pfaffian of (Q_(lambda_i, lambda_j)), padded with a zero part to even length."""
    parts = list(lam.parts)
    if len(parts) % 2:
        parts.append(0)
    if not parts:
        return SymFun.one(n_vars)
    k = len(parts)
    zero = SymFun.zero(n_vars)
    M = [[zero] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            M[i][j] = Q_pair(parts[i], parts[j], n_vars)
            M[j][i] = -M[i][j]
    return pfaffian(M, one=SymFun.one(n_vars))


# ---- Q-basis expansion ----
def monomial_coordinates(f: SymFun, d: int) -> Dict[Tuple[int, ...], QSqrt2]:
    """Coefficients of f on the monomial symmetric functions m_mu, |mu| = d."""
    out = {}
    for mu in _partition_tuples(d, f.n_vars):
        exp = mu + (0,) * (f.n_vars - len(mu))
        c = f.coefficient(exp)
        if c:
            out[mu] = c
    return out


def expand_in_Q_basis(f: SymFun) -> Dict[StrictPartition, QSqrt2]:
    """Coordinates of f in the Q_lambda basis; DomainError if f is not in Gamma."""
    if not f.is_symmetric():
        raise DomainError("not a symmetric polynomial")
    out: Dict[StrictPartition, QSqrt2] = {}
    for d in f.degrees():
        if d > f.n_vars:
            raise DomainError(f"degree {d} exceeds the {f.n_vars} variables that represent it faithfully")
        basis = strict_partitions(d)
        monos = _partition_tuples(d, f.n_vars)
        row_of = {mu: r for r, mu in enumerate(monos)}
        rows = [dict() for _ in monos]
        for j, lam in enumerate(basis):
            for mu, c in monomial_coordinates(Q_lambda(lam, f.n_vars), d).items():
                rows[row_of[mu]][j] = c
        rhs = {row_of[mu]: c for mu, c in monomial_coordinates(f, d).items()}
        sol = linalg.solve(rows, rhs, len(basis))
        if sol is None:
            raise DomainError(f"degree-{d} part is not in the span of the Q-functions")
        for j, c in sol.items():
            out[basis[j]] = QSqrt2.lift(c)
        log.debug("expanded degree %d: %d Q-terms", d, len(sol))
    return out


def class_dictionary(lam: StrictPartition, flavor: str) -> QSqrt2:
    """Scalar c with [simple_lambda] = c * Q_lambda.

    flavor "L": queer Lie superalgebra / Hecke-Clifford simples, 2^(-floor(l/2)).
    flavor "N": spin symmetric group simples, 2^((eps - l)/2).
    """
    if flavor == "L":
        return QSqrt2(2) ** (-(lam.length // 2))
    if flavor == "N":
        return SQRT2 ** (lam.eps - lam.length)
    raise DomainError(f"unknown dictionary flavor {flavor!r}; use 'L' or 'N'")


def expected_ratio(lam: StrictPartition) -> QSqrt2:
    """[L]/[N]: 1 for |lambda| even, else 1/sqrt2 (l even) or sqrt2 (l odd)."""
    if lam.size % 2 == 0:
        return QSqrt2(1)
    return SQRT2.inverse() if lam.length % 2 == 0 else SQRT2


def everted_class(lam: StrictPartition) -> QSqrt2:
    """Class of the Cl1-simple over N_lambda pushed back with the 1/sqrt2 rescaling.

    For |lambda| odd the Cl1-simple is N_lambda itself (l even) or N_lambda (x) k^{1|1} (l odd),
    the latter of rank twice N_lambda.
    """
    rank = 1 if lam.length % 2 == 0 else 2
    return class_dictionary(lam, "N") * rank * SQRT2.inverse()


# ---- tables ----
def m_expansion(f: SymFun, d: int) -> str:
    parts = []
    for mu, c in sorted(monomial_coordinates(f, d).items(), reverse=True):
        parts.append(f"{c}·m({','.join(str(p) for p in mu)})")
    return " + ".join(parts) if parts else "0"


def expansion_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]


def qfun_rows(max_degree: int) -> List[dict]:
    rows = []
    for d in range(1, max_degree + 1):
        for lam in strict_partitions(d):
            text = m_expansion(Q_lambda(lam, d), d)
            rows.append({
                "lambda": str(lam),
                "size": lam.size,
                "length": lam.length,
                "m_expansion": text,
                "hash": expansion_hash(text),
            })
    return rows


def dictionary_rows(max_degree: int) -> List[dict]:
    rows = []
    for d in range(1, max_degree + 1):
        for lam in strict_partitions(d):
            rows.append({
                "lambda": str(lam),
                "length": lam.length,
                "eps": lam.eps,
                "L_scalar": str(class_dictionary(lam, "L")),
                "N_scalar": str(class_dictionary(lam, "N")),
                "queer": lam.is_queer,
                "hash": expansion_hash(m_expansion(Q_lambda(lam, d), d)),
            })
    return rows


# ---- checks ----
def _random_skew(size: int, rng: random.Random) -> List[List[Fraction]]:
    M = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            M[i][j] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            M[j][i] = -M[i][j]
    return M


def pfaffian_det_check(size: int, seed: int = 0) -> Optional[str]:
    M = _random_skew(size, random.Random(seed))
    pf = pfaffian(M, one=Fraction(1))
    det = Matrix([[Rational(x.numerator, x.denominator) for x in row] for row in M]).det()
    if pf * pf != Fraction(int(det.p), int(det.q)):
        return f"size {size}: Pf^2 = {pf * pf}, det = {det}"
    return None


def qsym_checks(max_degree: int = 8, seed: int = 0) -> List[CheckRecord]:
    if max_degree < 1:
        raise DomainError(f"max_degree must be positive, got {max_degree}")
    out: List[CheckRecord] = []
    for n in range(1, max_degree + 1):
        total = SymFun.zero(n)
        for i in range(n + 1):
            term = q_poly(i, n) * q_poly(n - i, n)
            total = total - term if i % 2 else total + term
        out.append(record(f"qsym.q_relation.n{n}", "sum (-1)^i q_i q_{n-i} = 0", total.is_zero(), total))

    bad = None
    for s in range(1, max_degree + 1):
        for a in range(s + 1):
            if Q_pair(a, s - a, s) != -Q_pair(s - a, a, s):
                bad = bad or (a, s - a)
    out.append(record("qsym.q_pair.antisymmetry", "Q_(b,a) = -Q_(a,b)", bad is None, bad))

    bad = pfaffian_det_check(4, seed) or pfaffian_det_check(6, seed + 1)
    out.append(record("qsym.pfaffian.det", "Pf(M)^2 = det(M)", bad is None, bad))

    lams = [lam for d in range(1, max_degree + 1) for lam in strict_partitions(d)]
    bad = next((str(lam) for lam in lams if not Q_lambda(lam, lam.size).is_integral()), None)
    out.append(record("qsym.q_lambda.integral", "Q_lambda has integer coefficients", bad is None, bad))

    bad = None
    for lam in lams:
        if expand_in_Q_basis(Q_lambda(lam, lam.size)) != {lam: QSqrt2(1)}:
            bad = bad or str(lam)
    out.append(record("qsym.expand.unit", "expand(Q_lambda) = Q_lambda", bad is None, bad))

    bad = None
    for lam in lams:
        for mu in lams:
            n = lam.size + mu.size
            if n > max_degree or bad:
                continue
            coeffs = expand_in_Q_basis(Q_lambda(lam, n) * Q_lambda(mu, n))
            if any(c.b or c.a.denominator != 1 for c in coeffs.values()):
                bad = f"{lam}*{mu}: {coeffs}"
    out.append(record("qsym.expand.products", "Q_lambda Q_mu in Z-span of Q_nu", bad is None, bad))

    bad = None
    for lam in lams:
        ratio = class_dictionary(lam, "L") / class_dictionary(lam, "N")
        if ratio not in (QSqrt2(1), SQRT2, SQRT2.inverse()) or ratio != expected_ratio(lam):
            bad = bad or f"{lam}: ratio {ratio}"
    out.append(record("qsym.dictionary.parity", "[L] = c [N], c in {1, sqrt2, 1/sqrt2}", bad is None, bad))

    bad = None
    for lam in lams:
        if lam.size % 2 and everted_class(lam) != class_dictionary(lam, "L"):
            bad = bad or f"{lam}: {everted_class(lam)} vs {class_dictionary(lam, 'L')}"
    out.append(record("qsym.dictionary.eversion", "[L_lambda] = i[Cl1-simple], i = forget/sqrt2",
                      bad is None, bad))
    log.info("qsym checks up to degree %d: %d records", max_degree, len(out))
    return out
