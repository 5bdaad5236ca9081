# scalars.py - exact arithmetic in Q(zeta16) and Q(sqrt2)
#
# A CycNumber is sum(c_i * z^i, i = 0..7) with z = zeta16 and z^8 = -1.
# Every other module computes with these; nothing here ever rounds.
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

log = logging.getLogger(__name__)

DEGREE = 8          # [Q(zeta16):Q]
ROOT_ORDER = 16


class DomainError(ValueError):
    """Raised for inputs outside an operation's domain (zero inverse, bad order, bad rank ...)."""


Rational = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


_ZERO_COEFFS = (Fraction(0),) * DEGREE


class CycNumber:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Iterable] = None):
        if coeffs is None:
            self.coeffs = _ZERO_COEFFS
            return
        vals = [_frac(c) for c in coeffs]
        if len(vals) > DEGREE:
            # fold higher powers back with z^8 = -1
            folded = [Fraction(0)] * DEGREE
            for i, c in enumerate(vals):
                k = i % ROOT_ORDER
                if k < DEGREE:
                    folded[k] += c
                else:
                    folded[k - DEGREE] -= c
            vals = folded
        vals += [Fraction(0)] * (DEGREE - len(vals))
        self.coeffs = tuple(vals)

    # ---- constructors ----
    @classmethod
    def from_int(cls, n: int) -> "CycNumber":
        return cls((n,))

    @classmethod
    def from_fraction(cls, x: Rational) -> "CycNumber":
        return cls((_frac(x),))

    @classmethod
    def zeta(cls, k: int) -> "CycNumber":
        """zeta16 ** k."""
        k %= ROOT_ORDER
        c = [0] * DEGREE
        if k < DEGREE:
            c[k] = 1
        else:
            c[k - DEGREE] = -1
        return cls(c)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "CycNumber":
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        return obj

    # ---- predicates ----
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def root_exponent(self) -> Optional[int]:
        """k with self == zeta16**k, or None when self is not a 16th root of unity."""
        hit = None
        for i, c in enumerate(self.coeffs):
            if c:
                if hit is not None:
                    return None
                hit = (i, c)
        if hit is None:
            return None
        i, c = hit
        if c == 1:
            return i
        if c == -1:
            return i + DEGREE
        return None

    # ---- arithmetic ----
    def __add__(self, other):
        other = as_cyc(other)
        if other is NotImplemented:
            return other
        return CycNumber._raw(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._raw(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = as_cyc(other)
        if other is NotImplemented:
            return other
        return CycNumber._raw(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return as_cyc(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 1:
                return self
            f = Fraction(other)
            return CycNumber._raw(tuple(a * f for a in self.coeffs))
        other = as_cyc(other)
        if other is NotImplemented:
            return other
        return cyc_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DomainError("division by zero")
            f = Fraction(1) / Fraction(other)
            return CycNumber._raw(tuple(a * f for a in self.coeffs))
        return cyc_mul(self, cyc_inv(as_cyc(other)))

    def __rtruediv__(self, other):
        return cyc_mul(as_cyc(other), cyc_inv(self))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return cyc_inv(self) ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = cyc_mul(result, base)
            base = cyc_mul(base, base)
            n >>= 1
        return result

    def galois(self, j: int) -> "CycNumber":
        """Apply the automorphism z -> z^j (j odd)."""
        if j % 2 == 0:
            raise DomainError(f"z -> z^{j} is not an automorphism")
        out = [Fraction(0)] * DEGREE
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = (i * j) % ROOT_ORDER
            if k < DEGREE:
                out[k] += c
            else:
                out[k - DEGREE] -= c
        return CycNumber._raw(tuple(out))

    def conj(self) -> "CycNumber":
        return self.galois(ROOT_ORDER - 1)

    # ---- comparison / hashing ----
    def __eq__(self, other):
        other = as_cyc(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    # ---- rendering ----
    def __repr__(self):
        return f"CycNumber({self})"

    def __str__(self):
        root = self.root_exponent()
        if root is not None:
            return _render_root(root)
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            name = _render_root(i)
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


def _render_root(k: int) -> str:
    k %= ROOT_ORDER
    if k == 0:
        return "1"
    if k == DEGREE:
        return "-1"
    order = ROOT_ORDER
    e = k
    while e % 2 == 0:
        order //= 2
        e //= 2
    return f"ζ{order}" if e == 1 else f"ζ{order}^{e}"


def as_cyc(x) -> CycNumber:
    if isinstance(x, CycNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNumber((x,))
    if isinstance(x, QSqrt2):
        return embed_qsqrt2(x)
    return NotImplemented


def cyc_mul(a: CycNumber, b: CycNumber) -> CycNumber:
    out = [Fraction(0)] * DEGREE
    bc = [(j, c) for j, c in enumerate(b.coeffs) if c]
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in bc:
            k = i + j
            if k < DEGREE:
                out[k] += x * y
            else:
                out[k - DEGREE] -= x * y
    return CycNumber._raw(tuple(out))


def cyc_inv(a: CycNumber) -> CycNumber:
    """Multiplicative inverse via the product of the non-trivial Galois conjugates."""
    a = as_cyc(a)
    if a.is_zero():
        raise DomainError("zero has no inverse")
    root = a.root_exponent()
    if root is not None:
        return CycNumber.zeta(-root)
    nz = [(i, c) for i, c in enumerate(a.coeffs) if c]
    if len(nz) == 1:
        # c*z^k has inverse (1/c)*z^(-k)
        i, c = nz[0]
        return CycNumber.zeta(-i) * (Fraction(1) / c)
    cofactor = ONE
    for j in range(3, ROOT_ORDER, 2):
        cofactor = cyc_mul(cofactor, a.galois(j))
    norm = cyc_mul(a, cofactor)
    if not norm.is_rational() or norm.coeffs[0] == 0:
        raise DomainError(f"norm of {a} is not a nonzero rational")
    return cofactor / norm.coeffs[0]


def cyc_root(order: int, exponent: int) -> CycNumber:
    if order not in (1, 2, 4, 8, 16):
        raise DomainError(f"root order must divide 16, got {order}")
    step = ROOT_ORDER // order
    return CycNumber.zeta(step * exponent)


@dataclass(frozen=True)
class QSqrt2:
    """a + b*sqrt(2) with rational a, b."""
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))

    @staticmethod
    def lift(x) -> "QSqrt2":
        if isinstance(x, QSqrt2):
            return x
        return QSqrt2(_frac(x), Fraction(0))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = QSqrt2.lift(other)
        return QSqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt2(-self.a, -self.b)

    def __sub__(self, other):
        o = QSqrt2.lift(other)
        return QSqrt2(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return QSqrt2.lift(other) - self

    def __mul__(self, other):
        o = QSqrt2.lift(other)
        return QSqrt2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "QSqrt2":
        return QSqrt2(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self) -> "QSqrt2":
        n = self.norm()
        if n == 0:
            raise DomainError("zero has no inverse in Q(sqrt2)")
        c = self.conjugate()
        return QSqrt2(c.a / n, c.b / n)

    def __truediv__(self, other):
        return self * QSqrt2.lift(other).inverse()

    def __rtruediv__(self, other):
        return QSqrt2.lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QSqrt2(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSqrt2.lift(other)
        if not isinstance(other, QSqrt2):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        rad = "√2" if self.b == 1 else ("-√2" if self.b == -1 else f"{self.b}*√2")
        if self.a == 0:
            return rad
        sign = " - " if rad.startswith("-") else " + "
        return f"{self.a}{sign}{rad.lstrip('-')}"

    def __repr__(self):
        return f"QSqrt2({self})"


def embed_qsqrt2(x: QSqrt2) -> CycNumber:
    """Ring embedding Q(sqrt2) -> Q(zeta16) with sqrt2 = zeta8*(1 - zeta4)."""
    x = QSqrt2.lift(x)
    return CycNumber((x.a, 0, x.b, 0, 0, 0, -x.b, 0))


ZERO = CycNumber()
ONE = CycNumber((1,))
MINUS_ONE = CycNumber((-1,))
ZETA16 = CycNumber.zeta(1)
ZETA8 = CycNumber.zeta(2)
ZETA4 = CycNumber.zeta(4)
SQRT2 = embed_qsqrt2(QSqrt2(0, 1))
HALF = CycNumber((Fraction(1, 2),))


def sign(e: int) -> CycNumber:
    """(-1)**e as a CycNumber."""
    return MINUS_ONE if e % 2 else ONE
