"""Exact arithmetic in the split quaternion algebra.

The algebra is spanned by 1, i, j, k over the reals with

    i*i = -1,   j*j = k*k = +1,
    i*j = k,    j*k = -i,    k*i = j,

and anticommutation of distinct imaginary units.  Unlike the Hamilton
quaternions this algebra has zero divisors: x is non-invertible exactly
when the indefinite norm form x0^2 + x1^2 - x2^2 - x3^2 vanishes.

All scalars are exact.  Components are `fractions.Fraction` or, for
points that only exist over a real quadratic extension, `QuadExt`
elements a + b*sqrt(d).  No floating point enters this module.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Union

Rat = Fraction

__all__ = [
    "Rat",
    "QuadExt",
    "Scalar",
    "NotInvertibleError",
    "AlgebraClass",
    "SplitQuaternion",
    "ZERO",
    "ONE",
    "I",
    "J",
    "K",
    "UNITS",
    "sq",
    "inner",
    "sqrt_exact",
    "square_part",
]


class NotInvertibleError(ArithmeticError):
    """Raised when an inverse is requested for a zero divisor or zero."""


def square_part(n: int) -> tuple[int, int]:
    """Split n > 0 as s*s*m with m squarefree; return (s, m)."""
    if n <= 0:
        raise ValueError("square_part requires n > 0")
    s, m = 1, 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            s *= d ** (e // 2)
            if e % 2:
                m *= d
        d += 1 if d == 2 else 2
    return s, m * n


class QuadExt:
    """Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).

    Invariants: a, b rational, b != 0, and d > 1 a squarefree integer
    (rational values are always plain Fractions, never QuadExt).
    Elements of different fields never mix in one computation; an
    attempt to combine them raises ValueError.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int) -> None:
        a, b = Fraction(a), Fraction(b)
        if b == 0 or d <= 1:
            raise ValueError("use Fraction for rational values")
        self.a, self.b, self.d = a, b, d

    @staticmethod
    def make(a, b, d: int) -> Scalar:
        """Build a + b*sqrt(d), collapsing to Fraction when rational."""
        b = Fraction(b)
        if b == 0 or d == 1:
            return Fraction(a) + b if d == 1 else Fraction(a)
        s, m = square_part(d)
        if m == 1:
            return Fraction(a) + b * s
        return QuadExt(a, b * s, m)

    def conj(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError(
                    f"cannot mix sqrt({self.d}) and sqrt({other.d}) values"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return QuadExt.make(self.a + pair[0], self.b + pair[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return QuadExt.make(self.a - pair[0], self.b - pair[1], self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        c, e = pair
        return QuadExt.make(self.a * c + self.b * e * self.d,
                            self.a * e + self.b * c, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        c, e = pair
        norm = c * c - e * e * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero field element")
        # multiply by the conjugate of the divisor
        return QuadExt.make((self.a * c - self.b * e * self.d) / norm,
                            (self.b * c - self.a * e) / norm, self.d)

    def __rtruediv__(self, other):
        inv = QuadExt.make(self.a, -self.b, self.d) / (
            self.a * self.a - self.b * self.b * self.d)
        return inv * other

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        # b != 0 means the value is irrational
        return False

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def sign(self) -> int:
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        big = a * a > b * b * self.d
        if a > 0:  # b < 0
            return 1 if big else -1
        return -1 if big else 1  # a < 0, b > 0

    def _cmp(self, other) -> int:
        pair = self._coerce(other)
        if pair is None:
            raise TypeError(f"cannot compare QuadExt with {type(other)}")
        diff = QuadExt.make(self.a - pair[0], self.b - pair[1], self.d)
        if isinstance(diff, Fraction):
            return (diff > 0) - (diff < 0)
        return diff.sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self) -> str:
        return f"QuadExt({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self) -> str:
        root = f"sqrt({self.d})"
        b = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
        sb = f"{b}{root}"
        if self.a == 0:
            return sb if self.b > 0 else f"-{sb}"
        op = "+" if self.b > 0 else "-"
        return f"{self.a}{op}{sb}"


Scalar = Union[Fraction, QuadExt]


def _as_scalar(v) -> Scalar:
    if isinstance(v, (QuadExt, Fraction)):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"not an exact scalar: {v!r}")


def sqrt_exact(v: Scalar):
    """Exact nonnegative square root of v, or None.

    For a rational v >= 0 the root always exists (Fraction or QuadExt).
    For v in Q(sqrt(d)) the root is returned only when it denests back
    into Q(sqrt(d)); otherwise the value is a degree-4 algebraic number
    and None is returned.  Negative v also returns None.
    """
    if isinstance(v, Fraction):
        if v < 0:
            return None
        if v == 0:
            return Fraction(0)
        sn, mn = square_part(v.numerator)
        sd, md = square_part(v.denominator)
        # sqrt(p/q) = sqrt(p*q)/q
        s, m = sn * sd, mn * md
        sm, mm = square_part(m)
        return QuadExt.make(0, Fraction(s * sm, v.denominator), mm)
    if isinstance(v, QuadExt):
        if v.sign() < 0:
            return None
        # candidate root p + q*sqrt(d): p^2 + q^2 d = a, 2pq = b
        delta = v.a * v.a - v.b * v.b * v.d
        if delta < 0:
            return None
        e = sqrt_exact(delta)
        if not isinstance(e, Fraction):
            return None
        for sign in (1, -1):
            p2 = (v.a + sign * e) / 2
            if p2 < 0:
                continue
            p = sqrt_exact(p2)
            if isinstance(p, Fraction) and p != 0:
                q = v.b / (2 * p)
                cand = QuadExt.make(p, q, v.d)
                if isinstance(cand, QuadExt) and cand.sign() < 0:
                    cand = -cand
                if cand * cand == v:
                    return cand
        return None
    raise TypeError(f"not an exact scalar: {v!r}")


class AlgebraClass(enum.Enum):
    """Invertibility trichotomy of a split quaternion."""

    ZERO = "zero"
    ZERO_DIVISOR = "zero_divisor"
    INVERTIBLE = "invertible"


class SplitQuaternion:
    """Immutable split quaternion with exact components."""

    __slots__ = ("x0", "x1", "x2", "x3")

    def __init__(self, x0=0, x1=0, x2=0, x3=0) -> None:
        object.__setattr__(self, "x0", _as_scalar(x0))
        object.__setattr__(self, "x1", _as_scalar(x1))
        object.__setattr__(self, "x2", _as_scalar(x2))
        object.__setattr__(self, "x3", _as_scalar(x3))

    def __setattr__(self, name, value):
        raise AttributeError("SplitQuaternion is immutable")

    @property
    def components(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.x0, self.x1, self.x2, self.x3)

    # -- ring structure ------------------------------------------------

    def __add__(self, other):
        other = sq(other)
        return SplitQuaternion(self.x0 + other.x0, self.x1 + other.x1,
                               self.x2 + other.x2, self.x3 + other.x3)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return SplitQuaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __sub__(self, other):
        return self + (-sq(other))

    def __rsub__(self, other):
        return sq(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            s = _as_scalar(other)
            return SplitQuaternion(self.x0 * s, self.x1 * s,
                                   self.x2 * s, self.x3 * s)
        if not isinstance(other, SplitQuaternion):
            return NotImplemented
        a0, a1, a2, a3 = self.components
        b0, b1, b2, b3 = other.components
        return SplitQuaternion(
            a0 * b0 - a1 * b1 + a2 * b2 + a3 * b3,
            a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
            a0 * b2 + a2 * b0 - a1 * b3 + a3 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        )

    def __rmul__(self, other):
        # only scalars reach here; real scalars are central
        if isinstance(other, (int, Fraction, QuadExt)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            s = _as_scalar(other)
            return SplitQuaternion(self.x0 / s, self.x1 / s,
                                   self.x2 / s, self.x3 / s)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = sq(other)
        if not isinstance(other, SplitQuaternion):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __bool__(self) -> bool:
        return self != ZERO

    # -- involutions and forms ----------------------------------------

    def conj(self) -> "SplitQuaternion":
        """Quaternion conjugate: negates the i, j, k components."""
        return SplitQuaternion(self.x0, -self.x1, -self.x2, -self.x3)

    @property
    def re(self) -> Scalar:
        return self.x0

    @property
    def im(self) -> "SplitQuaternion":
        return SplitQuaternion(0, self.x1, self.x2, self.x3)

    def norm_form(self) -> Scalar:
        """Indefinite norm form conj(x)*x = x0^2+x1^2-x2^2-x3^2.

        Multiplicative, but not positive: its zero set away from the
        origin is exactly the zero divisors.
        """
        return (self.x0 * self.x0 + self.x1 * self.x1
                - self.x2 * self.x2 - self.x3 * self.x3)

    # -- complex split form x = z1 + z2*j ------------------------------

    @property
    def z1(self) -> tuple[Scalar, Scalar]:
        """First complex coordinate (re, im) of x = z1 + z2*j."""
        return (self.x0, self.x1)

    @property
    def z2(self) -> tuple[Scalar, Scalar]:
        """Second complex coordinate (re, im) of x = z1 + z2*j."""
        return (self.x2, self.x3)

    @staticmethod
    def from_complex_pair(z1, z2) -> "SplitQuaternion":
        return SplitQuaternion(z1[0], z1[1], z2[0], z2[1])

    # -- structure -----------------------------------------------------

    def classify(self) -> AlgebraClass:
        if self == ZERO:
            return AlgebraClass.ZERO
        if self.norm_form() == 0:
            return AlgebraClass.ZERO_DIVISOR
        return AlgebraClass.INVERTIBLE

    def is_invertible(self) -> bool:
        return self.norm_form() != 0

    def is_zero_divisor(self) -> bool:
        return self != ZERO and self.norm_form() == 0

    def is_real(self) -> bool:
        return self.x1 == 0 and self.x2 == 0 and self.x3 == 0

    def inverse(self) -> "SplitQuaternion":
        """Two-sided inverse conj(x)/norm_form(x)."""
        n = self.norm_form()
        if n == 0:
            raise NotInvertibleError(f"{self} has vanishing norm form")
        return self.conj() / n

    def pinv(self) -> "SplitQuaternion":
        """Moore-Penrose generalized inverse; total on the algebra.

        Zero maps to zero, invertible elements to their inverse, and a
        nonzero zero divisor z1 + z2*j to (conj(z1) + z2*j)/(4|z1|^2).
        """
        if self == ZERO:
            return ZERO
        n = self.norm_form()
        if n != 0:
            return self.conj() / n
        n1 = self.x0 * self.x0 + self.x1 * self.x1
        # |z1| = |z2| != 0 for a nonzero zero divisor
        assert n1 != 0, "zero divisor with vanishing first complex part"
        return SplitQuaternion(self.x0, -self.x1, self.x2, self.x3) / (4 * n1)

    # -- rendering ------------------------------------------------------

    def __repr__(self) -> str:
        return f"SplitQuaternion({self.x0!r}, {self.x1!r}, {self.x2!r}, {self.x3!r})"

    def __str__(self) -> str:
        return format_quaternion(self)


def sq(value) -> SplitQuaternion:
    """Coerce ints, Fractions, and QuadExt scalars to split quaternions."""
    if isinstance(value, SplitQuaternion):
        return value
    if isinstance(value, (int, Fraction, QuadExt)):
        return SplitQuaternion(value, 0, 0, 0)
    raise TypeError(f"cannot interpret {value!r} as a split quaternion")


def inner(a: SplitQuaternion, b: SplitQuaternion) -> Scalar:
    """Symmetric bilinear form Re(conj(a)*b) polarizing the norm form."""
    return (a.x0 * b.x0 + a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3)


def _scalar_str(v: Scalar) -> str:
    return str(v)


def format_quaternion(x: SplitQuaternion) -> str:
    """Canonical text form, e.g. '1/2+2i-j' and '0'; parseable back."""
    parts: list[str] = []
    for value, unit in zip(x.components, ("", "i", "j", "k")):
        if value == 0:
            continue
        if isinstance(value, QuadExt):
            coeff = f"({value})"
            parts.append(f"+{coeff}{unit}" if parts else f"{coeff}{unit}")
            continue
        sign = "-" if value < 0 else ("+" if parts else "")
        mag = -value if value < 0 else value
        body = "" if (mag == 1 and unit) else str(mag)
        parts.append(f"{sign}{body}{unit}")
    return "".join(parts) if parts else "0"


ZERO = SplitQuaternion(0, 0, 0, 0)
ONE = SplitQuaternion(1, 0, 0, 0)
I = SplitQuaternion(0, 1, 0, 0)
J = SplitQuaternion(0, 0, 1, 0)
K = SplitQuaternion(0, 0, 0, 1)
UNITS = (ONE, I, J, K)
