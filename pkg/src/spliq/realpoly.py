"""Real-coefficient polynomials of degree <= 4 over exact rationals.

Provides the quartic attached to a quaternionic quadratic equation and
the enumeration of its monic real quadratic divisors x^2 - T*x + N.
The divisor search is exact first (rational roots, square-free
splitting, resolvent-based factorization over Q) with a numeric
fallback (Sturm isolation plus bisection) whose results are snapped
back to rationals and re-verified; divisors that fail re-verification
are reported with exact=False.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Union

from .algebra import QuadExt, SplitQuaternion, inner, sqrt_exact

__all__ = [
    "RealPoly",
    "QuadDivisor",
    "ZeroPolynomialError",
    "companion",
    "quadratic_divisors",
]

MAX_DEGREE = 4
SNAP_DENOM = 10 ** 6
SNAP_TOL = 1e-9
ROOT_WIDTH = Fraction(1, 10 ** 12)


class ZeroPolynomialError(ValueError):
    """Raised when divisors of the zero polynomial are requested."""


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class RealPoly:
    """Univariate polynomial, ascending Fraction coefficients, deg <= 4."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs) -> None:
        cs = _trim([Fraction(c) for c in coeffs])
        if len(cs) > MAX_DEGREE + 1:
            raise ValueError("degree above 4 is not supported")
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t):
        out = 0
        for c in reversed(self.coeffs):
            out = out * t + c
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "RealPoly") -> "RealPoly":
        a, b = list(self.coeffs), list(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        for i, c in enumerate(b):
            a[i] += c
        return RealPoly(a)

    def __neg__(self) -> "RealPoly":
        return RealPoly([-c for c in self.coeffs])

    def __sub__(self, other: "RealPoly") -> "RealPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RealPoly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RealPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "RealPoly") -> tuple["RealPoly", "RealPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = list(other.coeffs)
        dd = len(div) - 1
        quo = [Fraction(0)] * max(len(rem) - dd, 1)
        while len(rem) - 1 >= dd and any(rem):
            rem = _trim(rem)
            if len(rem) - 1 < dd:
                break
            f = rem[-1] / div[-1]
            pos = len(rem) - 1 - dd
            quo[pos] = f
            for i, c in enumerate(div):
                rem[pos + i] -= f * c
            rem = _trim(rem)
        return RealPoly(quo), RealPoly(rem)

    def derivative(self) -> "RealPoly":
        return RealPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "RealPoly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return RealPoly([c / lead for c in self.coeffs])

    def pretty(self, name: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                xp = name if power == 1 else f"{name}^{power}"
                body = xp if mag == 1 else f"{mag}*{xp}"
            parts.append(("- " if c < 0 else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self) -> str:
        return f"RealPoly({self.pretty()})"


@dataclass(frozen=True)
class QuadDivisor:
    """Monic real quadratic divisor x^2 - T*x + N of a quartic.

    exact=True guarantees rational (T, N) with zero remainder under
    exact division; otherwise T and N are floating approximations of a
    provably or presumably irrational divisor.
    """

    T: Union[Fraction, float]
    N: Union[Fraction, float]
    exact: bool

    def as_poly(self) -> RealPoly:
        if not self.exact:
            raise ValueError("inexact divisor has no exact polynomial")
        return RealPoly([self.N, -self.T, Fraction(1)])

    def sort_key(self) -> tuple[float, float]:
        return (float(self.T), float(self.N))


def companion(a: SplitQuaternion, b: SplitQuaternion,
              c: SplitQuaternion) -> RealPoly:
    """Quartic whose quadratic divisors index candidate solution classes.

    Satisfies the identity companion(a,b,c)(t) == norm_form(a*t^2+b*t+c)
    for every real t.
    """
    return RealPoly([
        c.norm_form(),
        2 * inner(b, c),
        2 * inner(a, c) + b.norm_form(),
        2 * inner(a, b),
        a.norm_form(),
    ])


# -- exact helpers ------------------------------------------------------


def _poly_gcd(a: RealPoly, b: RealPoly) -> RealPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def _squarefree_parts(p: RealPoly) -> list[tuple[RealPoly, int]]:
    """Split monic p into [(factor, multiplicity)] with squarefree factors."""
    parts = []
    g = _poly_gcd(p, p.derivative())
    w = p.divmod(g)[0].monic()
    mult = 1
    while w.degree > 0:
        y = _poly_gcd(w, g)
        z = w.divmod(y)[0]
        if z.degree > 0:
            parts.append((z.monic(), mult))
        w = y
        g = g.divmod(y)[0]
        mult += 1
    return parts


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _rational_roots(p: RealPoly) -> tuple[list[Fraction], RealPoly]:
    """All rational roots of a squarefree p, and the deflated remainder."""
    roots: list[Fraction] = []
    while p.degree > 0 and p.coeffs[0] == 0:
        roots.append(Fraction(0))
        p = RealPoly(list(p.coeffs)[1:])
    if p.degree < 1:
        return roots, p
    denom = 1
    for c in p.coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    for num in _int_divisors(ints[0]):
        for den in _int_divisors(ints[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                while p.degree > 0 and p(cand) == 0:
                    roots.append(cand)
                    p = p.divmod(RealPoly([-cand, 1]))[0]
    return roots, p.monic() if p.degree > 0 else p


def _is_square(f: Fraction) -> bool:
    if f < 0:
        return False
    return (isqrt(f.numerator) ** 2 == f.numerator
            and isqrt(f.denominator) ** 2 == f.denominator)


def _rat_sqrt(f: Fraction) -> Fraction:
    return Fraction(isqrt(f.numerator), isqrt(f.denominator))


def _quartic_rational_quadratics(p: RealPoly):
    """Factor monic quartic p into two monic rational quadratics, or None."""
    b = p.coeffs[3]
    # depress: x = y - b/4
    shift = -b / 4
    dep = _compose_shift(p, shift)
    pp, qq, rr = dep.coeffs[2], dep.coeffs[1], dep.coeffs[0]
    candidates = []
    if qq == 0:
        disc = pp * pp - 4 * rr
        if _is_square(disc):
            root = _rat_sqrt(disc)
            for z in ((-pp + root) / 2, (-pp - root) / 2):
                candidates.append((Fraction(0), -z))
        # y^4 + pp*y^2 + rr = (y^2 + u y + v)(y^2 - u y + v), v = sqrt(rr)
        if _is_square(rr):
            v = _rat_sqrt(rr)
            for vv in (v, -v):
                u2 = 2 * vv - pp
                if u2 > 0 and _is_square(u2):
                    u = _rat_sqrt(u2)
                    candidates.append((u, vv))
    else:
        # positive real roots m of the resolvent with rational sqrt(m)
        # give rational splits; the exact division below keeps this
        # reconstruction sound.
        cubic = RealPoly([-qq * qq, pp * pp - 4 * rr, 2 * pp, 1])
        for mid in _isolate_intervals(cubic, Fraction(1, 10 ** 30)):
            if mid <= 0:
                continue
            m = mid.limit_denominator(10 ** 14)
            if m <= 0 or not _is_square(m):
                continue
            u = _rat_sqrt(m)
            v = (pp + m - qq / u) / 2
            candidates.append((u, v))
    for u, v in candidates:
        q1 = RealPoly([v, u, 1])
        q2, rem = dep.divmod(q1)
        if rem.is_zero() and q2.degree == 2:
            back1 = _compose_shift(q1, -shift)
            back2 = _compose_shift(q2, -shift)
            prod = back1 * back2
            if prod == p:
                return back1.monic(), back2.monic()
    return None


def _compose_shift(p: RealPoly, s: Fraction) -> RealPoly:
    """Return p(x + s)."""
    out = RealPoly([])
    for c in reversed(p.coeffs):
        out = out * RealPoly([s, 1]) + RealPoly([c])
    return out


# -- numeric fallback ----------------------------------------------------


def _sturm_chain(p: RealPoly) -> list[RealPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        rem = chain[-2].divmod(chain[-1])[1]
        chain.append(-rem)
    chain.pop()
    return chain


def _variations(chain: list[RealPoly], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _isolate_intervals(p: RealPoly, width: Fraction) -> list[Fraction]:
    """Exact midpoints of isolating intervals for the real roots of p.

    Sturm-based, so repeated roots count once; each returned midpoint
    is within width/2 of a distinct real root.  Bisection probes are
    rational, so an exactly-rational probe hitting a root is handled by
    nudging the endpoint.
    """
    if p.degree < 1:
        return []
    chain = _sturm_chain(p)
    bound = Fraction(1) + max(abs(c) for c in p.coeffs) / abs(p.coeffs[-1])
    total = _variations(chain, -bound) - _variations(chain, bound)
    intervals = [(-bound, bound)]
    isolated: list[tuple[Fraction, Fraction]] = []
    while intervals:
        lo, hi = intervals.pop()
        count = _variations(chain, lo) - _variations(chain, hi)
        if count == 0:
            continue
        if count == 1:
            isolated.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        while p(mid) == 0:
            mid = (mid + hi) / 2
        intervals.append((lo, mid))
        intervals.append((mid, hi))
    assert len(isolated) == total
    mids = []
    for lo, hi in isolated:
        vlo = _variations(chain, lo)
        while hi - lo > width:
            mid = (lo + hi) / 2
            if p(mid) == 0:
                lo = hi = mid
                break
            if vlo - _variations(chain, mid) == 1:
                hi = mid
            else:
                lo = mid
        mids.append((lo + hi) / 2)
    return sorted(mids)


def _isolate_real_roots(p: RealPoly) -> list[float]:
    """Distinct real roots of p as floats, isolated to width 1e-12."""
    return [float(m) for m in _isolate_intervals(p, ROOT_WIDTH)]


# -- root records and pairing ---------------------------------------------


@dataclass(frozen=True)
class _Root:
    kind: str  # "rat" | "qext" | "num"
    value: object
    mult: int

    def approx(self) -> float:
        return float(self.value)


@dataclass(frozen=True)
class _ConjPair:
    T: object  # Fraction or float
    N: object
    exact: bool


def _collect_roots(p: RealPoly) -> tuple[list[_Root], list[_ConjPair]]:
    reals: list[_Root] = []
    pairs: list[_ConjPair] = []

    def handle_quadratic(q: RealPoly, mult: int):
        t, n = -q.coeffs[1], q.coeffs[0]
        disc = t * t - 4 * n
        if disc < 0:
            pairs.extend([_ConjPair(t, n, True)] * mult)
            return
        root = sqrt_exact(disc)
        if isinstance(root, Fraction):
            for r in ((t + root) / 2, (t - root) / 2):
                reals.append(_Root("rat", r, mult))
            return
        assert isinstance(root, QuadExt)
        for sign in (1, -1):
            val = QuadExt.make(t / 2, sign * root.b / 2, root.d)
            reals.append(_Root("qext", val, mult))

    for factor, mult in _squarefree_parts(p.monic()):
        rat_roots, rest = _rational_roots(factor)
        for r in rat_roots:
            reals.append(_Root("rat", r, mult))
        if rest.degree <= 0:
            continue
        if rest.degree == 2:
            handle_quadratic(rest, mult)
            continue
        if rest.degree == 4:
            split = _quartic_rational_quadratics(rest)
            if split is not None:
                handle_quadratic(split[0], mult)
                handle_quadratic(split[1], mult)
                continue
        nums = _isolate_real_roots(rest)
        for r in nums:
            reals.append(_Root("num", r, mult))
        missing = rest.degree - len(nums)
        if missing == 2:
            cs = rest.coeffs
            root_sum = -cs[-2] / cs[-1]
            prod_all = cs[0] / cs[-1] * (1 if rest.degree % 2 == 0 else -1)
            got_sum = sum(nums)
            got_prod = 1.0
            for r in nums:
                got_prod *= r
            pair_t = float(root_sum) - got_sum
            pair_n = float(prod_all) / got_prod
            pairs.append(_ConjPair(pair_t, pair_n, False))
        elif missing == 4:
            pairs.extend(_quartic_complex_pairs(rest))
        else:
            assert missing == 0
    return reals, pairs


def _quartic_complex_pairs(p: RealPoly) -> list[_ConjPair]:
    """Two real quadratic factors of a monic quartic with no real roots."""
    b = p.coeffs[3]
    shift = -b / 4  # dep(y) = p(y + shift), so p(x) = dep(x - shift)
    dep = _compose_shift(p, shift)
    pp, qq, rr = dep.coeffs[2], dep.coeffs[1], dep.coeffs[0]
    s = float(shift)

    def undepress(u: float, v: float) -> _ConjPair:
        # factor (y^2 + u*y + v) of dep -> x^2 - T*x + N dividing p
        return _ConjPair(2 * s - u, s * s - u * s + v, False)

    if qq == 0:
        disc = pp * pp - 4 * rr
        if disc >= 0:
            root = float(disc) ** 0.5
            # dep = (y^2 - z1)(y^2 - z2) with z1, z2 < 0
            return [undepress(0.0, -(float(-pp) + sg * root) / 2)
                    for sg in (1, -1)]
        beta = float(rr) ** 0.5
        alpha = max(2 * beta - float(pp), 0.0) ** 0.5
        return [undepress(alpha, beta), undepress(-alpha, beta)]
    cubic = RealPoly([-qq * qq, pp * pp - 4 * rr, 2 * pp, 1])
    cubic_rat, cubic_rest = _rational_roots(cubic)
    m0 = next((float(r) for r in cubic_rat if r > 0), None)
    if m0 is None:
        m0 = next((r for r in _isolate_real_roots(cubic_rest) if r > 0), None)
    assert m0 is not None, "resolvent cubic must have a positive root"
    u = m0 ** 0.5
    v = (float(pp) + m0 - float(qq) / u) / 2
    w = (float(pp) + m0 + float(qq) / u) / 2
    return [undepress(u, v), undepress(-u, w)]


def _sum_prod(r1: _Root, r2: _Root):
    """(T, N, both_exact_rational) for a root pair, else float fallback."""
    if "num" in (r1.kind, r2.kind):
        return float(r1.approx() + r2.approx()), float(r1.approx() * r2.approx()), False
    v1, v2 = r1.value, r2.value
    if (isinstance(v1, QuadExt) and isinstance(v2, QuadExt)
            and v1.d != v2.d):
        return r1.approx() + r2.approx(), r1.approx() * r2.approx(), False
    t = v1 + v2
    n = v1 * v2
    if isinstance(t, Fraction) and isinstance(n, Fraction):
        return t, n, True
    return float(t), float(n), False


def _try_snap(t: float, n: float, p: RealPoly):
    ts = Fraction(t).limit_denominator(SNAP_DENOM)
    ns = Fraction(n).limit_denominator(SNAP_DENOM)
    if abs(float(ts) - t) > SNAP_TOL or abs(float(ns) - n) > SNAP_TOL:
        return None
    cand = RealPoly([ns, -ts, 1])
    if p.divmod(cand)[1].is_zero():
        return ts, ns
    return None


def quadratic_divisors(p: RealPoly) -> list[QuadDivisor]:
    """All distinct monic real quadratic divisors x^2 - T*x + N of p.

    Exact divisors carry rational (T, N) verified by exact division;
    the numeric fallback reports float (T, N) with exact=False.
    Polynomials of degree < 2 have none.
    """
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial divides everything")
    if p.degree < 2:
        return []
    monic = p.monic()
    reals, pairs = _collect_roots(monic)
    found: list[QuadDivisor] = []

    def push_exact(t: Fraction, n: Fraction):
        cand = RealPoly([n, -t, 1])
        assert monic.divmod(cand)[1].is_zero(), "exact divisor must divide"
        found.append(QuadDivisor(t, n, True))

    def push_float(t: float, n: float):
        snapped = _try_snap(t, n, monic)
        if snapped is not None:
            push_exact(*snapped)
        else:
            found.append(QuadDivisor(t, n, False))

    for idx, r1 in enumerate(reals):
        if r1.mult >= 2:
            t, n, ok = _sum_prod(r1, r1)
            (push_exact if ok else push_float)(t, n)
        for r2 in reals[idx + 1:]:
            t, n, ok = _sum_prod(r1, r2)
            (push_exact if ok else push_float)(t, n)
    for pair in pairs:
        if pair.exact:
            push_exact(pair.T, pair.N)
        else:
            push_float(float(pair.T), float(pair.N))

    unique: list[QuadDivisor] = []
    for d in sorted(found, key=lambda d: (not d.exact,) + d.sort_key()):
        dup = False
        for u in unique:
            if d.exact and u.exact:
                dup = (d.T, d.N) == (u.T, u.N)
            else:
                dup = (abs(float(d.T) - float(u.T)) <= SNAP_TOL
                       and abs(float(d.N) - float(u.N)) <= SNAP_TOL)
            if dup:
                break
        if not dup:
            unique.append(d)
    unique.sort(key=QuadDivisor.sort_key)
    return unique
