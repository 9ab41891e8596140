"""Small exact multivariate polynomials and rational linear solving.

Internal machinery for solution sets: constraint polynomials of degree
<= 2 in at most four real parameters, with exact substitution,
factoring into linear forms, and Gaussian elimination over the
rationals.  Coefficients are Fractions; evaluation also accepts
QuadExt scalars.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .algebra import Scalar, sqrt_exact

__all__ = ["MultiPoly", "solve_exact"]


def _fr(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class MultiPoly:
    """Polynomial over Q in n variables, stored as {exponents: coeff}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None) -> None:
        self.n = n
        clean = {}
        for expo, coeff in (terms or {}).items():
            coeff = _fr(coeff)
            if coeff != 0:
                clean[tuple(expo)] = coeff
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @staticmethod
    def const(n: int, c) -> "MultiPoly":
        return MultiPoly(n, {(0,) * n: _fr(c)})

    @staticmethod
    def var(n: int, i: int) -> "MultiPoly":
        e = [0] * n
        e[i] = 1
        return MultiPoly(n, {tuple(e): Fraction(1)})

    @staticmethod
    def linear(n: int, c0, coeffs) -> "MultiPoly":
        terms = {(0,) * n: _fr(c0)}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = _fr(c)
        return MultiPoly(n, terms)

    # -- basic structure ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def const_value(self) -> Fraction:
        return self.terms.get((0,) * self.n, Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def vars_used(self) -> set[int]:
        used = set()
        for e in self.terms:
            used.update(i for i, p in enumerate(e) if p)
        return used

    def coeff(self, expo) -> Fraction:
        return self.terms.get(tuple(expo), Fraction(0))

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.n != other.n:
            raise ValueError("variable-count mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.n, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _fr(other)
            return MultiPoly(self.n, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.n, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, values: list[Scalar]) -> Scalar:
        total: Scalar = Fraction(0)
        for e, c in self.terms.items():
            term: Scalar = c
            for i, p in enumerate(e):
                for _ in range(p):
                    term = term * values[i]
            total = total + term
        return total

    def subst(self, i: int, replacement: "MultiPoly") -> "MultiPoly":
        """Replace variable i by a polynomial (over the same n vars)."""
        self._check(replacement)
        out = MultiPoly.const(self.n, 0)
        for e, c in self.terms.items():
            term = MultiPoly.const(self.n, c)
            for jj, p in enumerate(e):
                if p == 0:
                    continue
                base = replacement if jj == i else MultiPoly.var(self.n, jj)
                for _ in range(p):
                    term = term * base
            out = out + term
        return out

    def rename(self, mapping: dict[int, int], new_n: int) -> "MultiPoly":
        """Reindex variables; all used vars must appear in the mapping."""
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * new_n
            for i, p in enumerate(e):
                if p == 0:
                    continue
                ne[mapping[i]] += p
            key = tuple(ne)
            terms[key] = terms.get(key, Fraction(0)) + c
        return MultiPoly(new_n, terms)

    def as_univariate(self, i: int):
        """Split as A*t_i^2 + B*t_i + C with A, B, C free of t_i."""
        parts = [MultiPoly(self.n), MultiPoly(self.n), MultiPoly(self.n)]
        for e, c in self.terms.items():
            p = e[i]
            if p > 2:
                raise ValueError("degree in variable exceeds 2")
            rest = list(e)
            rest[i] = 0
            parts[p] = parts[p] + MultiPoly(self.n, {tuple(rest): c})
        return parts[2], parts[1], parts[0]

    def linear_parts(self):
        """Return (c0, [c1..cn]) for a polynomial of degree <= 1."""
        if self.degree() > 1:
            raise ValueError("not linear")
        coeffs = [Fraction(0)] * self.n
        c0 = Fraction(0)
        for e, c in self.terms.items():
            if sum(e) == 0:
                c0 = c
            else:
                coeffs[e.index(1)] = c
        return c0, coeffs

    # -- normalization ----------------------------------------------------

    def primitive(self) -> "MultiPoly":
        """Scale to coprime integer coefficients, positive leading term."""
        if not self.terms:
            return self
        denom = 1
        for c in self.terms.values():
            denom = denom * c.denominator // gcd(denom, c.denominator)
        nums = [int(c * denom) for c in self.terms.values()]
        g = 0
        for v in nums:
            g = gcd(g, abs(v))
        lead = self.terms[max(self.terms)]
        sign = -1 if lead < 0 else 1
        scale = Fraction(sign * denom, g)
        return MultiPoly(self.n, {e: c * scale for e, c in self.terms.items()})

    # -- factoring --------------------------------------------------------

    def linear_sqrt(self):
        """Return linear m with m*m == self, or None."""
        if self.is_zero():
            return MultiPoly(self.n)
        if self.degree() > 2:
            return None
        if self.is_const():
            r = sqrt_exact(self.const_value())
            if isinstance(r, Fraction):
                return MultiPoly.const(self.n, r)
            return None
        used = sorted(self.vars_used())
        j = next((v for v in used if self.degree_in(v) == 2), None)
        if j is None:
            return None
        e2 = [0] * self.n
        e2[j] = 2
        r = sqrt_exact(self.coeff(e2))
        if not isinstance(r, Fraction):
            return None
        m_coeffs = [Fraction(0)] * self.n
        m_coeffs[j] = r
        for l in range(self.n):
            if l == j:
                continue
            e = [0] * self.n
            e[j] = 1
            e[l] = 1
            m_coeffs[l] = self.coeff(e) / (2 * r)
        e1 = [0] * self.n
        e1[j] = 1
        c0 = self.coeff(e1) / (2 * r)
        m = MultiPoly.linear(self.n, c0, m_coeffs)
        return m if m * m == self else None

    def factor_two_linear(self):
        """Factor a degree-2 polynomial as l1*l2 over Q, or None.

        Scalar factors are absorbed into l1; both returned forms are
        primitive, so only the zero sets are meaningful.
        """
        if self.degree() != 2:
            return None
        i = min(self.vars_used() | {v for v in range(self.n)
                                    if self.degree_in(v) > 0})
        A, B, C = self.as_univariate(i)
        if not A.is_zero():
            if not A.is_const():
                return None
            a = A.const_value()
            # self = a*(t_i + B/2a)^2 + (C - B^2/4a)
            shift = B * Fraction(1, 2) * (1 / a)
            s = C - B * B * Fraction(1, 4) * (1 / a)
            m = ((-1 / a) * s).linear_sqrt()
            if m is None:
                return None
            ti = MultiPoly.var(self.n, i)
            l1 = (ti + shift - m).primitive()
            l2 = (ti + shift + m).primitive()
            return l1, l2
        if B.is_zero():
            return None
        # self = B*t_i + C with t_i only in one factor: C must be u*B
        u = _divide_by_linear(C, B)
        if u is None:
            return None
        l1 = B.primitive()
        l2 = (MultiPoly.var(self.n, i) + u).primitive()
        return l1, l2

    # -- rendering ----------------------------------------------------------

    def pretty(self, names: list[str]) -> str:
        if not self.terms:
            return "0"
        def key(e):
            return (-sum(e), tuple(-x for x in e))
        parts = []
        for e in sorted(self.terms, key=key):
            c = self.terms[e]
            body = "*".join(
                names[i] if p == 1 else f"{names[i]}^{p}"
                for i, p in enumerate(e) if p
            )
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            parts.append(("- " if c < 0 else "+ ") + text)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self) -> str:
        return f"MultiPoly({self.pretty([f't{i}' for i in range(self.n)])})"


def _divide_by_linear(C: MultiPoly, B: MultiPoly):
    """Solve u*B == C for linear u (same variables), or None."""
    n = C.n
    # unknowns: u = c0 + sum c_l t_l  (n+1 unknowns)
    unknowns = n + 1
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    basis = [MultiPoly.const(n, 1)] + [MultiPoly.var(n, l) for l in range(n)]
    products = [b * B for b in basis]
    monomials = set()
    for p in products:
        monomials.update(p.terms)
    monomials.update(C.terms)
    for e in sorted(monomials):
        rows.append([p.coeff(e) for p in products])
        rhs.append(C.coeff(e))
    sol = solve_exact(rows, rhs)
    if sol is None:
        return None
    particular = sol[0]
    u = MultiPoly.linear(n, particular[0], particular[1:unknowns])
    return u if u * B == C else None


def solve_exact(rows, rhs):
    """Gaussian elimination over an exact field.

    Solves rows * x = rhs.  Returns (particular, nullspace_basis) or
    None when inconsistent.  Entries may be Fractions or QuadExt values
    from a single field.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [[rows[r][c] for c in range(n)] + [rhs[r]] for r in range(m)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [v / inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][n] != 0:
            return None
    particular = [Fraction(0)] * n
    for row_idx, c in enumerate(pivots):
        particular[c] = a[row_idx][n]
    free = [c for c in range(n) if c not in pivots]
    null_basis = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for row_idx, c in enumerate(pivots):
            vec[c] = -a[row_idx][f]
        null_basis.append(vec)
    return particular, null_basis
