"""Tests for the quartic construction and quadratic-divisor search."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spliq.algebra import I, J, K, ONE, ZERO, SplitQuaternion
from spliq.realpoly import (
    QuadDivisor,
    RealPoly,
    ZeroPolynomialError,
    companion,
    quadratic_divisors,
)

rationals = st.fractions(min_value=-12, max_value=12, max_denominator=8)
quats = st.builds(SplitQuaternion, rationals, rationals, rationals, rationals)


def exact_pairs(divs):
    return sorted((d.T, d.N) for d in divs if d.exact)


class TestRealPoly:
    def test_degree_and_eval(self):
        p = RealPoly([F(1, 2), 0, 1])
        assert p.degree == 2
        assert p(F(3)) == F(19, 2)
        assert RealPoly([]).is_zero()
        assert RealPoly([0, 0]).is_zero()

    def test_divmod_exact(self):
        p = RealPoly([-1, 0, 0, 0, 1])
        q, r = p.divmod(RealPoly([1, 0, 1]))
        assert r.is_zero()
        assert q == RealPoly([-1, 0, 1])

    def test_degree_cap(self):
        with pytest.raises(ValueError):
            RealPoly([0, 0, 0, 0, 0, 1])

    def test_pretty(self):
        assert RealPoly([-1, 0, 0, 0, 1]).pretty() == "x^4 - 1"
        assert RealPoly([0, 0, 0, -4]).pretty() == "-4*x^3"
        assert RealPoly([]).pretty() == "0"
        assert RealPoly([F(1, 2), 1]).pretty() == "x + 1/2"


class TestCompanion:
    def test_printed_examples(self):
        assert companion(ONE, -I - J, K) == RealPoly([-1, 0, 0, 0, 1])
        assert companion(ONE + K, SplitQuaternion(-1, -1, 1, 1), ZERO) == \
            RealPoly([0, 0, 0, -4])
        assert companion(ONE + K, -(ONE + K), ZERO).is_zero()

    @settings(max_examples=100)
    @given(quats, quats, quats, st.fractions(min_value=-8, max_value=8,
                                             max_denominator=6))
    def test_evaluation_identity(self, a, b, c, t):
        value = a * (t * t) + b * t + c
        assert companion(a, b, c)(t) == value.norm_form()


class TestQuadraticDivisors:
    def test_paper_cases(self):
        assert exact_pairs(quadratic_divisors(RealPoly([-1, 0, 0, 0, 1]))) == \
            [(F(0), F(-1)), (F(0), F(1))]
        assert exact_pairs(quadratic_divisors(RealPoly([0, 0, 0, -4]))) == \
            [(F(0), F(0))]

    def test_quadratic_is_its_own_divisor(self):
        divs = quadratic_divisors(RealPoly([2, -3, 1]))
        assert exact_pairs(divs) == [(F(3), F(2))]

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            quadratic_divisors(RealPoly([]))

    def test_low_degree_has_none(self):
        assert quadratic_divisors(RealPoly([3, 1])) == []
        assert quadratic_divisors(RealPoly([5])) == []

    def test_double_rational_root(self):
        # (x-3)^2 * (x+1): pairs (3,3), (3,-1), plus nothing else rational
        p = RealPoly([9, -6, 1]) * RealPoly([1, 1])
        assert exact_pairs(quadratic_divisors(p)) == \
            [(F(2), F(-3)), (F(6), F(9))]

    def test_exact_division_guarantee(self):
        p = RealPoly([-1, -2, 1]) * RealPoly([-1, 2, 1])
        for d in quadratic_divisors(p):
            if d.exact:
                assert p.divmod(d.as_poly())[1].is_zero()

    def test_irrational_divisors_reported_inexact(self):
        p = RealPoly([-2, 0, 1]) * RealPoly([-2, 0, 1])
        divs = quadratic_divisors(p)
        assert exact_pairs(divs) == [(F(0), F(-2))]
        inexact = sorted(d.T for d in divs if not d.exact)
        assert inexact == pytest.approx([-2.8284271247, 2.8284271247])
        assert all(abs(d.N - 2.0) < 1e-9 for d in divs if not d.exact)

    def test_complex_only_quartic(self):
        # (x^2+1)(x^2+x+1) has no real roots at all
        p = RealPoly([1, 0, 1]) * RealPoly([1, 1, 1])
        assert exact_pairs(quadratic_divisors(p)) == \
            [(F(-1), F(1)), (F(0), F(1))]

    def test_numeric_fallback_quartic(self):
        # x^4 + x + 1: irreducible over Q, no real quadratic with
        # rational coefficients; both factors come back inexact
        p = RealPoly([1, 1, 0, 0, 1])
        divs = quadratic_divisors(p)
        assert len(divs) == 2
        assert not any(d.exact for d in divs)
        for d in divs:
            q, r = divmod_float(p, d)
            assert max(abs(c) for c in r) < 1e-6

    def test_numeric_quartic_two_real_roots(self):
        # x^4 - x - 1 has two real irrational roots and one complex pair
        p = RealPoly([-1, -1, 0, 0, 1])
        divs = quadratic_divisors(p)
        assert len(divs) == 2
        for d in divs:
            q, r = divmod_float(p, d)
            assert max(abs(c) for c in r) < 1e-6

    def test_irreducible_cubic(self):
        # x^3 - 2: one real root 2^(1/3), one complex pair
        p = RealPoly([-2, 0, 0, 1])
        divs = quadratic_divisors(p)
        assert len(divs) == 1
        d = divs[0]
        assert not d.exact
        assert abs(d.T + 2 ** F(1, 3)) < 1e-9
        assert abs(d.N - float(2 ** F(2, 3))) < 1e-9

    @settings(max_examples=60, deadline=None)
    @given(st.fractions(min_value=-5, max_value=5, max_denominator=3),
           st.fractions(min_value=-5, max_value=5, max_denominator=3),
           st.fractions(min_value=-5, max_value=5, max_denominator=3),
           st.fractions(min_value=-5, max_value=5, max_denominator=3))
    def test_recovers_rational_quadratic_factors(self, t1, n1, t2, n2):
        q1 = RealPoly([n1, -t1, 1])
        q2 = RealPoly([n2, -t2, 1])
        divs = quadratic_divisors(q1 * q2)
        assert len(divs) <= 6
        pairs = exact_pairs(divs)
        assert (t1, n1) in pairs and (t2, n2) in pairs

    @settings(max_examples=40, deadline=None)
    @given(quats, quats, quats)
    def test_divisor_count_bound(self, a, b, c):
        p = companion(a, b, c)
        if p.is_zero():
            return
        if p.degree < 2:
            assert quadratic_divisors(p) == []
        else:
            assert len(quadratic_divisors(p)) <= 6


def divmod_float(p: RealPoly, d: QuadDivisor):
    """Float synthetic division of p by x^2 - T x + N."""
    coeffs = [float(c) for c in p.coeffs]
    t, n = float(d.T), float(d.N)
    quo = [0.0] * (len(coeffs) - 2)
    rem = list(coeffs)
    for i in range(len(coeffs) - 1, 1, -1):
        f = rem[i]
        quo[i - 2] = f
        rem[i] = 0.0
        rem[i - 1] += f * t
        rem[i - 2] -= f * n
    return quo, rem[:2]
