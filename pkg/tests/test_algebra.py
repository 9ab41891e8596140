"""Unit and property tests for the scalar algebra."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spliq.algebra import (
    I,
    J,
    K,
    ONE,
    UNITS,
    ZERO,
    AlgebraClass,
    NotInvertibleError,
    QuadExt,
    SplitQuaternion,
    inner,
    sq,
    sqrt_exact,
    square_part,
)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)


def quats(draw_from=rationals):
    return st.builds(SplitQuaternion, draw_from, draw_from, draw_from, draw_from)


# The full 16-entry unit table: (left, right) -> product.
UNIT_TABLE = {
    ("1", "1"): ONE, ("1", "i"): I, ("1", "j"): J, ("1", "k"): K,
    ("i", "1"): I, ("i", "i"): -ONE, ("i", "j"): K, ("i", "k"): -J,
    ("j", "1"): J, ("j", "i"): -K, ("j", "j"): ONE, ("j", "k"): -I,
    ("k", "1"): K, ("k", "i"): J, ("k", "j"): I, ("k", "k"): ONE,
}
BY_NAME = {"1": ONE, "i": I, "j": J, "k": K}


def test_unit_multiplication_table():
    for (ln, rn), expected in UNIT_TABLE.items():
        assert BY_NAME[ln] * BY_NAME[rn] == expected, f"{ln}*{rn}"


def test_products_from_worked_cases():
    assert J * K == -I
    assert ONE * SplitQuaternion(2, -3, F(1, 2), 7) == SplitQuaternion(2, -3, F(1, 2), 7)
    assert (ONE + K) * (I - K) == SplitQuaternion(-1, 1, 1, -1)


def test_conjugate_re_im():
    x = SplitQuaternion(1, 1, 1, 1)
    assert x.conj() == SplitQuaternion(1, -1, -1, -1)
    assert (J + K).re == 0
    assert SplitQuaternion(1, 2, 0, 0).im == SplitQuaternion(0, 2, 0, 0)


def test_norm_form_values():
    assert (ONE + K).norm_form() == 0
    assert J.norm_form() == -1
    assert (SplitQuaternion(-3, 1, 1, 1) / 8).norm_form() == F(1, 8)


def test_inner_values():
    assert inner(ONE + K, SplitQuaternion(-1, -1, 1, 1)) == -2
    a = SplitQuaternion(2, -1, 3, F(1, 2))
    assert inner(a, a) == a.norm_form()
    assert inner(ONE, -I - J) == 0


def test_classify_and_inverse():
    assert (ONE + K).classify() is AlgebraClass.ZERO_DIVISOR
    assert ZERO.classify() is AlgebraClass.ZERO
    assert J.classify() is AlgebraClass.INVERTIBLE
    assert J.inverse() == J
    assert sq(2).inverse() == sq(F(1, 2))
    with pytest.raises(NotInvertibleError):
        (ONE + K).inverse()


def test_pinv_branches():
    assert ZERO.pinv() == ZERO
    assert (ONE + I).pinv() == SplitQuaternion(F(1, 2), F(-1, 2), 0, 0)
    p = (ONE + K).pinv()
    assert p == (ONE + K) / 4
    a = ONE + K
    assert a * p * a == a


@given(quats(), quats(), quats())
def test_associativity_and_distributivity(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


@given(quats(), quats())
def test_conjugate_antiautomorphism(x, y):
    assert (x * y).conj() == y.conj() * x.conj()


@given(quats(), quats())
def test_norm_form_multiplicative(x, y):
    assert (x * y).norm_form() == x.norm_form() * y.norm_form()


@given(quats())
def test_self_conjugate_product_is_norm(x):
    p = x * x.conj()
    assert p.im == ZERO
    assert p.re == x.norm_form()


@given(quats())
def test_re_im_reconstruct(x):
    assert sq(x.re) + x.im == x
    assert x.re == (x + x.conj()).re / 2


@given(quats())
def test_pinv_identities(x):
    p = x.pinv()
    assert x * p * x == x
    assert p * x * p == p


def _complex_mul(u, v):
    return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])


def _complex_div(u, v):
    n = v[0] * v[0] + v[1] * v[1]
    return ((u[0] * v[0] + u[1] * v[1]) / n, (u[1] * v[0] - u[0] * v[1]) / n)


@given(quats(st.fractions(min_value=-6, max_value=6, max_denominator=4)))
def test_pinv_zero_divisor_projections(a):
    # a*pinv(a) and pinv(a)*a are the complementary half idempotents
    if not a.is_zero_divisor():
        return
    z1, z2 = a.z1, a.z2
    z1bar = (z1[0], -z1[1])
    w_right = _complex_div(z2, z1bar)
    w_left = _complex_div(z2, z1)
    expect_right = (sq(1) + SplitQuaternion(0, 0, w_right[0], w_right[1])) / 2
    expect_left = (sq(1) + SplitQuaternion(0, 0, w_left[0], w_left[1])) / 2
    assert a * a.pinv() == expect_right
    assert a.pinv() * a == expect_left


@given(rationals, rationals, quats(), quats())
def test_inner_symmetric_bilinear(s, t, x, y):
    assert inner(x, y) == inner(y, x)
    z = SplitQuaternion(1, 2, 3, 4)
    assert inner(x * s + y * t, z) == s * inner(x, z) + t * inner(y, z)


def test_complex_form_roundtrip():
    x = SplitQuaternion(F(1, 2), -2, 3, F(-7, 3))
    assert SplitQuaternion.from_complex_pair(x.z1, x.z2) == x


def test_square_part():
    assert square_part(1) == (1, 1)
    assert square_part(8) == (2, 2)
    assert square_part(360) == (6, 10)


def test_sqrt_exact_rational():
    assert sqrt_exact(F(9, 4)) == F(3, 2)
    r = sqrt_exact(F(1, 8))
    assert r == QuadExt(0, F(1, 4), 2)
    assert sqrt_exact(F(-1)) is None
    assert sqrt_exact(F(0)) == 0


def test_sqrt_exact_denesting():
    assert sqrt_exact(QuadExt(3, 2, 2)) == QuadExt(1, 1, 2)
    # sqrt((1+sqrt(2))/2) does not denest
    assert sqrt_exact(QuadExt(F(1, 2), F(1, 2), 2)) is None


def test_quadext_ordering_and_arithmetic():
    r2 = QuadExt(0, 1, 2)
    assert r2 * r2 == 2
    assert (1 + r2) * (1 - r2) == -1
    assert r2 > 1 and r2 < F(3, 2)
    assert QuadExt(-3, 1, 2) < 0 < QuadExt(3, -1, 2)
    assert 2 / r2 == r2
    with pytest.raises(ValueError):
        QuadExt(0, 1, 2) + QuadExt(0, 1, 3)


def test_quadext_normalizes_square_factors():
    v = QuadExt.make(0, 1, 8)
    assert v == QuadExt(0, 2, 2)
    assert QuadExt.make(3, 0, 5) == 3


@settings(max_examples=30)
@given(quats())
def test_quaternions_with_surd_components(x):
    r2 = QuadExt(0, 1, 2)
    y = SplitQuaternion(r2, 1, r2, 0)
    assert (x * y) * y == x * (y * y)
