from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from ncpenrose import cyclo
from ncpenrose.cyclo import ONE, TAU, ZERO, ZETA, CycloNum

mpmath.mp.dps = 40
Z = mpmath.exp(1j * mpmath.pi / 5)


def value(z):
    return sum(mpmath.mpf(c.numerator) / c.denominator * Z ** k for k, c in enumerate(z.c))


nums = st.tuples(*[st.fractions(min_value=-5, max_value=5, max_denominator=6)] * 4).map(CycloNum)


def test_constants():
    assert ZETA ** 5 == -ONE and ZETA ** 10 == ONE
    assert TAU * TAU == TAU + 1
    assert TAU == ONE + ZETA ** 2 - ZETA ** 3
    assert cyclo.from_real(0, 1) == TAU
    assert cyclo.real_parts(cyclo.TAU_INV) == (-1, 1)
    assert TAU * cyclo.TAU_INV == ONE
    assert abs(value(TAU) - (1 + mpmath.sqrt(5)) / 2) < 1e-30


@given(nums, nums)
@settings(max_examples=150, deadline=None)
def test_arithmetic_matches_complex(a, b):
    assert abs(value(a * b) - value(a) * value(b)) < 1e-25
    assert abs(value(a + b) - (value(a) + value(b))) < 1e-25
    assert abs(value(a.conj()) - mpmath.conj(value(a))) < 1e-25
    if not a.is_zero():
        assert a * a.inverse() == ONE


@given(nums)
@settings(max_examples=150, deadline=None)
def test_signs_match_complex(a):
    n = a.norm_real()
    assert n.is_real()
    assert cyclo.real_sign(n) == (0 if a.is_zero() else 1)
    im = mpmath.im(value(a))
    s = cyclo.imag_sign(a)
    if abs(im) > 1e-20:
        assert s == (1 if im > 0 else -1)
    re = a + a.conj()
    rv = mpmath.re(value(re))
    if abs(rv) > 1e-20:
        assert cyclo.real_sign(re) == (1 if rv > 0 else -1)
    else:
        assert cyclo.real_sign(re) == 0


@given(nums, nums, nums)
@settings(max_examples=100, deadline=None)
def test_area_consistent_and_orient(a, b, c):
    assert cyclo.area_consistent(a, b, c)
    va, vb, vc = value(a), value(b), value(c)
    cross = mpmath.im(mpmath.conj(vb - va) * (vc - va))
    if abs(cross) > 1e-20:
        assert cyclo.orient(a, b, c) == (1 if cross > 0 else -1)


def test_locate_and_segments():
    tri = (ZERO, ONE, ZETA)
    assert cyclo.locate((ONE + ZETA) * Fraction(1, 3), tri) == "inside"
    assert cyclo.locate(ONE * Fraction(1, 2), tri) == "boundary"
    assert cyclo.locate(ZERO, tri) == "boundary"
    assert cyclo.locate(-ONE, tri) == "outside"
    assert cyclo.on_open_segment(TAU_HALF := TAU * Fraction(1, 2), ZERO, TAU)
    assert not cyclo.on_open_segment(TAU, ZERO, TAU)
    assert not cyclo.on_open_segment(ZETA, ZERO, TAU)


def test_direction_index():
    for k in range(10):
        assert cyclo.direction_index(cyclo.zeta_power(k) * TAU) == k
    assert cyclo.direction_index(ONE + ZETA * Fraction(1, 3)) is None


def test_inverse_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_json_and_decimal():
    z = CycloNum((1, Fraction(-2, 3), 0, 5))
    assert CycloNum.from_json(z.to_json()) == z
    re, im = cyclo.to_complex_decimal(z, 20)
    v = value(z)
    assert abs(mpmath.mpf(str(re)) - mpmath.re(v)) < 1e-15
    assert abs(mpmath.mpf(str(im)) - mpmath.im(v)) < 1e-15
