from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hsbranch.errors import UsageError
from hsbranch.series import DiracSeries, delta, y_series, z_series


def coeffs(series):
    return [(e, c) for e, c in series.items()]


def test_z_geometric():
    s = z_series(2, 1, 10)
    assert coeffs(s) == [(0, 1), (2, 1), (4, 1)]
    assert s.coefficient(1) == 0


def test_z_linear():
    s = z_series(1, 2, 8)
    assert [s.coefficient(t) for t in range(5)] == [1, 2, 3, 4, 5]


def test_z_cubic_by_repeated_convolution():
    s = z_series(2, 3, 8)
    assert [s.coefficient(2 * t) for t in range(3)] == [1, 3, 6]


def test_z_empty_power_is_delta_zero():
    s = z_series(1, 0, 10)
    assert coeffs(s) == [(0, 1)]
    assert s.upto == 5


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 5), st.integers(0, 12))
def test_z_binomial_coefficients(r, s, t):
    ser = z_series(r, s, 2 * r * t)
    assert ser.coefficient(r * t) == comb(t + s - 1, s - 1)


def test_y_leading_exponent_and_definition():
    y2 = y_series(2, 20)
    assert coeffs(y2)[0] == (1, 1)
    assert y2.items() == (delta(1, 20) * z_series(2, 1, 20)).items()


def test_y_phi_squared():
    yy = y_series(1, 20) * y_series(1, 20)
    for t in range(6):
        assert yy.coefficient(t + 1) == t + 1


@pytest.mark.parametrize("nu,cap", [(1, 0), (1, 7), (2, 9), (Fraction(1, 2), 5), (3, 13)])
def test_y_term_count(nu, cap):
    assert len(y_series(nu, cap).coeffs) == int(cap // (2 * Fraction(nu))) + 1


def test_y_zero_rejected():
    with pytest.raises(UsageError):
        y_series(0, 4)


def test_window_bookkeeping():
    a = DiracSeries(0, {0: 1, 1: 1}, 6)
    b = DiracSeries(Fraction(1, 2), {0: 1}, 2)
    assert (a * b).cap == 2 and (a * b).upto == Fraction(3, 2)
    s = a + b
    assert s.offset == 0 and s.upto == Fraction(3, 2)
    with pytest.raises(UsageError):
        s.coefficient(2)


def test_incompatible_grids():
    with pytest.raises(UsageError):
        DiracSeries(0, {0: 1}, 4) + DiracSeries(Fraction(1, 3), {0: 1}, 4)


series_st = st.builds(
    lambda off, cs, cap: DiracSeries(Fraction(off, 2), dict(enumerate(cs)), cap),
    st.integers(-4, 4), st.lists(st.integers(-3, 3), max_size=6), st.integers(5, 8),
)


@settings(max_examples=60, deadline=None)
@given(series_st, series_st, series_st)
def test_convolution_algebra(a, b, c):
    assert (a * b).items() == (b * a).items()
    assert ((a * b) * c).items() == (a * (b * c)).items()
    lhs, rhs = a * (b + c), a * b + a * c
    top = min(lhs.upto, rhs.upto)
    assert [x for x in lhs.items() if x[0] <= top] == [x for x in rhs.items() if x[0] <= top]


@settings(max_examples=30, deadline=None)
@given(series_st, st.integers(-6, 6))
def test_shift_is_delta_convolution(a, k):
    assert a.shift(Fraction(k, 2)).items() == (delta(Fraction(k, 2), a.cap) * a).items()
