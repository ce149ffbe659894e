from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from sylwaves.rationalpoly import (
    RationalPolynomial,
    TruncatedSeries,
    poly_eval,
    poly_shift,
    series_mul,
)

P = RationalPolynomial


class TestPolyEval:
    def test_zero_polynomial(self):
        assert poly_eval(P(), 7) == 0

    def test_linear(self):
        # p(x) = x - 3/2
        assert poly_eval(P([F(-3, 2), 1]), 4) == F(5, 2)

    def test_square(self):
        assert poly_eval(P([0, 0, 1]), -2) == 4

    def test_exactness_no_float(self):
        v = poly_eval(P([F(1, 3), F(1, 7)]), F(2, 5))
        assert v == F(1, 3) + F(1, 7) * F(2, 5)
        assert isinstance(v, F)


class TestPolyShift:
    def test_shift_x(self):
        assert poly_shift(P([0, 1]), 3) == P([3, 1])

    def test_shift_square(self):
        assert poly_shift(P([0, 0, 1]), 1) == P([1, 2, 1])

    def test_shift_constant(self):
        assert poly_shift(P([5]), -9) == P([5])


class TestSeriesMul:
    def test_identity_factor(self):
        a = TruncatedSeries([1], 1)
        b = TruncatedSeries([1, 1], 1)
        assert series_mul(a, b, 1) == TruncatedSeries([1, 1], 1)

    def test_hand_convolution(self):
        a = TruncatedSeries([1, F(-1, 2)], 1)
        b = TruncatedSeries([1, -1], 1)
        assert series_mul(a, b, 1) == TruncatedSeries([1, F(-3, 2)], 1)

    def test_hand_convolution_against_full_product(self):
        # Same inputs multiplied as full polynomials, then truncated.
        full = P([1, F(-1, 2)]) * P([1, -1])
        assert full.coeffs[:2] == (F(1), F(-3, 2))

    def test_truncation_drops_high_order(self):
        a = TruncatedSeries([0, 1], 1)
        assert series_mul(a, a, 1) == TruncatedSeries([0, 0], 1)

    def test_rejects_too_short_input(self):
        with pytest.raises(ValueError):
            series_mul(TruncatedSeries([1], 1), TruncatedSeries([1], 1), 2)


def test_canonical_form_trims_trailing_zeros():
    p = P([1, 2, 0, 0])
    assert p.coeffs == (F(1), F(2))
    assert p.degree == 1
    assert P().degree == -1
    assert P([0, 0]).degree == -1


def test_series_length_is_order_plus_one():
    s = TruncatedSeries([1], 3)
    assert len(s.coeffs) == 4
    assert s.order == 3
    with pytest.raises(ValueError):
        TruncatedSeries([1, 2, 3], 1)


fractions_st = st.fractions(min_value=-50, max_value=50, max_denominator=9)
poly_st = st.lists(fractions_st, max_size=6).map(P)


@given(poly_st, fractions_st, fractions_st)
def test_shift_then_eval_matches_eval_at_shifted_point(p, a, x):
    assert poly_eval(poly_shift(p, a), x) == poly_eval(p, x + a)


series_st = st.lists(fractions_st, min_size=5, max_size=5).map(
    lambda cs: TruncatedSeries(cs, 4)
)


@given(series_st, series_st)
def test_series_mul_commutative(a, b):
    assert series_mul(a, b, 4) == series_mul(b, a, 4)


@given(series_st, series_st, series_st)
def test_series_mul_associative(a, b, c):
    lhs = series_mul(series_mul(a, b, 4), c, 4)
    rhs = series_mul(a, series_mul(b, c, 4), 4)
    assert lhs == rhs


@given(poly_st, fractions_st)
def test_results_canonical_lowest_terms(p, x):
    v = poly_eval(p, x)
    # Fraction canonicalizes on construction: re-normalizing is a no-op.
    assert F(v.numerator, v.denominator) == v
    assert v.denominator > 0
