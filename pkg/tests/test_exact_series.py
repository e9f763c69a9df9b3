from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from moduli_kappa.exact_series import (
    TruncatedSeries,
    bernoulli,
    scale_variable,
    series_int_pow,
    series_inv,
    x_over_tanh,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def series(order):
    return st.lists(rationals, min_size=order, max_size=order).map(lambda cs: TruncatedSeries(tuple(cs)))


def invertible(order):
    return series(order).filter(lambda s: s[0] != 0)


def _sympy_coeffs(expr, order):
    x = sp.Symbol("x")
    poly = sp.series(expr(x), x, 0, order).removeO()
    return [Fraction(str(poly.coeff(x, k))) for k in range(order)]


def test_bernoulli_low_values():
    assert [bernoulli(k) for k in range(7)] == [
        1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)
    ]


def test_bernoulli_against_sympy():
    for k in range(2, 40):
        assert bernoulli(k) == Fraction(str(sp.bernoulli(k)))


def test_x_over_tanh_against_sympy():
    assert list(x_over_tanh(14).coeffs) == _sympy_coeffs(lambda x: x / sp.tanh(x), 14)


def test_x_over_tanh_from_exponential_series():
    # x/tanh x = x * cosh / sinh, with cosh and sinh/x built from factorials
    order = 12
    cosh = TruncatedSeries.from_coeffs(
        [Fraction(1, sp.factorial(k)) if k % 2 == 0 else 0 for k in range(order)], order
    )
    sinh_over_x = TruncatedSeries.from_coeffs(
        [Fraction(1, sp.factorial(k + 1)) if k % 2 == 0 else 0 for k in range(order)], order
    )
    assert x_over_tanh(order) == cosh / sinh_over_x


def test_mismatched_orders_rejected():
    with pytest.raises(ValueError, match="mismatched"):
        TruncatedSeries.one(3) + TruncatedSeries.one(4)


def test_zero_constant_term_not_invertible():
    with pytest.raises(ZeroDivisionError):
        series_inv(TruncatedSeries.from_coeffs([0, 1], 3))


def test_getitem_beyond_order_is_zero():
    assert TruncatedSeries.from_coeffs([1, 2], 2)[5] == 0


@given(invertible(6))
def test_inverse_is_two_sided(a):
    assert a * series_inv(a) == TruncatedSeries.one(6)
    assert series_inv(a) * a == TruncatedSeries.one(6)


@given(series(6), series(6), series(6))
def test_product_is_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(invertible(5), st.integers(-4, 6), st.integers(-4, 6))
def test_power_law(a, j, k):
    assert series_int_pow(a, j) * series_int_pow(a, k) == series_int_pow(a, j + k)


@given(series(6), series(6), rationals)
def test_scale_variable_is_a_ring_map(a, b, c):
    assert scale_variable(a * b, c) == scale_variable(a, c) * scale_variable(b, c)
