from fractions import Fraction
from math import factorial, gcd

import pytest
from hypothesis import given, strategies as st

from toeplitz_minors.scalar import (
    Series,
    barnes_g,
    binomial,
    factorial_gamma,
    q_barnes,
    q_binomial,
    q_gamma,
    q_pochhammer,
    scalar_from_json,
    scalar_to_json,
    series_arith,
)

from strategies import small_rationals

F = Fraction
HALF = F(1, 2)


@pytest.mark.parametrize("n, value", [(0, 1), (3, 6), (6, 720)])
def test_factorial_gamma(n, value):
    assert factorial_gamma(n) == value


@pytest.mark.parametrize("n, value", [(1, 1), (4, 2), (6, 288)])
def test_barnes_g(n, value):
    assert barnes_g(n) == value


def test_q_pochhammer():
    assert q_pochhammer(0, F(3, 7)) == 1
    assert q_pochhammer(2, HALF) == F(3, 8)
    # (1 - q)(1 - q^2) as a series known through q^3
    assert q_pochhammer(2, Series.gen(3)).coefficient_list() == [1, -1, -1, 1]


@pytest.mark.parametrize("n, value", [(1, 1), (3, F(3, 2)), (4, F(21, 8))])
def test_q_gamma(n, value):
    assert q_gamma(n, HALF) == value


@pytest.mark.parametrize("n, value", [(2, 1), (3, 1), (4, F(3, 2))])
def test_q_barnes(n, value):
    assert q_barnes(n, HALF) == value


def test_q_binomial():
    assert q_binomial(5, 0, F(2, 3)) == 1
    assert q_binomial(2, 1, HALF) == F(3, 2)
    # Gaussian binomial (1 + q^2)(1 + q + q^2) at q = 1/2
    assert q_binomial(4, 2, HALF) == F(35, 16)
    assert q_binomial(3, 4, HALF) == 0
    assert q_binomial(3, -1, HALF) == 0


def test_q_one_is_rejected():
    with pytest.raises(ValueError):
        q_gamma(3, 1)


@pytest.mark.parametrize("a, b, value", [(5, 2, 10), (7, -1, 0), (-1, 2, 1), (-3, 3, -10)])
def test_binomial(a, b, value):
    assert binomial(a, b) == value


def test_series_examples():
    one_minus_q = Series([1, -1], prec=4)
    assert series_arith(one_minus_q, None, "invert").coefficient_list() == [1, 1, 1, 1]
    prod = series_arith(Series([1, 1], prec=4), one_minus_q, "mul")
    assert prod.coefficient_list() == [1, 0, -1, 0]
    fib = series_arith(Series([1, -1, -1], prec=5), None, "invert")
    assert fib.coefficient_list() == [1, 1, 2, 3, 5]


def test_series_strict_order():
    with pytest.raises(ValueError):
        series_arith(Series([1], prec=3), Series([1], prec=4), "add")
    with pytest.raises(ZeroDivisionError):
        series_arith(Series([0, 1], prec=3), None, "invert")


def test_series_precision_is_tracked():
    q = Series.gen(5)
    assert (q * q).prec == 7  # q is known to O(q^6), so q^2 to O(q^7)
    assert (1 / (1 - q)).prec == 6
    with pytest.raises(ValueError):
        (1 / (1 - q)).coefficient(6)


def test_negative_powers():
    q = Series.gen(6)
    x = (1 - q) / q ** 2
    assert x.valuation == -2
    assert (x * q ** 2 - (1 - q)).is_zero()


@given(st.integers(1, 12))
def test_q_gamma_limit(n):
    eps = Series.gen(3)
    assert q_gamma(n, 1 - eps).constant_term() == factorial_gamma(n - 1)


@given(st.integers(1, 12), st.sampled_from([HALF, F(1, 3), F(2, 3)]))
def test_q_gamma_is_a_q_factorial(n, q):
    assert q_gamma(n, q) == q_pochhammer(n - 1, q) / (1 - q) ** (n - 1)


@given(st.integers(1, 15))
def test_barnes_recursion(n):
    assert barnes_g(n + 1) / barnes_g(n) == factorial_gamma(n - 1)


@given(st.integers(0, 9), st.data(), st.sampled_from([HALF, F(1, 3), F(-2, 5)]))
def test_q_binomial_symmetry(a, data, q):
    b = data.draw(st.integers(0, a))
    assert q_binomial(a, b, q) == q_binomial(a, a - b, q)


@given(st.integers(0, 8), st.integers(0, 8))
def test_q_binomial_limit(a, b):
    eps = Series.gen(2)
    assert q_binomial(a, b, 1 - eps).constant_term() == binomial(a, b)


@given(st.integers(1, 10), st.sampled_from([HALF, F(1, 3), F(2, 3)]))
def test_results_are_reduced(n, q):
    for x in (q_gamma(n, q), q_barnes(n, q), q_pochhammer(n, q), barnes_g(n)):
        assert isinstance(x, Fraction)
        assert gcd(abs(x.numerator), x.denominator) == 1


series = st.builds(
    lambda cs: Series(cs, prec=6),
    st.lists(small_rationals, min_size=1, max_size=6),
)


@given(series, series, series)
def test_series_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a


@given(series)
def test_series_inverse(a):
    if a.valuation != 0:
        return
    assert (a * a.inverse() - 1).is_zero()


@given(series)
def test_series_json_round_trip(a):
    assert scalar_from_json(scalar_to_json(a)) == a


@given(small_rationals)
def test_rational_json_round_trip(x):
    assert scalar_from_json(scalar_to_json(x)) == x


def test_factorial_matches_math():
    assert all(factorial_gamma(n) == factorial(n) for n in range(15))
