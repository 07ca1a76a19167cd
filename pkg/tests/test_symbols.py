from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from toeplitz_minors.scalar import Series
from toeplitz_minors.symbols import (
    Factor,
    InfiniteSupportError,
    ProductSymbol,
    PureFH,
    ThetaD,
    ThetaGD,
    Tridiagonal,
    as_laurent,
    fourier_coefficient,
    fourier_window,
    symbol_from_json,
    symbol_to_json,
)
from toeplitz_minors.symfunc import FiniteList, PrincipalFinite, ones

from strategies import small_rationals

F = Fraction


def test_fourier_coefficient():
    assert fourier_coefficient(PureFH(1, 1), 0) == 2
    assert fourier_coefficient(PureFH(1, 1), 2) == 0
    q = Series.gen(6)
    assert fourier_coefficient(ThetaGD(1, 1, q), 1) == q
    assert fourier_coefficient(ThetaGD(1, 1, F(1, 2)), 1) == F(1, 2)


def test_fourier_window():
    assert fourier_window(Tridiagonal(1, 1), -2, 2) == [0, 1, 2, 1, 0]
    assert fourier_window(PureFH(1, 2), -2, 1) == [1, 3, 3, 1]
    assert fourier_window(PureFH(2, 3), 0, 0) == [10]


def test_as_laurent():
    assert as_laurent(PureFH(1, 1)).terms == {(-1,): 1, (0,): 2, (1,): 1}
    assert as_laurent(Tridiagonal(F(1, 2), F(1, 3))).terms == {(-1,): F(1, 3), (0,): F(7, 6), (1,): F(1, 2)}
    assert as_laurent(ProductSymbol([])).terms == {(0,): 1}
    with pytest.raises(InfiniteSupportError):
        as_laurent(ThetaD(1, Series.gen(4)))


def test_theta_d_coefficients():
    q = Series.gen(8)
    f = ThetaD(1, q)
    # E(1; 1/z) E(q, q^2, ...; z): d_0 = 1 + e_1(q, q^2, ...) = 1/(1-q)
    assert (f.coefficient(0) - 1 / (1 - q)).is_zero()
    assert f.coefficient(-2).is_zero()


def test_json_round_trip():
    for f in (PureFH(2, 1), ThetaGD(1, 2, F(1, 2)), ThetaD(2, Series.gen(5)), Tridiagonal(F(1, 2), 3)):
        assert symbol_from_json(symbol_to_json(f)) == f
    g = ProductSymbol([Factor("z", "H", FiniteList([F(1, 2)]))])
    assert symbol_from_json(symbol_to_json(g)) == g


def test_bad_json():
    with pytest.raises(ValueError):
        symbol_from_json({"builtin": "nope"})
    with pytest.raises(ValueError):
        PureFH(-1, 0)


@given(st.integers(0, 5), st.integers(0, 5), st.integers(-10, 10))
def test_pure_fh_matches_convolution(g, d, k):
    f = PureFH(g, d)
    assert f.coefficient(k) == ProductSymbol(f.factors).coefficient(k)


@given(st.integers(0, 3), st.integers(0, 3))
def test_theta_at_q_one(g, d):
    eps = Series.gen(2)
    f, plain = ThetaGD(g, d, 1 - eps), PureFH(g, d)
    for k in range(-d - 1, g + 2):
        assert f.coefficient(k).constant_term() == plain.coefficient(k)


symbols = st.one_of(
    st.builds(PureFH, st.integers(0, 4), st.integers(0, 4)),
    st.builds(ThetaGD, st.integers(0, 4), st.integers(0, 4), st.sampled_from([F(1, 2), F(-1, 3), F(2)])),
    st.builds(Tridiagonal, small_rationals, small_rationals),
    st.builds(
        lambda a, b: ProductSymbol([Factor("zinv", "H", FiniteList(a)), Factor("z", "E", FiniteList(b))]),
        st.lists(small_rationals, max_size=0),
        st.lists(small_rationals, max_size=3),
    ),
)


@given(symbols, st.integers(1, 4))
def test_support_bounds(f, beyond):
    lo, hi = f.support()
    assert f.coefficient(hi + beyond) == 0
    assert f.coefficient(lo - beyond) == 0


@given(symbols)
def test_coefficients_sum_to_value_at_one(f):
    lo, hi = f.support()
    assert sum(fourier_window(f, lo, hi)) == f.value_at_one()


@given(symbols, st.integers(-5, 5))
def test_reflection(f, k):
    assert f.reflected().coefficient(k) == f.coefficient(-k)


def test_generic_factor_symbol():
    f = ProductSymbol([Factor("zinv", "E", ones(2)), Factor("z", "E", PrincipalFinite(F(1, 2), 2))])
    # (1 + 1/z)^2 (1 + z)(1 + z/2)
    assert fourier_window(f, -2, 2) == [1, F(7, 2), F(9, 2), F(5, 2), F(1, 2)]
