from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from toeplitz_minors import linalg
from toeplitz_minors.partitions import partitions_up_to
from toeplitz_minors.scalar import Series
from toeplitz_minors.symbols import Factor, ProductSymbol, PureFH, ThetaGD, Tridiagonal
from toeplitz_minors.symfunc import FiniteList, graded, ones, skew_schur
from toeplitz_minors.toeplitz import (
    exact_inverse,
    minor_determinant,
    minor_matrix,
    striking_minor,
    toeplitz_determinant,
    toeplitz_matrix,
    verify_baxter,
    verify_case1_minor,
    verify_ee_schur,
    verify_gessel,
    verify_mininv,
)

from strategies import partitions, small_rationals

F = Fraction
FH11 = PureFH(1, 1)


def test_toeplitz_matrix():
    assert toeplitz_matrix(FH11, 2) == [[2, 1], [1, 2]]
    assert toeplitz_matrix(PureFH(2, 3), 1) == [[10]]
    x, y = F(1, 2), F(1, 3)
    t = toeplitz_matrix(Tridiagonal(x, y), 3)
    assert t == [[1 + x * y, y, 0], [x, 1 + x * y, y], [0, x, 1 + x * y]]


def test_toeplitz_determinant():
    assert toeplitz_determinant(FH11, 2) == 3
    assert toeplitz_determinant(PureFH(1, 2), 2) == 6
    assert toeplitz_determinant(ProductSymbol([]), 1) == 1
    assert toeplitz_determinant(FH11, 0) == 1


def test_minor_matrix():
    assert minor_matrix(FH11, 3) == toeplitz_matrix(FH11, 3)
    assert minor_matrix(FH11, 2, (), (1,)) == [[1, 1], [0, 2]]
    assert minor_determinant(FH11, 2, (), (1,)) == 2
    e_symbol = ProductSymbol([Factor("z", "E", ones(2))])
    assert minor_determinant(e_symbol, 2, (), (1,)) == 2


def test_striking_minor():
    assert striking_minor(FH11, 3) == toeplitz_matrix(FH11, 3)
    assert striking_minor(FH11, 2, (), (1,)) == minor_matrix(FH11, 2, (), (1,))
    f = PureFH(2, 1)
    assert striking_minor(f, 2, (1,), (1,)) == minor_matrix(f, 2, (1,), (1,))


def test_exact_inverse():
    assert exact_inverse(FH11, 2) == [[F(2, 3), F(-1, 3)], [F(-1, 3), F(2, 3)]]
    assert exact_inverse(PureFH(2, 3), 1) == [[F(1, 10)]]
    assert exact_inverse(ThetaGD(1, 1, F(1, 2)), 1) == [[F(2, 3)]]
    with pytest.raises(linalg.SingularMatrixError):
        exact_inverse(Tridiagonal(1, -1), 1)


def test_series_determinant():
    q = Series.gen(6)
    value = toeplitz_determinant(ThetaGD(1, 1, q), 2)
    # 1 + q + q^2 at N = 2 for Theta_{1,1}: det [[1+q, 1], [q, 1+q]]
    assert (value - (1 + q + q ** 2)).is_zero()


def test_gessel_examples():
    t = FiniteList([Series.gen(4)])
    assert verify_gessel(t, t, 1, 4)
    assert verify_gessel(FiniteList(t.values * 2), t, 2, 4)
    t0 = FiniteList([Series.gen(0)])
    assert verify_gessel(t0, t0, 1, 0)


def test_baxter_examples():
    x = FiniteList([Series.gen(5)])
    y = FiniteList([F(1, 2)])
    for n in (1, 2, 3):
        assert verify_baxter(y, x, n, 5)
    assert verify_baxter(FiniteList([F(1, 2), F(1, 3)]), x, 2, 5)
    with pytest.raises(ValueError):
        verify_baxter(FiniteList([F(1, 2), F(1, 3)]), x, 1, 5)


def test_baxter_empty_x():
    y = FiniteList([F(1, 2)])
    f = ProductSymbol([Factor("zinv", "H", y), Factor("z", "H", FiniteList([]))])
    assert toeplitz_determinant(f, 3) == 1


def test_case1_examples():
    x, y = FiniteList([Series.gen(5)]), FiniteList([F(1, 2)])
    assert verify_case1_minor(y, x, (), (), 1, 5)
    assert verify_case1_minor(y, x, (), (1,), 2, 5)
    assert verify_case1_minor(y, x, (1,), (1,), 2, 5)


def test_case1_needs_corrected_bound():
    # at N = d the finite-N minor still misses a term
    x, y = FiniteList([Series.gen(5)]), FiniteList([F(1, 2)])
    with pytest.raises(ValueError):
        verify_case1_minor(y, x, (1,), (1,), 1, 5)


def test_ee_schur_examples():
    assert verify_ee_schur(FiniteList([1]), FiniteList([F(1, 2)]), (), (), 2)
    assert skew_schur((2,), (), FiniteList([1, F(1, 2)])) == F(7, 4) == toeplitz_determinant(Tridiagonal(F(1, 2), 1), 2)
    assert verify_ee_schur(FiniteList([1]), FiniteList([]), (), (), 3)
    assert verify_ee_schur(FiniteList([1]), FiniteList([1]), (1,), (1,), 2)


FH_GRID = [PureFH(g, d) for g in range(4) for d in range(4)]


def test_striking_equals_index_formula_exhaustive():
    shapes = list(partitions_up_to(4))
    for f in FH_GRID:
        for n in range(1, 6):
            for lam, mu in product(shapes, repeat=2):
                if len(lam) > n or len(mu) > n:
                    continue
                assert striking_minor(f, n, lam, mu) == minor_matrix(f, n, lam, mu)


finite_symbols = st.one_of(
    st.sampled_from(FH_GRID),
    st.builds(ThetaGD, st.integers(1, 3), st.integers(1, 3), st.sampled_from([F(1, 2), F(2, 3)])),
    st.builds(Tridiagonal, small_rationals, small_rationals),
)


@given(finite_symbols, st.integers(1, 5))
def test_inverse_times_matrix(f, n):
    try:
        inv = exact_inverse(f, n)
    except linalg.SingularMatrixError:
        assert toeplitz_determinant(f, n) == 0
        return
    assert linalg.matmul(inv, toeplitz_matrix(f, n)) == linalg.identity(n)


@given(finite_symbols, st.integers(0, 4))
def test_minor_inverse_relation(f, n):
    if toeplitz_determinant(f, n + 1) == 0:
        return
    assert verify_mininv(f, n)


@given(st.lists(small_rationals, max_size=3), partitions(4), partitions(4), st.integers(0, 2), st.sampled_from("HE"))
def test_minor_is_skew_schur(values, lam, mu, extra, kind):
    n = max(len(lam), len(mu)) + extra
    x = FiniteList(values)
    f = ProductSymbol([Factor("z", kind, x)])
    assert minor_determinant(f, n, lam, mu) == skew_schur(mu, lam, x, kind)


@given(st.lists(small_rationals.filter(bool), min_size=1, max_size=2), st.lists(small_rationals, max_size=2), st.integers(1, 3))
def test_gessel_random(a, b, n):
    assert verify_gessel(graded(b, 5), graded(a, 5), n, 5)


@given(st.lists(small_rationals.filter(bool), min_size=1, max_size=2), st.lists(small_rationals, max_size=2), partitions(2), partitions(2))
def test_ee_random(a, b, lam, mu):
    n = max(len(lam), len(mu), 1)
    assert verify_ee_schur(FiniteList(a), FiniteList(b), lam, mu, n)
