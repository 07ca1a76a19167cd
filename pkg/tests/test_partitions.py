from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from toeplitz_minors.partitions import (
    Partition,
    centralizer_order,
    conjugate,
    contains,
    hooks_and_contents,
    partition_to_sequence,
    partitions_in_box,
    partitions_of,
    rotated_complement,
    sequence_to_partition,
    subpartitions,
)

from strategies import partitions


@pytest.mark.parametrize("lam, conj", [((3, 2, 2), (3, 3, 1)), ((), ()), ((5,), (1, 1, 1, 1, 1))])
def test_conjugate(lam, conj):
    assert conjugate(lam) == Partition(conj)


@pytest.mark.parametrize("lam, mu, expected", [((1,), (2, 1), True), ((2,), (1, 1), False), ((2, 2), (3, 2, 1), True)])
def test_contains(lam, mu, expected):
    assert contains(lam, mu) is expected


def test_rotated_complement():
    assert rotated_complement((3, 1), 3, 2) == Partition((2,))
    assert rotated_complement((), 2, 2) == Partition((2, 2))
    assert rotated_complement((3, 3), 3, 2) == Partition()
    with pytest.raises(ValueError):
        rotated_complement((4,), 3, 2)


def test_sequences():
    assert sequence_to_partition((1, 2, 3)) == Partition()
    assert sequence_to_partition((1, 3, 5)) == Partition((2, 1))
    assert partition_to_sequence(sequence_to_partition((4, 7)), 2) == (4, 7)
    with pytest.raises(ValueError):
        sequence_to_partition((2, 2))


@pytest.mark.parametrize("phi, z", [((1, 1), 2), ((3,), 3), ((2, 1), 2), ({2: 2, 1: 1}, 8)])
def test_centralizer_order(phi, z):
    assert centralizer_order(phi) == z


def test_hooks_and_contents():
    assert hooks_and_contents((1,)) == [(1, 0)]
    cells = hooks_and_contents((2, 1))
    assert sorted(h for h, _ in cells) == [1, 1, 3]
    assert sorted(c for _, c in cells) == [-1, 0, 1]
    assert sorted(h for h, _ in hooks_and_contents((2, 2))) == [1, 2, 2, 3]


def test_partition_validation():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_partition_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert sum(1 for _ in partitions_in_box(3, 2)) == 10
    assert sum(1 for _ in subpartitions((2, 1))) == 5


@given(partitions(max_weight=12))
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam


@given(st.integers(0, 5), st.integers(1, 5), st.data())
def test_rotated_complement_involution(d, n, data):
    shapes = list(partitions_in_box(d, n))
    nu = data.draw(st.sampled_from(shapes))
    assert rotated_complement(rotated_complement(nu, d, n), d, n) == nu


@pytest.mark.parametrize("n", range(9))
def test_class_equation(n):
    assert sum(factorial(n) / centralizer_order(phi) for phi in partitions_of(n)) == factorial(n)


def test_sequence_bijection_exhaustive():
    for n in range(1, 7):
        seen = set()
        for t in combinations(range(1, 13), n):
            nu = sequence_to_partition(t)
            assert partition_to_sequence(nu, n) == t
            seen.add(nu)
        # every partition in the (12 - n) x n box is hit exactly once
        assert seen == set(partitions_in_box(12 - n, n))


@given(partitions(max_weight=10))
def test_hook_length_formula(lam):
    # the number of standard tableaux, computed by hooks, is an integer
    prod = 1
    for h, _ in hooks_and_contents(lam):
        prod *= h
    dim = Fraction(factorial(sum(lam)), prod)
    assert dim.denominator == 1
