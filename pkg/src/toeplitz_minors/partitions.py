"""Integer partitions and the small combinatorial maps used to index minors."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive parts; trailing zeros are dropped.

    ``part(j)`` is 1-based and reads 0 past the length.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, j: int) -> int:
        return self[j - 1] if 1 <= j <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self):
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def frequencies(self) -> dict[int, int]:
        return dict(Counter(self))

    def __repr__(self):
        return f"Partition({list(self)})"


def as_partition(x) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


def conjugate(lam) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def contains(lam, mu) -> bool:
    """True iff the diagram of ``lam`` sits inside the diagram of ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if len(lam) > len(mu):
        return False
    return all(a <= b for a, b in zip(lam, mu))


def rectangle(width: int, height: int) -> Partition:
    return Partition([width] * height) if width > 0 else Partition()


def rotated_complement(nu, d: int, n: int) -> Partition:
    """Complement of ``nu`` in the rectangle (d^n), rotated by 180 degrees."""
    nu = as_partition(nu)
    if len(nu) > n or (nu and nu[0] > d):
        raise ValueError(f"{list(nu)} does not fit in ({d}^{n})")
    padded = nu.padded(n)
    return Partition(d - padded[n - 1 - i] for i in range(n))


def sequence_to_partition(t) -> Partition:
    """Strictly increasing positive sequence t -> nu with nu_{N+1-j} = t_j - j."""
    t = list(t)
    n = len(t)
    if any(t[i] >= t[i + 1] for i in range(n - 1)) or (t and t[0] < 1):
        raise ValueError(f"not a strictly increasing positive sequence: {t}")
    return Partition(t[n - 1 - i] - (n - i) for i in range(n))


def partition_to_sequence(nu, n: int) -> tuple[int, ...]:
    padded = as_partition(nu).padded(n)
    return tuple(j + padded[n - j] for j in range(1, n + 1))


def centralizer_order(phi) -> Fraction:
    """z_phi = prod_k k^{n_k} n_k! for a partition given by parts or frequencies."""
    freq = phi if isinstance(phi, dict) else Counter(as_partition(phi))
    z = 1
    for k, nk in freq.items():
        z *= k ** nk * factorial(nk)
    return Fraction(z)


def hooks_and_contents(lam) -> list[tuple[int, int]]:
    """(hook length, content) for each cell, read row by row."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    cells = []
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            cells.append((row - j + conj.part(j) - i + 1, j - i))
    return cells


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def partitions_up_to(weight: int) -> Iterator[Partition]:
    for n in range(weight + 1):
        yield from partitions_of(n)


def partitions_in_box(width: int, height: int) -> Iterator[Partition]:
    """All partitions with at most ``height`` parts, each at most ``width``."""

    def rec(rows_left, cap):
        if rows_left == 0:
            yield ()
            return
        for first in range(cap, -1, -1):
            if first == 0:
                yield ()
                continue
            for rest in rec(rows_left - 1, first):
                yield (first,) + rest

    for parts in rec(height, width):
        yield Partition(parts)


def subpartitions(lam) -> Iterator[Partition]:
    """All nu contained in lam."""
    lam = as_partition(lam)

    def rec(i, cap):
        if i == len(lam):
            yield ()
            return
        for first in range(min(cap, lam[i]), -1, -1):
            if first == 0:
                yield ()
                continue
            for rest in rec(i + 1, first):
                yield (first,) + rest

    for parts in rec(0, lam[0] if lam else 0):
        yield Partition(parts)
