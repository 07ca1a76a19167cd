"""Exact dense linear algebra over rationals and truncated series.

Matrices are lists of row lists. Rational determinants use Bareiss
fraction-free elimination; series determinants use expansion by minors
(division free, so no precision is lost to non-unit pivots).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalar import Series, one_like, zero_like

MAX_MINOR_EXPANSION = 12


class SingularMatrixError(ZeroDivisionError):
    pass


def shape(m) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def has_series(m) -> bool:
    return any(isinstance(x, Series) for row in m for x in row)


def identity(n: int, like=Fraction(1)):
    one, zero = one_like(like), zero_like(like)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    n, k = shape(a)
    k2, p = shape(b)
    if k != k2:
        raise ValueError(f"shape mismatch {n}x{k} @ {k2}x{p}")
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = a[i][0] * b[0][j]
            for t in range(1, k):
                s = s + a[i][t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def det(m):
    """Exact determinant; the 0x0 determinant is 1."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    if has_series(m):
        return _det_series(m)
    return _bareiss([[Fraction(x) for x in row] for row in m])


def _bareiss(a):
    n = len(a)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def _det_series(m):
    n = len(m)
    if n > MAX_MINOR_EXPANSION:
        return _det_series_elimination(m)
    # Laplace expansion along rows, memoized on the set of used columns.
    memo: dict[int, object] = {}
    zero = zero_like(next(x for row in m for x in row if isinstance(x, Series)))

    def minor(row: int, used: int):
        if row == n:
            return one_like(zero)
        key = used
        if key in memo:
            return memo[key]
        total = zero
        sign_count = 0
        for col in range(n):
            if used >> col & 1:
                sign_count += 1
                continue
            entry = m[row][col]
            if isinstance(entry, Series):
                if entry.is_zero():
                    continue
            elif entry == 0:
                continue
            term = entry * minor(row + 1, used | (1 << col))
            # sign of the column among the remaining ones
            total = total - term if (col - sign_count) % 2 else total + term
        memo[key] = total
        return total

    return minor(0, 0)


def _det_series_elimination(m):
    a = [list(row) for row in m]
    n = len(a)
    result = one_like(next(x for row in a for x in row if isinstance(x, Series)))
    for k in range(n):
        piv = None
        for r in range(k, n):
            x = a[r][k]
            if (isinstance(x, Series) and not x.is_zero() and x.val == 0) or (
                not isinstance(x, Series) and x != 0
            ):
                piv = r
                break
        if piv is None:
            raise ValueError(f"no invertible pivot in column {k}; matrix too large for minor expansion")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            result = -result
        inv = 1 / a[k][k]
        result = result * a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] * inv
            for j in range(k, n):
                a[i][j] = a[i][j] - f * a[k][j]
    return result


def inverse(m):
    """Exact inverse by Gauss-Jordan elimination."""
    n = len(m)
    like = next((x for row in m for x in row if isinstance(x, Series)), Fraction(1))
    a = [list(row) + e for row, e in zip(m, identity(n, like))]

    def rank(x):
        # lower is better; None means unusable
        if isinstance(x, Series):
            return None if x.is_zero() else x.val
        return None if x == 0 else 0

    for k in range(n):
        ranked = [(rank(a[r][k]), r) for r in range(k, n) if rank(a[r][k]) is not None]
        piv = min(ranked)[1] if ranked else None
        if piv is None:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {k})")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k:
                f = a[i][k]
                if isinstance(f, Series) and f.is_zero() or (not isinstance(f, Series) and f == 0):
                    continue
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [row[n:] for row in a]


def submatrix(m, rows: Sequence[int], cols: Sequence[int]):
    return [[m[r][c] for c in cols] for r in rows]


def equal(a, b) -> bool:
    if shape(a) != shape(b):
        return False
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def format_matrix(m) -> str:
    cells = [[str(x) for x in row] for row in m]
    if not cells:
        return "[]"
    width = max(len(c) for row in cells for c in row)
    return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)
