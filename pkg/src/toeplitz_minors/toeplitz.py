"""Toeplitz matrices, minors and the finite-N identities behind them.

T_N(f) has entries d_{j-k}; the minor matrix T_N^{lam,mu}(f) has entries
d_{j - lam_j - k + mu_k}. ``striking_minor`` builds the same matrix a second
way, by deleting rows and columns of a larger T(f), and serves as a check.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .partitions import Partition, as_partition, contains, conjugate, partitions_in_box, partitions_up_to
from .scalar import Series, one_like, to_fraction
from .symbols import Factor, ProductSymbol, SymbolSpec
from .symfunc import FiniteList, skew_schur, schur

__all__ = [
    "toeplitz_matrix",
    "toeplitz_determinant",
    "minor_matrix",
    "minor_determinant",
    "striking_minor",
    "exact_inverse",
    "cofactor_entry",
    "verify_mininv",
    "hh_symbol",
    "ee_symbol",
    "verify_gessel",
    "verify_baxter",
    "verify_case1_minor",
    "verify_ee_schur",
]


def _coefficients(f: SymbolSpec, lo: int, hi: int) -> dict:
    return {k: f.coefficient(k) for k in range(lo, hi + 1)}


def _check_lengths(n: int, lam, mu):
    for name, p in (("lambda", lam), ("mu", mu)):
        if len(p) > n:
            raise ValueError(f"{name} = {list(p)} has more than N = {n} parts")


def toeplitz_matrix(f: SymbolSpec, n: int):
    """T_N(f) = (d_{j-k})."""
    if n < 0:
        raise ValueError("N must be non-negative")
    d = _coefficients(f, -(n - 1), n - 1) if n else {}
    return [[d[j - k] for k in range(n)] for j in range(n)]


def toeplitz_determinant(f: SymbolSpec, n: int):
    """D_N(f); D_0 = 1."""
    if n == 0:
        return one_like(f.like())
    return linalg.det(toeplitz_matrix(f, n))


def minor_matrix(f: SymbolSpec, n: int, lam=(), mu=()):
    lam, mu = as_partition(lam), as_partition(mu)
    _check_lengths(n, lam, mu)
    lp, mp = lam.padded(n), mu.padded(n)
    idx = [[j - lp[j] - k + mp[k] for k in range(n)] for j in range(n)]
    flat = [i for row in idx for i in row]
    d = _coefficients(f, min(flat), max(flat)) if flat else {}
    return [[d[i] for i in row] for row in idx]


def minor_determinant(f: SymbolSpec, n: int, lam=(), mu=()):
    """D_N^{lam,mu}(f)."""
    if n == 0:
        return one_like(f.like())
    return linalg.det(minor_matrix(f, n, lam, mu))


def _kept(indices: list, parts: Partition, n: int) -> list:
    # keep one, strike parts[j] - parts[j+1], ...; everything past the N-th kept index goes
    p = list(parts.padded(n)) + [0]
    out, pos = [], 0
    for j in range(n):
        out.append(indices[pos])
        pos += 1 + p[j] - p[j + 1]
    return out


def striking_minor(f: SymbolSpec, n: int, lam=(), mu=()):
    """T_N^{lam,mu}(f) obtained by deleting rows and columns of T_{N+m}(f),
    m = max(lam_1, mu_1)."""
    lam, mu = as_partition(lam), as_partition(mu)
    _check_lengths(n, lam, mu)
    l1, m1 = lam.part(1), mu.part(1)
    big = toeplitz_matrix(f, n + max(l1, m1))
    rows = list(range(len(big)))
    cols = list(range(len(big)))
    if l1 > m1:
        cols = cols[l1 - m1:]
    elif m1 > l1:
        rows = rows[m1 - l1:]
    return linalg.submatrix(big, _kept(rows, lam, n), _kept(cols, mu, n))


def cofactor_entry(f: SymbolSpec, n: int, j: int, k: int, det_n=None):
    """(T_N^{-1})_{j,k} = (-1)^{j+k} D_{N-1}^{(1^{k-1}),(1^{j-1})} / D_N, 1-based."""
    if det_n is None:
        det_n = toeplitz_determinant(f, n)
    minor = minor_determinant(f, n - 1, (1,) * (k - 1), (1,) * (j - 1))
    sign = -1 if (j + k) % 2 else 1
    return sign * minor / det_n


def exact_inverse(f: SymbolSpec, n: int, check: bool = False):
    """T_N(f)^{-1}. With ``check`` every entry is compared against the
    cofactor formula and a mismatch raises AssertionError."""
    det_n = toeplitz_determinant(f, n)
    if (det_n.is_zero() if isinstance(det_n, Series) else det_n == 0):
        raise linalg.SingularMatrixError(f"D_{n}(f) = 0; T_{n}(f) is not invertible")
    inv = linalg.inverse(toeplitz_matrix(f, n))
    if check:
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                expected = cofactor_entry(f, n, j, k, det_n)
                if inv[j - 1][k - 1] != expected:
                    raise AssertionError(f"cofactor mismatch at ({j},{k}): {inv[j - 1][k - 1]} != {expected}")
    return inv


def verify_mininv(f: SymbolSpec, n: int) -> bool:
    """D_N^{(1^k),(1^j)} = (-1)^{j+k} D_{N+1} (T_{N+1}^{-1})_{j+1,k+1} for 0 <= j,k <= N."""
    det_next = toeplitz_determinant(f, n + 1)
    inv = linalg.inverse(toeplitz_matrix(f, n + 1))
    for j in range(n + 1):
        for k in range(n + 1):
            lhs = minor_determinant(f, n, (1,) * k, (1,) * j)
            sign = -1 if (j + k) % 2 else 1
            if lhs != sign * det_next * inv[j][k]:
                return False
    return True


# graded identities


def hh_symbol(y, x) -> ProductSymbol:
    """H(y; 1/z) H(x; z)"""
    return ProductSymbol([Factor("zinv", "H", y), Factor("z", "H", x)])


def ee_symbol(y, x) -> ProductSymbol:
    """E(y; 1/z) E(x; z)"""
    return ProductSymbol([Factor("zinv", "E", y), Factor("z", "E", x)])


def _agree(a, b, degree: int) -> bool:
    """a == b through t^degree, with enough precision on both sides."""
    prec = degree + 1
    for s in (a, b):
        if isinstance(s, Series) and s.prec < prec:
            raise ValueError(f"precision O(t^{s.prec}) is too low to compare through t^{degree}")
    a = a.truncate(prec) if isinstance(a, Series) else Series([a], prec)
    b = b.truncate(prec) if isinstance(b, Series) else Series([b], prec)
    return a == b


def _cauchy_product(x, y, degree: int) -> Series:
    out = Series([1], prec=degree + 1)
    for a in x.values:
        for b in y.values:
            out = out * (1 / (1 - a * b))
    return out


def verify_gessel(x, y, n: int, degree: int) -> bool:
    """D_N(H(y;1/z) H(x;z)) = sum_{l(nu) <= N} s_nu(y) s_nu(x) through t^degree."""
    lhs = toeplitz_determinant(hh_symbol(y, x), n)
    rhs = Series([], prec=degree + 1)
    for nu in partitions_up_to(degree):
        if len(nu) <= n:
            rhs = rhs + schur(nu, y) * schur(nu, x)
    return _agree(lhs, rhs, degree)


def verify_baxter(y, x, n: int, degree: int) -> bool:
    """D_N(H(y;1/z) H(x;z)) = prod 1/(1 - x_j y_k) for N >= d = #y, and the
    value does not change from N to N + 1."""
    d = len(y.values)
    if n < d:
        raise ValueError(f"Baxter's identity needs N >= d (N = {n}, d = {d})")
    f = hh_symbol(y, x)
    target = _cauchy_product(x, y, degree)
    here = toeplitz_determinant(f, n)
    there = toeplitz_determinant(f, n + 1)
    return _agree(here, target, degree) and _agree(here, there, degree)


def verify_case1_minor(y, x, lam, mu, n: int, degree: int) -> bool:
    """D_N^{lam,mu}(H(y;1/z) H(x;z)) = prod 1/(1 - x_j y_k) sum_nu s_{lam/nu}(y) s_{mu/nu}(x).

    The minor is constant in N only from N = d + l(mu) on (and N >= l(lam)):
    below that, terms s_{nu/mu}(y) with l(nu) > N are missing from the
    finite-N expansion. For mu empty this is Baxter's N >= d.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    d = len(y.values)
    if n < max(d + len(mu), len(lam)):
        raise ValueError(f"need N >= max(d + l(mu), l(lambda)) = {max(d + len(mu), len(lam))}, got N = {n}")
    total = Series([], prec=degree + 1)
    for nu in partitions_up_to(min(sum(lam), sum(mu))):
        if contains(nu, lam) and contains(nu, mu):
            total = total + skew_schur(lam, nu, y) * skew_schur(mu, nu, x)
    target = _cauchy_product(x, y, degree) * total
    return _agree(minor_determinant(hh_symbol(y, x), n, lam, mu), target, degree)


def _ee_sides(y, x, lam, mu, n: int):
    lam, mu = as_partition(lam), as_partition(mu)
    _check_lengths(n, lam, mu)
    ys = [to_fraction(v) for v in y.values]
    if any(v == 0 for v in ys):
        raise ValueError("y values must be nonzero")
    d = len(ys)
    scale = Fraction(1)
    for v in ys:
        scale /= v ** n
    shape = Partition(d + m for m in mu.padded(n))
    # skew_schur with basis E gives s_{(shape/lam)'}
    lhs = skew_schur(shape, lam, FiniteList([1 / v for v in ys] + list(x.values)), basis="E")
    minor = minor_determinant(ee_symbol(y, x), n, lam, mu)
    mu_c, lam_c = conjugate(mu), conjugate(lam)
    total = 0
    # s_{kappa/mu'}(y) vanishes once a column of kappa/mu' is longer than d
    for kappa in partitions_in_box(n, d + len(mu_c)):
        if contains(mu_c, kappa) and contains(lam_c, kappa):
            total = total + skew_schur(kappa, mu_c, y) * skew_schur(kappa, lam_c, x)
    return lhs, scale * minor, scale * total


def verify_ee_schur(y, x, lam, mu, n: int, degree: int | None = None) -> bool:
    """s_{((d^N)+mu/lam)'}(1/y, x) = prod y_k^{-N} D_N^{lam,mu}(E(y;1/z) E(x;z)),
    together with the finite sum form over kappa with kappa_1 <= N."""
    lhs, via_minor, via_sum = _ee_sides(y, x, lam, mu, n)
    if degree is None:
        return lhs == via_minor == via_sum
    return _agree(lhs, via_minor, degree) and _agree(lhs, via_sum, degree)
