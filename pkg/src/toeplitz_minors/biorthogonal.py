"""Biorthogonal polynomial pairs on the unit circle and the kernel that
inverts a Toeplitz matrix.

Pairs are stored monic, with norm2 = <p_j, q_j>_f = D_{j+1}(f) / D_j(f),
where <p, q>_f is the constant term of p(z) q(1/z) f(z). In that
normalization

    c_{j,k} = sum_{r=max(j,k)}^{N-1} a_j^{(r)} b_k^{(r)} / norm2_r

is exactly (T_N(f)^{-1})_{j,k}, 0-based, rows and columns in matrix order.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .scalar import Series, one_like, q_binomial, q_gamma, q_pochhammer, zero_like
from .symbols import SymbolSpec
from .toeplitz import toeplitz_determinant, toeplitz_matrix

__all__ = [
    "BiorthogonalPair",
    "KernelCoefficients",
    "bordered_pair",
    "closed_pair_theta",
    "closed_pair_theta_d",
    "kernel_coefficients",
    "kernel_closed_theta",
    "kernel_closed_theta_d",
]


@dataclass(frozen=True)
class BiorthogonalPair:
    """Monic p_j, q_j (coefficients of z^0 .. z^j) and their pairing."""

    p_coeffs: tuple
    q_coeffs: tuple
    norm2: object

    @property
    def degree(self) -> int:
        return len(self.p_coeffs) - 1


@dataclass(frozen=True)
class KernelCoefficients:
    """c[j][k] is the coefficient of z^j w^{-k} in K_N(z, w)."""

    c: tuple

    @property
    def size(self) -> int:
        return len(self.c)

    def as_lists(self) -> list:
        return [list(row) for row in self.c]


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, Series) else x == 0


def _nonzero(value, label: str):
    if _is_zero(value):
        raise linalg.SingularMatrixError(f"{label} vanishes; the pair does not exist")
    return value


def _q_pow(q, e: int):
    if e == 0:
        return one_like(q)
    return q ** e if e > 0 else one_like(q) / q ** (-e)


def bordered_pair(f: SymbolSpec, j: int) -> BiorthogonalPair:
    """p_j from T_{j+1}(f) with its last row replaced by 1, z, ..., z^j, and q_j
    with its last column replaced the same way; both divided by D_j(f)."""
    if j < 0:
        raise ValueError("j must be non-negative")
    dj = _nonzero(toeplitz_determinant(f, j), f"D_{j}(f)")
    dnext = _nonzero(toeplitz_determinant(f, j + 1), f"D_{j + 1}(f)")
    n = j + 1
    t = toeplitz_matrix(f, n)
    one = one_like(f.like())
    zero = zero_like(f.like())
    p, q = [], []
    for r in range(n):
        unit = [one if c == r else zero for c in range(n)]
        p.append(linalg.det(t[:j] + [unit]) / dj)
        q.append(linalg.det([t[i][:j] + [unit[i]] for i in range(n)]) / dj)
    return BiorthogonalPair(tuple(p), tuple(q), dnext / dj)


def _qfact(n: int, q):
    # [n]_q! = (q;q)_n / (1-q)^n, invertible at q = 1 - eps
    return q_gamma(n + 1, q)


def closed_pair_theta(gamma: int, delta: int, j: int, q) -> BiorthogonalPair:
    """Monic pair for Theta_{gamma,delta}.

    p_j: sum_r (-1)^{j+r} [j, r] (q;q)_{gamma+r}/(q;q)_{gamma+j} (q;q)_{delta+j-r-1}/(q;q)_{delta-1} z^r
    q_j: sum_r (-1)^{j+r} [j, r] (q;q)_{gamma+j-r-1}/(q;q)_{gamma-1} (q;q)_{delta+r}/(q;q)_{delta+j} q^{j-r} z^r
    norm2 = (q;q)_j (q;q)_{gamma+delta+j} / ((q;q)_{delta+j} (q;q)_{gamma+j})

    Every (q;q) ratio is balanced, so q-factorials [n]_q! are used and q may
    be a series around 1.
    """
    if gamma < 1 or delta < 1 or j < 0:
        raise ValueError("need positive gamma, delta and j >= 0")
    f = lambda n: _qfact(n, q)  # noqa: E731
    p, b = [], []
    for r in range(j + 1):
        sign = -1 if (j + r) % 2 else 1
        binom = q_binomial(j, r, q)
        p.append(sign * binom * f(gamma + r) / f(gamma + j) * f(delta + j - r - 1) / f(delta - 1))
        b.append(sign * binom * f(gamma + j - r - 1) / f(gamma - 1) * f(delta + r) / f(delta + j) * _q_pow(q, j - r))
    norm2 = f(j) * f(gamma + delta + j) / (f(delta + j) * f(gamma + j))
    return BiorthogonalPair(tuple(p), tuple(b), norm2)


def _require_series(q):
    if not isinstance(q, Series):
        raise ValueError("Theta_delta pairs need a series-valued q")


def closed_pair_theta_d(delta: int, j: int, q) -> BiorthogonalPair:
    """Monic pair for Theta_delta.

    p_j: sum_r (-1)^{j+r} [j, r] (q;q)_{delta+j-r-1}/(q;q)_{delta-1} q^{-(delta-1)(j-r)} z^r
    q_j: sum_r (-1)^{j+r} [j, r] (q;q)_{delta+r}/(q;q)_{delta+j} q^{delta(j-r)} z^r
    norm2 = (q;q)_j / (q;q)_{delta+j}
    """
    _require_series(q)
    if delta < 1 or j < 0:
        raise ValueError("need delta >= 1 and j >= 0")
    qp = lambda n: q_pochhammer(n, q)  # noqa: E731
    p, b = [], []
    for r in range(j + 1):
        sign = -1 if (j + r) % 2 else 1
        binom = q_binomial(j, r, q)
        p.append(sign * binom * qp(delta + j - r - 1) / qp(delta - 1) * _q_pow(q, -(delta - 1) * (j - r)))
        b.append(sign * binom * qp(delta + r) / qp(delta + j) * _q_pow(q, delta * (j - r)))
    return BiorthogonalPair(tuple(p), tuple(b), qp(j) / qp(delta + j))


def kernel_coefficients(f: SymbolSpec, n: int, pairs=None) -> KernelCoefficients:
    """c_{j,k} = sum_{r=max(j,k)}^{N-1} a_j^{(r)} b_k^{(r)} / norm2_r from bordered pairs."""
    if n < 1:
        raise ValueError("N must be positive")
    if pairs is None:
        pairs = [bordered_pair(f, r) for r in range(n)]
    zero = zero_like(f.like())
    c = []
    for j in range(n):
        row = []
        for k in range(n):
            total = zero
            for r in range(max(j, k), n):
                pr = pairs[r]
                total = total + pr.p_coeffs[j] * pr.q_coeffs[k] / pr.norm2
            row.append(total)
        c.append(tuple(row))
    return KernelCoefficients(tuple(c))


def _qbin(a: int, b: int, q):
    # falling convention, so [-1, 0] = 1 at the r = k edge
    if b < 0:
        return zero_like(q)
    if a >= 0:
        return q_binomial(a, b, q)
    out = one_like(q)
    for i in range(b):
        out = out * (1 - _q_pow(q, a - i)) / (1 - q ** (i + 1))
    return out


def kernel_closed_theta(gamma: int, delta: int, n: int, q) -> KernelCoefficients:
    """Closed kernel for Theta_{gamma,delta} (N x N):

    c_{j,k} = (-1)^{j+k} Gamma_q(gamma+j+1) Gamma_q(delta+k+1) / (Gamma_q(j+1) Gamma_q(k+1))
              sum_{r=max(j,k)}^{N-1} q^{r-k} Gamma_q(r+1) / Gamma_q(gamma+delta+r+1)
              [gamma+r-k-1, r-k] [delta+r-j-1, r-j]
    """
    if gamma < 1 or delta < 1 or n < 1:
        raise ValueError("need positive gamma, delta and N")
    g = lambda m: q_gamma(m, q)  # noqa: E731
    c = []
    for j in range(n):
        row = []
        for k in range(n):
            total = zero_like(q)
            for r in range(max(j, k), n):
                total = total + _q_pow(q, r - k) * g(r + 1) / g(gamma + delta + r + 1) * _qbin(gamma + r - k - 1, r - k, q) * _qbin(delta + r - j - 1, r - j, q)
            sign = -1 if (j + k) % 2 else 1
            row.append(sign * g(gamma + j + 1) * g(delta + k + 1) / (g(j + 1) * g(k + 1)) * total)
        c.append(tuple(row))
    return KernelCoefficients(tuple(c))


def kernel_closed_theta_d(delta: int, n: int, q) -> KernelCoefficients:
    """Closed kernel for Theta_delta (N x N):

    c_{j,k} = sum_{r=max(j,k)}^{N-1} (-1)^{j+k} q^{r+(delta-1)j-delta k}
              (q;q)_{delta+k}/(q;q)_j [r, r-k] [delta+r-j-1, r-j]
    """
    _require_series(q)
    if delta < 1 or n < 1:
        raise ValueError("need delta >= 1 and N >= 1")
    c = []
    for j in range(n):
        row = []
        for k in range(n):
            total = zero_like(q)
            for r in range(max(j, k), n):
                total = total + _q_pow(q, r + (delta - 1) * j - delta * k) * _qbin(r, r - k, q) * _qbin(delta + r - j - 1, r - j, q)
            sign = -1 if (j + k) % 2 else 1
            row.append(sign * q_pochhammer(delta + k, q) / q_pochhammer(j, q) * total)
        c.append(tuple(row))
    return KernelCoefficients(tuple(c))
