"""Brute-force constant-term evaluation of the Heine integral.

(1/2pi)^N times the integral over the torus becomes the constant term of a
Laurent polynomial in z_1..z_N, and |z_j - z_k|^2 is (z_j - z_k)(1/z_j - 1/z_k).
Schur insertions are expanded by listing semistandard tableaux, so nothing
here goes through determinants. This is a test instrument: sizes are capped.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import factorial

from .laurent import LaurentPoly
from .partitions import as_partition
from .scalar import Series
from .symbols import PureFH, SymbolSpec

__all__ = [
    "OracleLimitError",
    "constant_term",
    "tableau_schur",
    "heine_integral",
    "morris_integral",
    "pairing",
    "max_oracle_n",
]

MAX_SUPPORT_WIDTH = 12


class OracleLimitError(ValueError):
    """The request is beyond what brute force is allowed to attempt."""


def max_oracle_n() -> int:
    """Cap on N, from TM_MAX_ORACLE_N (default 4)."""
    raw = os.environ.get("TM_MAX_ORACLE_N", "4")
    try:
        return int(raw)
    except ValueError:
        raise OracleLimitError(f"TM_MAX_ORACLE_N must be an integer, got {raw!r}") from None


def constant_term(p: LaurentPoly):
    return p.constant_term()


def _tableaux(shape: tuple, n: int):
    # yields letter-count vectors of semistandard tableaux, filled row by row
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    grid: dict = {}
    counts = [0] * n

    def fill(idx):
        if idx == len(cells):
            yield tuple(counts)
            return
        i, j = cells[idx]
        lo = grid[(i, j - 1)] if j else 1
        if i:
            lo = max(lo, grid[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            grid[(i, j)] = v
            counts[v - 1] += 1
            yield from fill(idx + 1)
            counts[v - 1] -= 1
        grid.pop((i, j), None)

    yield from fill(0)


def tableau_schur(lam, n: int, inverse: bool = False) -> LaurentPoly:
    """s_lam(z_1, ..., z_n) as a sum over tableaux (or s_lam(1/z) with ``inverse``)."""
    lam = as_partition(lam)
    terms: dict = {}
    if len(lam) <= n:
        for counts in _tableaux(tuple(lam), n):
            e = tuple(-c for c in counts) if inverse else counts
            terms[e] = terms.get(e, 0) + 1
    return LaurentPoly(n, terms)


def _vandermonde_squared(n: int) -> LaurentPoly:
    out = LaurentPoly.constant(n)
    for j in range(n):
        for k in range(j + 1, n):
            zj, zk = LaurentPoly.variable(n, j), LaurentPoly.variable(n, k)
            wj, wk = LaurentPoly.variable(n, j, -1), LaurentPoly.variable(n, k, -1)
            out = out * (zj - zk) * (wj - wk)
    return out


def _check_finite(f: SymbolSpec) -> tuple[int, int]:
    lo, hi = f.support()
    if lo is None or hi is None:
        raise OracleLimitError("the oracle needs a symbol with finite Fourier support")
    if hi - lo > MAX_SUPPORT_WIDTH:
        raise OracleLimitError(f"support width {hi - lo} exceeds {MAX_SUPPORT_WIDTH}")
    return lo, hi


def heine_integral(f: SymbolSpec, lam=(), mu=(), n: int = 1):
    """(1/N!) CT[ s_lam(z) s_mu(1/z) prod f(z_j) prod_{j<k} |z_j - z_k|^2 ].

    With d_k the coefficient of z^k, this is det(d_{j - lam_j - k + mu_k}).
    Putting s_lam on 1/z instead gives the transposed pairing D^{mu,lam}.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    cap = max_oracle_n()
    if n < 0:
        raise ValueError("N must be non-negative")
    if n > cap:
        raise OracleLimitError(f"N = {n} exceeds the oracle cap {cap} (TM_MAX_ORACLE_N)")
    if len(lam) > n or len(mu) > n:
        raise ValueError("lambda and mu need at most N parts")
    lo, hi = _check_finite(f)
    d = {k: f.coefficient(k) for k in range(lo, hi + 1)}
    zero = 0 * f.like() if isinstance(f.like(), Series) else Fraction(0)
    if n == 0:
        return zero + 1
    rest = tableau_schur(lam, n) * tableau_schur(mu, n, inverse=True) * _vandermonde_squared(n)
    # prod f(z_j) is separable: pair each term of the rest with prod_i d_{-e_i}
    total = zero
    for e, c in rest.terms.items():
        if any(-a not in d for a in e):
            continue
        weight = c
        for a in e:
            weight = weight * d[-a]
        total = total + weight
    return total / factorial(n)


def morris_integral(gamma: int, delta: int, lam=(), mu=(), n: int = 1) -> Fraction:
    """The Heine integral of (1 + 1/z)^delta (1 + z)^gamma with two Schur insertions."""
    return heine_integral(PureFH(gamma, delta), lam, mu, n)


def pairing(f: SymbolSpec, p_coeffs, q_coeffs):
    """CT[p(z) q(1/z) f(z)] for polynomials p, q given by coefficient lists,
    which is sum_{r,s} a_r b_s d_{s-r} with d_k the coefficient of z^k.

    Only d_k with -deg p <= k <= deg q enter, so symbols with infinite
    support are fine here.
    """
    # one variable: the constant term is the double sum itself. Going through
    # LaurentPoly would drop series terms that read 0 + O(q^m) and with them
    # their precision.
    total = None
    for r, a in enumerate(p_coeffs):
        for s, b in enumerate(q_coeffs):
            term = a * b * f.coefficient(s - r)
            total = term if total is None else total + term
    return Fraction(0) if total is None else total
