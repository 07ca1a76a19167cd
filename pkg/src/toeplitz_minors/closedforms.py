"""Explicit evaluations: tridiagonal symbols, the pure Fisher-Hartwig symbol,
and the two principal specializations Theta_{gamma,delta} and Theta_delta.

Every function here has a direct counterpart elsewhere in the package
(a determinant, an inverse, or a Jacobi-Trudi evaluation) and the tests hold
them against each other. Where a q-formula needed correcting, the docstring
states the form that is implemented.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import as_partition, conjugate
from .scalar import (
    Series,
    barnes_g,
    binomial,
    factorial_gamma,
    is_series,
    one_like,
    q_barnes,
    q_binomial,
    q_gamma,
    q_pochhammer,
    to_fraction,
    zero_like,
)
from .symbols import PureFH
from .symfunc import schur_at_ones
from .toeplitz import toeplitz_matrix
from . import linalg

__all__ = [
    "ClosedFormResult",
    "chebyshev_u",
    "tridiag_det",
    "tridiag_inverse",
    "two_row_skew",
    "fh_determinant",
    "dr_inverse",
    "verify_duduchava_roch",
    "evskew_fh",
    "fh_minor_single",
    "fh_minor_via_recursion",
    "q_theta_determinant",
    "q_evskew",
    "theta_d_determinant",
    "infinite_q_skew",
    "asymptotic_forms",
    "evaluate",
    "direct_value",
    "FORMULAS",
]


class DomainError(ValueError):
    """Parameters outside the range where a closed form holds."""


@dataclass(frozen=True)
class ClosedFormResult:
    value: object
    formula_id: str
    parameters: dict = field(default_factory=dict)


def _exact(x):
    # ints and rational strings become Fractions so 1/y stays exact
    return x if is_series(x) else to_fraction(x)


# tridiagonal symbols E(y; 1/z) E(x; z)


def chebyshev_u(n: int, c):
    """U_n(c) from U_0 = 1, U_1 = 2c."""
    if n < 0:
        raise DomainError("chebyshev_u needs n >= 0")
    prev, cur = one_like(c), 2 * c
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * c * cur - prev
    return cur


def _geometric(lo: int, hi: int, t):
    """sum_{r=lo}^{hi} t^r"""
    total = zero_like(t)
    for r in range(lo, hi + 1):
        total = total + (t ** r if r else one_like(t))
    return total


def tridiag_det(x, y, n: int):
    """D_N = 1 + xy + ... + (xy)^N, which is ((xy)^{N+1} - 1)/(xy - 1) away from xy = 1."""
    if n < 0:
        raise DomainError("N must be non-negative")
    return _geometric(0, n, _exact(x) * _exact(y))


def _rational_sqrt(a) -> Fraction | None:
    from math import isqrt

    a = to_fraction(a)
    if a <= 0:
        return None
    p, q = isqrt(a.numerator), isqrt(a.denominator)
    if p * p == a.numerator and q * q == a.denominator:
        return Fraction(p, q)
    return None


def tridiag_inverse(x, y, n: int, chebyshev_check: bool = False):
    """T_N^{-1} in radical-free form: with S_m = sum_{r<=m} (xy)^r and 1-based j, k,
    entry (-1)^{j+k} y^{k-j} S_{j-1} S_{N-k} / S_N for j <= k and
    (-1)^{j+k} x^{j-k} S_{k-1} S_{N-j} / S_N for j > k.

    With ``chebyshev_check`` and xy the square of a rational, each entry is
    also computed from U_n(c), c = (1 + xy)/(2 sqrt(xy)), and compared.
    """
    x, y = _exact(x), _exact(y)
    xy = x * y
    s = [_geometric(0, m, xy) for m in range(n + 1)]
    if s[n] == 0:
        raise linalg.SingularMatrixError(f"D_{n} = 0 for this tridiagonal symbol")
    out = [[None] * n for _ in range(n)]
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            sign = -1 if (j + k) % 2 else 1
            if j <= k:
                out[j - 1][k - 1] = sign * y ** (k - j) * s[j - 1] * s[n - k] / s[n]
            else:
                out[j - 1][k - 1] = sign * x ** (j - k) * s[k - 1] * s[n - j] / s[n]
    if chebyshev_check and not is_series(xy):
        root = _rational_sqrt(xy)
        if root is not None:
            c = (1 + xy) / (2 * root)
            u = [chebyshev_u(m, c) for m in range(n + 1)]
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    sign = -1 if (j + k) % 2 else 1
                    lo, hi = min(j, k), max(j, k)
                    side = y ** (k - j) if j <= k else x ** (j - k)
                    value = sign * side / root ** (hi - lo + 1) * u[lo - 1] * u[n - hi] / u[n]
                    if value != out[j - 1][k - 1]:
                        raise AssertionError(f"Chebyshev form disagrees at ({j},{k})")
    return out


def two_row_skew(n: int, j: int, k: int, x, y):
    """s_{(N,j)/(k)}(x, 1/y) = x^{-k} y^{-(N+j)} sum_{r<=min(j,k)} (xy)^r sum_{max(j,k)<=r<=N} (xy)^r."""
    if n < 1 or not (0 <= j <= n and 0 <= k <= n):
        raise DomainError("need N >= 1 and 0 <= j, k <= N")
    x, y = _exact(x), _exact(y)
    if y == 0:
        raise DomainError("y must be nonzero")
    xy = x * y
    low = _geometric(0, min(j, k), xy)
    high = _geometric(max(j, k), n, xy)
    # x^{-k} is never formed when k = 0, so x = 0 is allowed there
    pre = one_like(xy) / y ** (n + j)
    if k:
        pre = pre / x ** k
    return pre * low * high


# pure Fisher-Hartwig symbol


def _gamma(n: int) -> Fraction:
    return factorial_gamma(n - 1)


def fh_determinant(gamma: int, delta: int, n: int) -> Fraction:
    """D_N(phi_{gamma,delta}) as a ratio of Barnes G values."""
    if min(gamma, delta, n) < 0:
        raise DomainError("parameters must be non-negative")
    g = barnes_g
    return (
        g(n + 1) * g(gamma + delta + n + 1) / g(gamma + delta + 1)
        * g(gamma + 1) / g(gamma + n + 1) * g(delta + 1) / g(delta + n + 1)
    )


def dr_inverse(gamma: int, delta: int, n: int):
    """T_N(phi_{gamma,delta})^{-1}, entries indexed from 1 in the sum."""
    if gamma < 1 or delta < 1:
        raise DomainError("the inverse formula needs positive gamma and delta")
    out = [[Fraction(0)] * n for _ in range(n)]
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            total = Fraction(0)
            for r in range(max(j, k), n + 1):
                total += (
                    _gamma(r) / _gamma(gamma + delta + r)
                    * binomial(gamma + r - k - 1, r - k) * binomial(delta + r - j - 1, r - j)
                )
            sign = -1 if (j + k) % 2 else 1
            out[j - 1][k - 1] = sign * _gamma(gamma + j) * _gamma(delta + k) / (_gamma(j) * _gamma(k)) * total
    return out


class _Coefficients:
    # minimal symbol: explicit Fourier coefficients on a finite window
    def __init__(self, coeffs: dict):
        self.coeffs = coeffs

    def coefficient(self, k: int):
        return self.coeffs.get(k, Fraction(0))


def verify_duduchava_roch(gamma: int, delta: int, n: int) -> bool:
    """T((1-z)^gamma) M_{gamma+delta} T((1-1/z)^delta) equals
    Gamma(gamma+1) Gamma(delta+1)/Gamma(gamma+delta+1) M_delta T(phi) M_gamma
    on the N x N window, phi = (1-z)^gamma (1-1/z)^delta.

    Both triangular factors make the truncation exact. phi has
    d_k = (-1)^k binom(gamma+delta, delta+k); conjugating by diag((-1)^j)
    relates it to PureFH, which is checked too.
    """
    if gamma < 1 or delta < 1:
        raise DomainError("Duduchava-Roch needs positive gamma and delta")
    lower = _Coefficients({k: (-1) ** k * binomial(gamma, k) for k in range(gamma + 1)})
    upper = _Coefficients({-k: (-1) ** k * binomial(delta, k) for k in range(delta + 1)})
    signed = _Coefficients({k: (-1) ** k * binomial(gamma + delta, delta + k) for k in range(-delta, gamma + 1)})

    def diag(a):
        return [[binomial(a + k - 1, k - 1) if j == k else Fraction(0) for k in range(1, n + 1)] for j in range(1, n + 1)]

    def window(f):
        return [[f.coefficient(j - k) for k in range(n)] for j in range(n)]

    lhs = linalg.matmul(linalg.matmul(window(lower), diag(gamma + delta)), window(upper))
    scale = _gamma(gamma + 1) * _gamma(delta + 1) / _gamma(gamma + delta + 1)
    rhs = linalg.matmul(linalg.matmul(diag(delta), window(signed)), diag(gamma))
    rhs = [[scale * v for v in row] for row in rhs]
    plain = toeplitz_matrix(PureFH(gamma, delta), n)
    conjugate_ok = all(
        window(signed)[j][k] == (-1) ** (j + k) * plain[j][k] for j in range(n) for k in range(n)
    )
    return lhs == rhs and conjugate_ok


def _check_evskew_domain(n, d, j, k, m):
    if not (0 <= j <= n and 0 <= k <= n):
        raise DomainError("need 0 <= j, k <= N")
    if d < 1:
        raise DomainError("need d >= 1")
    if not (m > d or (m == d and j == 0)):
        raise DomainError("need M > d, or M >= d when j = 0")


def evskew_fh(n: int, d: int, j: int, k: int, m: int) -> Fraction:
    """s_{(N^d, j)/(k)}(1^M)."""
    _check_evskew_domain(n, d, j, k, m)
    g = barnes_g
    pre = (
        g(n + 2) * g(m + n + 2) / g(m + 1) * g(m - d + 1) / g(m - d + n + 2) * g(d + 1) / g(d + n + 2)
        * _gamma(m - d + j + 1) / _gamma(j + 1) * _gamma(d + k + 1) / _gamma(k + 1)
    )
    total = Fraction(0)
    for r in range(max(j, k), n + 1):
        total += (
            _gamma(r + 1) / _gamma(m + r + 1)
            * binomial(m - d + r - k - 1, r - k) * binomial(d + r - j - 1, r - j)
        )
    return pre * total


def _single_checks(mu, gamma, delta, n):
    mu = as_partition(mu)
    if len(mu) > n:
        raise DomainError(f"l(mu) = {len(mu)} exceeds N = {n}")
    if gamma < 0 or delta < 0:
        raise DomainError("gamma and delta must be non-negative")
    return mu


def fh_minor_single(mu, gamma: int, delta: int, n: int) -> Fraction:
    """D_N^{0,mu}(phi_{gamma,delta}) with M = l(mu) struck columns."""
    mu = _single_checks(mu, gamma, delta, n)
    m = len(mu)
    mu_c = conjugate(mu)
    # s_{mu'}(1^gamma) vanishes when mu' has more than gamma rows
    if len(mu_c) > gamma:
        return Fraction(0)
    value = (
        fh_determinant(gamma, delta, n)
        * barnes_g(n - m + 1) / barnes_g(n + 1)
        * barnes_g(delta + n + 1) / barnes_g(delta + n - m + 1)
        * schur_at_ones(mu_c, gamma)
    )
    for k in range(1, m + 1):
        value *= factorial_gamma(mu[k - 1] + n - k) / factorial_gamma(delta + mu[k - 1] + n - k)
    return value


def _rising(a, n: int):
    out = one_like(a)
    for i in range(n):
        out = out * (a + i)
    return out


def _gamma_ratio(g, top: int, bottom: int):
    """Gamma(g + top) / Gamma(g + bottom) for g away from the poles."""
    lo, hi = sorted((top, bottom))
    prod = Fraction(1)
    for i in range(lo, hi):
        prod *= g + i
    return prod if top >= bottom else 1 / prod


def _lead_ratio(gamma: int, top: int, bottom: int) -> tuple[Fraction, int]:
    """Leading term c eps^v of Gamma(gamma + eps + top) / Gamma(gamma + eps + bottom)."""
    lo, hi = sorted((top, bottom))
    c, v = Fraction(1), 0
    for i in range(lo, hi):
        if gamma + i == 0:
            v += 1
        else:
            c *= gamma + i
    return (c, v) if top >= bottom else (1 / c, -v)


def _detcomp(g, n: int, delta: int, mu: tuple):
    # 1-based entries R(g - j + k - mu_k + 1, N - k + mu_k - mu_N) R(delta + j - k + mu_k + 1, N - j)
    p = list(mu) + [0] * (n - len(mu))
    last = p[n - 1]
    return [
        [
            _rising(g - j + k - p[k - 1] + 1, n - k + p[k - 1] - last)
            * _rising(Fraction(delta + j - k + p[k - 1] + 1), n - j)
            for k in range(1, n + 1)
        ]
        for j in range(1, n + 1)
    ]


def fh_minor_via_recursion(mu, gamma: int, delta: int, n: int, check: bool = True) -> Fraction:
    """D_N^{0,mu}(phi_{gamma,delta}) by peeling off one row and column at a time.

    Row and column factors are taken out of the minor, leaving a matrix of
    rising factorials. Row operations clear its last column; the remaining
    block factors into the same shape with N - 1, delta + 1 and mu minus its
    last part. The value is the product of all factors taken out.

    When mu_1 > gamma some Gamma arguments hit poles. The product is then
    taken at gamma + eps, keeping only the leading eps-power of each factor,
    and the constant term is read off (zero if eps survives). With ``check``
    every reduced block is compared with a freshly built one; that identity
    is rational in gamma, so with poles present it is checked at gamma + 1/2.
    """
    mu = _single_checks(mu, gamma, delta, n)
    parts = tuple(mu.padded(n))
    coef, order = Fraction(1), 0

    def take(lead):
        nonlocal coef, order
        coef *= lead[0]
        order += lead[1]

    if n:
        last = parts[n - 1]
        for j in range(1, n + 1):
            # Gamma(g + delta + 1) / Gamma(g - mu_N + N - j + 1)
            take(_lead_ratio(gamma, delta + 1, n - j + 1 - last))
        for k in range(1, n + 1):
            coef /= factorial_gamma(delta + parts[k - 1] + n - k)
    g = Fraction(gamma) if not parts or parts[0] <= gamma else Fraction(2 * gamma + 1, 2)
    size, dl, cur = n, delta, parts
    mat = _detcomp(g, size, dl, cur) if check and size else None
    while size > 1:
        last, prev = cur[size - 1], cur[size - 2]
        widths = [cur[k - 1] - last + size - k for k in range(1, size)]
        for w in widths:
            coef *= (gamma + dl + 1) * w
        # Gamma(g - mu_N + i)/Gamma(g - mu_{N-1} + i), i counted from the bottom row
        for j in range(1, size):
            take(_lead_ratio(gamma, size - j - last, size - j - prev))
        if check:
            reduced = [r[:] for r in mat]
            for j in range(1, size):
                factor = dl + last - size + 1 + j
                reduced[j - 1] = [a - factor * b for a, b in zip(mat[j - 1], mat[j])]
            if any(reduced[j][size - 1] != 0 for j in range(size - 1)) or reduced[size - 1][size - 1] != 1:
                raise AssertionError("row reduction did not clear the last column")
            nxt = _detcomp(g, size - 1, dl + 1, cur[: size - 1])
            for j in range(size - 1):
                row = _gamma_ratio(g, size - 1 - j - last, size - 1 - j - prev)
                for k in range(size - 1):
                    col = (g + dl + 1) * widths[k]
                    if reduced[j][k] != row * col * nxt[j][k]:
                        raise AssertionError(f"block factorization fails at N = {size}, entry ({j + 1},{k + 1})")
            mat = nxt
        size, dl, cur = size - 1, dl + 1, cur[: size - 1]
    if order < 0:
        raise AssertionError("pole did not cancel in the eps-deformed recursion")
    return coef if order == 0 else Fraction(0)


# principal specializations


def _q_int(m: int, q):
    # (1 - q^m)/(1 - q) for any integer m
    if m > 0:
        return _geometric(0, m - 1, q)
    if m == 0:
        return zero_like(q)
    return -_geometric(m, -1, q)


def _q_binom_falling(a: int, b: int, q):
    """prod_{i<b} (1 - q^{a-i}) / (1 - q^{i+1}); [-1, 0] = 1, zero for b < 0."""
    if b < 0:
        return zero_like(q)
    if a >= 0:
        return q_binomial(a, b, q)
    out = one_like(q)
    for i in range(b):
        out = out * _q_int(a - i, q) / _q_int(i + 1, q)
    return out


def _q_pow(q, e: int):
    if e == 0:
        return one_like(q)
    return q ** e if e > 0 else one_like(q) / q ** (-e)


def q_theta_determinant(gamma: int, delta: int, n: int, q):
    """D_N(Theta_{gamma,delta}) as a ratio of q-Barnes values."""
    if min(gamma, delta, n) < 0:
        raise DomainError("parameters must be non-negative")
    g = q_barnes
    return (
        g(n + 1, q) * g(delta + gamma + n + 1, q) / g(delta + gamma + 1, q)
        * g(delta + 1, q) / g(delta + n + 1, q) * g(gamma + 1, q) / g(gamma + n + 1, q)
    )


def q_evskew(n: int, d: int, j: int, k: int, m: int, q):
    """s_{(N^d, j)/(k)}(1, q, ..., q^{M-1}).

    Implemented form: q^{(d-1)j - dk + d(d-1)N/2} times the q-Barnes ratio
    D_{N+1}(Theta_{M-d,d}) times
    Gamma_q(M-d+j+1) Gamma_q(d+k+1)/(Gamma_q(j+1) Gamma_q(k+1))
    sum_r q^r Gamma_q(r+1)/Gamma_q(M+r+1) [M-d+r-k-1, r-k] [d+r-j-1, r-j].
    """
    _check_evskew_domain(n, d, j, k, m)
    g, gam = q_barnes, q_gamma
    pre = (
        g(n + 2, q) * g(m + n + 2, q) / g(m + 1, q) * g(m - d + 1, q) / g(m - d + n + 2, q)
        * g(d + 1, q) / g(d + n + 2, q)
        * gam(m - d + j + 1, q) * gam(d + k + 1, q) / (gam(j + 1, q) * gam(k + 1, q))
    )
    total = zero_like(q)
    for r in range(max(j, k), n + 1):
        total = total + (
            _q_pow(q, r) * gam(r + 1, q) / gam(m + r + 1, q)
            * _q_binom_falling(m - d + r - k - 1, r - k, q) * _q_binom_falling(d + r - j - 1, r - j, q)
        )
    return _q_pow(q, (d - 1) * j - d * k + d * (d - 1) * n // 2) * pre * total


def _require_series(q, what: str):
    if not isinstance(q, Series):
        raise DomainError(f"{what} is only available with a series-valued q")


def theta_d_determinant(delta: int, n: int, q):
    """D_N(Theta_delta) = (1-q)^{-delta N} G_q(delta+1) G_q(N+1) / G_q(delta+N+1)."""
    _require_series(q, "theta_d_determinant")
    if delta < 1 or n < 0:
        raise DomainError("need delta >= 1 and N >= 0")
    g = q_barnes
    return g(delta + 1, q) * g(n + 1, q) / g(delta + n + 1, q) / (1 - q) ** (delta * n)


def infinite_q_skew(n: int, d: int, j: int, k: int, q):
    """s_{(N^d, j)/(k)}(1, q, q^2, ...)."""
    if not (0 <= j <= n and 0 <= k <= n) or d < 1:
        raise DomainError("need d >= 1 and 0 <= j, k <= N")
    if not isinstance(q, Series) and not abs(to_fraction(q)) < 1:
        raise DomainError("rational q must satisfy |q| < 1")
    g = q_barnes
    pre = (
        _q_pow(q, (d - 1) * j - d * k + d * (d - 1) * n // 2) / (1 - q) ** (d * (n + 1))
        * g(n + 2, q) * g(d + 1, q) / g(d + n + 2, q)
        * q_pochhammer(d + k, q) / q_pochhammer(j, q)
    )
    total = zero_like(q)
    for r in range(max(j, k), n + 1):
        total = total + _q_pow(q, r) * _q_binom_falling(r, r - k, q) * _q_binom_falling(d + r - j - 1, r - j, q)
    return pre * total


def _euler(q: Series) -> Series:
    # (q;q)_inf through the known precision of q
    out = one_like(q)
    for i in range(1, q.prec + 1):
        out = out * (1 - q ** i)
    return out


def asymptotic_forms(kind: str, parameters: dict) -> ClosedFormResult:
    """N -> infinity forms of s_{(N^d, j)/(k)} (or s_{(N,j)/(k)}(x, 1/y)).

    ``value`` is the N-independent constant; ``parameters["prefactor"]``
    records the N-dependent part it multiplies:
      tridiag      y^{-N} D_N (valid for |xy| < 1)
      fh           N^{d(M-d)}
      q_principal  q^{d(d-1)N/2}
      q_infinite   q^{d(d-1)N/2}
    """
    p = dict(parameters)
    j, k = int(p.get("j", 0)), int(p.get("k", 0))
    if j < 0 or k < 0:
        raise DomainError("j and k must be non-negative")
    lo = min(j, k)
    if kind == "tridiag":
        x, y = p["x"], p["y"]
        xy = x * y
        total = zero_like(xy)
        for r in range(lo + 1):
            total = total + _q_pow(xy, -r)
        value = x ** j * y ** k * total
        prefactor = {"form": "y^(-N) D_N", "valid": "|xy| < 1"}
    elif kind == "fh":
        d, m = int(p["d"]), int(p["M"])
        if not (1 <= d < m):
            raise DomainError("need 1 <= d < M")
        barnes = barnes_g(d + 1) * barnes_g(m - d + 1) / barnes_g(m + 1)
        total = sum(
            (binomial(m - d + j - r - 1, j - r) * binomial(d + k - r - 1, k - r) for r in range(lo + 1)),
            Fraction(0),
        )
        value = barnes * total
        prefactor = {"N_power": d * (m - d), "barnes_ratio": barnes, "sum": total}
    elif kind == "q_principal":
        d, m, q = int(p["d"]), int(p["M"]), p["q"]
        if not (1 <= d < m):
            raise DomainError("need 1 <= d < M")
        g = q_barnes
        total = zero_like(q)
        for r in range(lo + 1):
            total = total + _q_pow(q, -r) * _q_binom_falling(m - d + j - r - 1, j - r, q) * _q_binom_falling(d + k - r - 1, k - r, q)
        value = (
            _q_pow(q, d * j - (d - 1) * k) / (1 - q) ** (d * (m - d))
            * g(d + 1, q) * g(m - d + 1, q) / g(m + 1, q) * total
        )
        prefactor = {"q_power_per_N": Fraction(d * (d - 1), 2)}
    elif kind == "q_infinite":
        d, q = int(p["d"]), p["q"]
        _require_series(q, "the q_infinite form")
        if d < 1:
            raise DomainError("need d >= 1")
        total = zero_like(q)
        for r in range(lo + 1):
            total = total + _q_pow(q, -r) / q_pochhammer(j - r, q) * _q_binom_falling(d + k - r - 1, k - r, q)
        value = (
            _q_pow(q, d * j - (d - 1) * k) * (1 - q) ** (d * (d - 1) // 2)
            * q_barnes(d + 1, q) / _euler(q) ** d * total
        )
        prefactor = {"q_power_per_N": Fraction(d * (d - 1), 2)}
    else:
        raise DomainError(f"unknown asymptotic kind {kind!r}")
    p["kind"] = kind
    p["prefactor"] = prefactor
    return ClosedFormResult(value, f"asymptotic_{kind}", p)


# registry used by the command line


FORMULAS = {
    "chebyshev_u": (chebyshev_u, ("n", "c")),
    "tridiag_det": (tridiag_det, ("x", "y", "N")),
    "tridiag_inverse": (tridiag_inverse, ("x", "y", "N")),
    "two_row_skew": (two_row_skew, ("N", "j", "k", "x", "y")),
    "fh_determinant": (fh_determinant, ("gamma", "delta", "N")),
    "dr_inverse": (dr_inverse, ("gamma", "delta", "N")),
    "duduchava_roch": (verify_duduchava_roch, ("gamma", "delta", "N")),
    "evskew_fh": (evskew_fh, ("N", "d", "j", "k", "M")),
    "fh_minor_single": (fh_minor_single, ("mu", "gamma", "delta", "N")),
    "fh_minor_via_recursion": (fh_minor_via_recursion, ("mu", "gamma", "delta", "N")),
    "q_theta_determinant": (q_theta_determinant, ("gamma", "delta", "N", "q")),
    "q_evskew": (q_evskew, ("N", "d", "j", "k", "M", "q")),
    "theta_d_determinant": (theta_d_determinant, ("delta", "N", "q")),
    "infinite_q_skew": (infinite_q_skew, ("N", "d", "j", "k", "q")),
}


def evaluate(formula_id: str, parameters: dict) -> ClosedFormResult:
    """Look up ``formula_id`` and call it with the named parameters."""
    if formula_id.startswith("asymptotic_"):
        return asymptotic_forms(formula_id[len("asymptotic_"):], parameters)
    if formula_id not in FORMULAS:
        raise KeyError(f"unknown formula {formula_id!r}")
    func, names = FORMULAS[formula_id]
    missing = [n for n in names if n not in parameters]
    if missing:
        raise KeyError(f"missing parameter(s) {missing} for {formula_id}")
    return ClosedFormResult(func(*(parameters[n] for n in names)), formula_id, dict(parameters))


def direct_value(formula_id: str, parameters: dict):
    """The same quantity computed the long way (determinant, inverse or
    Jacobi-Trudi), or None when a formula has no separate counterpart."""
    from .symbols import ThetaD, ThetaGD, Tridiagonal
    from .symfunc import FiniteList, PrincipalFinite, PrincipalInfinite, ones, skew_schur
    from .toeplitz import exact_inverse, minor_determinant, toeplitz_determinant

    p = parameters
    if formula_id == "tridiag_det":
        return toeplitz_determinant(Tridiagonal(p["x"], p["y"]), p["N"])
    if formula_id == "tridiag_inverse":
        return exact_inverse(Tridiagonal(p["x"], p["y"]), p["N"])
    if formula_id == "two_row_skew":
        return skew_schur((p["N"], p["j"]), (p["k"],), FiniteList([p["x"], 1 / _exact(p["y"])]))
    if formula_id == "fh_determinant":
        return toeplitz_determinant(PureFH(p["gamma"], p["delta"]), p["N"])
    if formula_id == "dr_inverse":
        return exact_inverse(PureFH(p["gamma"], p["delta"]), p["N"])
    if formula_id in ("fh_minor_single", "fh_minor_via_recursion"):
        return minor_determinant(PureFH(p["gamma"], p["delta"]), p["N"], (), p["mu"])
    if formula_id == "evskew_fh":
        return skew_schur((p["N"],) * p["d"] + (p["j"],), (p["k"],), ones(p["M"]))
    if formula_id == "q_theta_determinant":
        return toeplitz_determinant(ThetaGD(p["gamma"], p["delta"], p["q"]), p["N"])
    if formula_id == "q_evskew":
        return skew_schur((p["N"],) * p["d"] + (p["j"],), (p["k"],), PrincipalFinite(p["q"], p["M"]))
    if formula_id == "theta_d_determinant":
        return toeplitz_determinant(ThetaD(p["delta"], p["q"]), p["N"])
    if formula_id == "infinite_q_skew":
        return skew_schur((p["N"],) * p["d"] + (p["j"],), (p["k"],), PrincipalInfinite(p["q"]))
    return None
