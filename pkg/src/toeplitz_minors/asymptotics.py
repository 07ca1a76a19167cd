"""Large-N behaviour of Toeplitz minors.

Two expressions for lim D_N^{lam,mu}(f) / D_N(f): the character sum with
Laguerre factors built from the c_k of log f, and the finite skew Schur sum
over nu inside lam and mu. ``convergence_table`` tracks the exact ratio
against that limit as N grows.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .partitions import as_partition, centralizer_order, contains, partitions_of, subpartitions
from .scalar import binomial, decimal_string, factorial_gamma, is_series, one_like
from .symfunc import CoefficientProfile, PowerSums, coefficient_profile, skew_schur
from .toeplitz import minor_determinant, toeplitz_determinant

__all__ = [
    "mn_character",
    "laguerre",
    "delta_factor",
    "bd_sum",
    "skew_sum",
    "bd_equals_skew",
    "symbol_target",
    "convergence_table",
    "TABLE1_SHAPES",
    "table1_required",
    "table1",
]

# the (lambda, mu) pairs tabulated for the character sum
TABLE1_SHAPES = (
    ((), (1,)),
    ((), (2,)),
    ((), (1, 1)),
    ((), (3,)),
    ((), (1, 1, 1)),
    ((), (2, 2)),
    ((1, 1), (1, 1)),
    ((1,), (3,)),
)


@lru_cache(maxsize=None)
def _mn(beta: tuple, phi: tuple) -> int:
    # beta: strictly decreasing beta-numbers of the current shape
    if not phi:
        return 1
    k, rest = phi[0], phi[1:]
    present = set(beta)
    total = 0
    for i, b in enumerate(beta):
        c = b - k
        if c < 0 or c in present:
            continue
        # removing a k-rim hook moves b to c; the sign counts beta-numbers jumped over
        height = sum(1 for other in beta if c < other < b)
        new = tuple(sorted(present - {b} | {c}, reverse=True))
        total += (-1) ** height * _mn(new, rest)
    return total


def mn_character(lam, phi) -> Fraction:
    """chi^lam at the class of cycle type phi, by Murnaghan-Nakayama."""
    lam, phi = as_partition(lam), as_partition(phi)
    if sum(lam) != sum(phi):
        raise ValueError(f"|lambda| = {sum(lam)} differs from |phi| = {sum(phi)}")
    n = len(lam)
    beta = tuple(lam[i] + n - 1 - i for i in range(n))
    return Fraction(_mn(beta, tuple(phi)))


def laguerre(n: int, a: int, t):
    """L_n^{(a)}(t) = sum_r (-1)^r binom(n + a, n - r) t^r / r!"""
    if n < 0:
        raise ValueError("Laguerre degree must be non-negative")
    total = 0 * t if is_series(t) else Fraction(0)
    power = one_like(t)
    for r in range(n + 1):
        term = binomial(n + a, n - r) / factorial_gamma(r)
        total = total + (term if r % 2 == 0 else -term) * power
        power = power * t
    return total


def _as_frequencies(phi) -> dict:
    return dict(phi) if isinstance(phi, dict) else dict(Counter(as_partition(phi)))


def delta_factor(profile: CoefficientProfile, phi, psi):
    """Delta(f, phi, psi): product over k of the Laguerre expression, with n_k
    from phi and m_k from psi."""
    nf, mf = _as_frequencies(phi), _as_frequencies(psi)
    total = Fraction(1)
    for k in sorted(set(nf) | set(mf)):
        n, m = nf.get(k, 0), mf.get(k, 0)
        ck, cmk = profile(k), profile(-k)
        arg = -k * ck * cmk
        if n >= m:
            piece = k ** n * cmk ** (n - m) * factorial_gamma(m) * laguerre(m, n - m, arg)
        else:
            piece = k ** m * ck ** (m - n) * factorial_gamma(n) * laguerre(n, m - n, arg)
        total = piece * total
    return total


def bd_sum(profile: CoefficientProfile, lam, mu):
    """sum_{phi |- |lam|} sum_{psi |- |mu|} chi^lam_phi chi^mu_psi Delta / (z_phi z_psi)"""
    lam, mu = as_partition(lam), as_partition(mu)
    total = Fraction(0)
    for phi in partitions_of(sum(lam)):
        a = mn_character(lam, phi)
        if a == 0:
            continue
        for psi in partitions_of(sum(mu)):
            b = mn_character(mu, psi)
            if b == 0:
                continue
            weight = a * b / (centralizer_order(phi) * centralizer_order(psi))
            total = delta_factor(profile, phi, psi) * weight + total
    return total


def skew_sum(lam, mu, y, x, y_kind: str = "H", x_kind: str = "H"):
    """sum_{nu in lam, mu} s_{lam/nu}(y) s_{mu/nu}(x); an E factor conjugates
    the shapes on its side."""
    lam, mu = as_partition(lam), as_partition(mu)
    total = Fraction(0)
    for nu in subpartitions(lam):
        if contains(nu, mu):
            total = skew_schur(lam, nu, y, y_kind) * skew_schur(mu, nu, x, x_kind) + total
    return total


def bd_equals_skew(lam, mu, y, x, y_kind: str = "H", x_kind: str = "H") -> bool:
    profile = coefficient_profile(x, y, x_kind=x_kind, y_kind=y_kind)
    return bd_sum(profile, lam, mu) == skew_sum(lam, mu, y, x, y_kind, x_kind)


def symbol_target(f, lam, mu):
    """The N -> infinity limit of D_N^{lam,mu}(f) / D_N(f) from the factorization of f."""
    y_kind, y, x_kind, x = f.factorization()
    return skew_sum(lam, mu, y, x, y_kind, x_kind)


def table1_required(shapes=TABLE1_SHAPES) -> list[int]:
    """The k whose c_k can enter the rows: a part k of some cycle type phi
    with chi^mu_phi != 0 (for c_k) or chi^lam_phi != 0 (for c_{-k})."""
    need = set()
    for lam, mu in shapes:
        for shape, sign in ((mu, 1), (lam, -1)):
            for phi in partitions_of(sum(shape)):
                if mn_character(shape, phi) != 0:
                    need |= {sign * k for k in phi}
    return sorted(need)


def table1(values, shapes=TABLE1_SHAPES) -> list[dict]:
    """bd_sum and skew_sum side by side for each (lam, mu), from c_k values alone.

    The skew sum uses the specializations with power sums p_k = k c_k on the
    x side and p_k = k c_{-k} on the y side.
    """
    values = {int(k): v for k, v in values.items()}
    missing = [k for k in table1_required(shapes) if k not in values]
    if missing:
        raise KeyError(f"profile is missing c_k for k in {missing}")
    top = max((abs(k) for k in values), default=0)
    x = PowerSums([k * values.get(k, 0) for k in range(1, top + 1)])
    y = PowerSums([k * values.get(-k, 0) for k in range(1, top + 1)])
    profile = CoefficientProfile.from_values(values, strict=False)
    rows = []
    for lam, mu in shapes:
        lam, mu = as_partition(lam), as_partition(mu)
        bd = bd_sum(profile, lam, mu)
        sk = skew_sum(lam, mu, y, x)
        rows.append({"lambda": lam, "mu": mu, "bd_sum": bd, "skew_sum": sk, "equal": bd == sk})
    return rows


def convergence_table(f, lam, mu, n_values) -> list[dict]:
    """One row per N: minor, determinant, exact ratio, target and |ratio - target|.
    Rows with D_N = 0 carry ratio None and ``singular`` True."""
    target = symbol_target(f, lam, mu)
    rows = []
    for n in n_values:
        minor = minor_determinant(f, n, lam, mu)
        det = toeplitz_determinant(f, n)
        singular = det == 0
        ratio = None if singular else minor / det
        err = None if singular else abs(ratio - target)
        rows.append(
            {
                "N": n,
                "minor": minor,
                "determinant": det,
                "ratio": ratio,
                "target": target,
                "abs_error": err,
                "singular": singular,
            }
        )
    return rows


def table_decimals(row: dict, digits: int = 12) -> dict:
    """Decimal renderings of the rational cells of a convergence row."""
    return {
        key + "_decimal": decimal_string(row[key], digits)
        for key in ("ratio", "target", "abs_error")
        if row[key] is not None
    }
