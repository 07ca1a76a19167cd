"""Verification grids behind ``toeplitz-minors verify``.

A suite is a list of grids. Each grid belongs to one identity and holds a
parameter set; running it returns (ok, detail). Grids are plain picklable
tuples so they can be farmed out to worker processes; results are always
reported in grid order.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import closedforms as cf
from .biorthogonal import bordered_pair, kernel_coefficients
from .linalg import det
from .oracle import heine_integral, pairing
from .partitions import partitions_up_to
from .scalar import Series
from .symbols import PureFH, ThetaD, ThetaGD, Tridiagonal
from .symfunc import FiniteList, PrincipalFinite, graded, ones, skew_schur
from .toeplitz import (
    exact_inverse,
    minor_determinant,
    minor_matrix,
    toeplitz_determinant,
    toeplitz_matrix,
    verify_baxter,
    verify_case1_minor,
    verify_ee_schur,
    verify_gessel,
    verify_mininv,
)

SUITES = ("gessel", "baxter", "dr", "biorth", "oracle", "closedforms")


@dataclass(frozen=True)
class GridResult:
    identity: str
    params: tuple
    ok: bool
    detail: str = ""


# grid bodies: each takes plain arguments and returns (ok, detail)


def _gessel(y, x, n_max, degree):
    for n in range(1, n_max + 1):
        if not verify_gessel(x, y, n, degree):
            return False, f"N={n}"
    return True, ""


def _baxter(y, x, degree):
    d = len(y.values)
    for n in (d, d + 1):
        if not verify_baxter(y, x, n, degree):
            return False, f"N={n}"
    return True, ""


def _case1(y, x, weight, degree):
    d = len(y.values)
    for lam in partitions_up_to(weight):
        for mu in partitions_up_to(weight):
            n = max(d + len(mu), len(lam), 1)
            if not verify_case1_minor(y, x, lam, mu, n, degree):
                return False, f"lam={lam} mu={mu}"
    return True, ""


def _ee(y, x, weight, n_max):
    for n in range(1, n_max + 1):
        for lam in partitions_up_to(weight):
            for mu in partitions_up_to(weight):
                if len(lam) > n or len(mu) > n:
                    continue
                if not verify_ee_schur(y, x, lam, mu, n):
                    return False, f"N={n} lam={lam} mu={mu}"
    return True, ""


def _dr(gamma, delta, n_max):
    for n in range(1, n_max + 1):
        if not cf.verify_duduchava_roch(gamma, delta, n):
            return False, f"N={n}"
    return True, ""


def _dr_inverse(gamma, delta, n_max):
    f = PureFH(gamma, delta)
    for n in range(1, n_max + 1):
        if cf.dr_inverse(gamma, delta, n) != exact_inverse(f, n):
            return False, f"N={n}"
    return True, ""


def _same(a, b) -> bool:
    if isinstance(a, Series) or isinstance(b, Series):
        return (a - b).is_zero()
    return a == b


def _biorth(f, j_max):
    pairs = [bordered_pair(f, j) for j in range(j_max + 1)]
    zero = 0 * f.like()
    for j, k in product(range(j_max + 1), repeat=2):
        value = pairing(f, pairs[j].p_coeffs, pairs[k].q_coeffs)
        if not _same(value, pairs[j].norm2 if j == k else zero):
            return False, f"j={j} k={k}"
    return True, ""


def _kernel(f, n_max):
    pairs = [bordered_pair(f, j) for j in range(n_max)]
    for n in range(1, n_max + 1):
        got = kernel_coefficients(f, n, pairs[:n]).as_lists()
        want = exact_inverse(f, n)
        if not all(_same(a, b) for ra, rb in zip(got, want) for a, b in zip(ra, rb)):
            return False, f"N={n}"
    return True, ""


def _mininv(f, n_max):
    for n in range(n_max + 1):
        if not verify_mininv(f, n):
            return False, f"N={n}"
    return True, ""


def _heine(gamma, delta, n_max, weight):
    f = PureFH(gamma, delta)
    shapes = list(partitions_up_to(weight))
    for n in range(1, n_max + 1):
        for lam, mu in product(shapes, repeat=2):
            if len(lam) > n or len(mu) > n:
                continue
            if heine_integral(f, lam, mu, n) != det(minor_matrix(f, n, lam, mu)):
                return False, f"N={n} lam={lam} mu={mu}"
    return True, ""


def _fh_det(gamma, delta, n_max):
    f = PureFH(gamma, delta)
    for n in range(n_max + 1):
        if cf.fh_determinant(gamma, delta, n) != det(toeplitz_matrix(f, n)):
            return False, f"N={n}"
    return True, ""


def _evskew(d, m, n_max, q):
    for n in range(n_max + 1):
        for j, k in product(range(n + 1), repeat=2):
            if m == d and j > 0:
                continue
            outer = (n,) * d + (j,)
            if q is None:
                ok = cf.evskew_fh(n, d, j, k, m) == skew_schur(outer, (k,), ones(m))
            else:
                ok = cf.q_evskew(n, d, j, k, m, q) == skew_schur(outer, (k,), PrincipalFinite(q, m))
            if not ok:
                return False, f"N={n} j={j} k={k}"
    return True, ""


def _fh_minor(gamma, delta, n_max, weight):
    f = PureFH(gamma, delta)
    for n in range(1, n_max + 1):
        for mu in partitions_up_to(weight):
            if len(mu) > n:
                continue
            direct = minor_determinant(f, n, (), mu)
            single = cf.fh_minor_single(mu, gamma, delta, n)
            recursive = cf.fh_minor_via_recursion(mu, gamma, delta, n)
            if not direct == single == recursive:
                return False, f"N={n} mu={mu}"
    return True, ""


def _tridiag(x, y, n_max):
    f = Tridiagonal(x, y)
    for n in range(1, n_max + 1):
        if cf.tridiag_det(x, y, n) != toeplitz_determinant(f, n):
            return False, f"det N={n}"
        if cf.tridiag_inverse(x, y, n) != exact_inverse(f, n):
            return False, f"inverse N={n}"
        for j, k in product(range(n + 1), repeat=2):
            want = skew_schur((n, j), (k,), FiniteList([x, 1 / y]))
            if cf.two_row_skew(n, j, k, x, y) != want:
                return False, f"two-row N={n} j={j} k={k}"
    return True, ""


_BODIES = {
    "gessel": _gessel,
    "baxter": _baxter,
    "case1_minor": _case1,
    "ee_schur": _ee,
    "duduchava_roch": _dr,
    "dr_inverse": _dr_inverse,
    "biorthogonality": _biorth,
    "kernel_inverse": _kernel,
    "minor_inverse": _mininv,
    "heine": _heine,
    "fh_determinant": _fh_det,
    "evskew_fh": _evskew,
    "q_evskew": _evskew,
    "fh_minor": _fh_minor,
    "tridiagonal": _tridiag,
}


def _run_grid(grid):
    identity, params = grid
    try:
        ok, detail = _BODIES[identity](*params)
    except Exception as exc:  # a crash is reported as a failed grid
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return GridResult(identity, params, ok, detail)


# grid construction


def _rational(rng: random.Random, bound: int = 3) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def _graded_pair(rng, order, dy, dx):
    y = graded([_rational(rng) for _ in range(dy)], order)
    x = graded([_rational(rng) for _ in range(dx)], order)
    return y, x


def _builtins(limit: int):
    q = Fraction(1, 2)
    out = [PureFH(g, d) for g in range(limit + 1) for d in range(limit + 1)]
    out += [ThetaGD(g, d, q) for g in range(1, limit + 1) for d in range(1, limit + 1)]
    out += [Tridiagonal(Fraction(1, 2), Fraction(1, 3)), Tridiagonal(Fraction(-2), Fraction(3, 5))]
    s = Series.gen(8)
    out += [ThetaD(d, s) for d in range(1, limit + 1)]
    return out


def build_suite(name: str, quick: bool = False, seed: int = 0, oracle_n: int | None = None) -> list:
    """The grids of suite ``name`` as (identity, params) tuples."""
    rng = random.Random(seed)
    degree = 4 if quick else 6
    grids = []
    if name == "gessel":
        for _ in range(2 if quick else 4):
            y, x = _graded_pair(rng, degree, rng.randint(1, 3), rng.randint(1, 3))
            grids.append(("gessel", (y, x, 3, degree)))
    elif name == "baxter":
        for _ in range(2 if quick else 4):
            y, x = _graded_pair(rng, degree, rng.randint(1, 2), rng.randint(1, 3))
            grids.append(("baxter", (y, x, degree)))
        for _ in range(1 if quick else 2):
            y, x = _graded_pair(rng, degree, rng.randint(1, 2), rng.randint(1, 2))
            grids.append(("case1_minor", (y, x, 2 if quick else 3, degree)))
        for _ in range(1 if quick else 2):
            y = FiniteList([_rational(rng) for _ in range(rng.randint(1, 2))])
            x = FiniteList([_rational(rng) for _ in range(rng.randint(1, 2))])
            grids.append(("ee_schur", (y, x, 2 if quick else 3, 2 if quick else 3)))
    elif name == "dr":
        n_max = 3 if quick else 5
        for g, d in product(range(1, 4), repeat=2):
            grids.append(("duduchava_roch", (g, d, n_max)))
        for g, d in product(range(1, 4), repeat=2):
            grids.append(("dr_inverse", (g, d, n_max)))
    elif name == "biorth":
        limit = 2 if quick else 3
        for f in _builtins(limit):
            grids.append(("biorthogonality", (f, limit)))
            grids.append(("kernel_inverse", (f, limit + 1)))
        for f in _builtins(1 if quick else 2):
            if not isinstance(f, ThetaD):
                grids.append(("minor_inverse", (f, 2 if quick else 3)))
    elif name == "oracle":
        n_max = oracle_n if oracle_n is not None else (2 if quick else 3)
        for g, d in product(range(3), repeat=2):
            grids.append(("heine", (g, d, n_max, 2)))
    elif name == "closedforms":
        for g, d in product(range(3 if quick else 5), repeat=2):
            grids.append(("fh_determinant", (g, d, 4 if quick else 6)))
        n_max = 3 if quick else 5
        for d in (1, 2):
            for m in range(d, 6):
                grids.append(("evskew_fh", (d, m, n_max, None)))
                grids.append(("q_evskew", (d, m, n_max, Fraction(1, 2))))
        for g, d in product(range(3 if quick else 4), repeat=2):
            grids.append(("fh_minor", (g, d, 3 if quick else 5, 3 if quick else 5)))
        for x, y in ((Fraction(1, 2), Fraction(1, 3)), (Fraction(-2), Fraction(3, 5)), (Fraction(1), Fraction(1))):
            grids.append(("tridiagonal", (x, y, 4 if quick else 6)))
    else:
        raise ValueError(f"unknown suite {name!r}")
    return grids


def run_grids(grids: list, jobs: int = 1) -> list[GridResult]:
    if jobs > 1 and len(grids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_grid, grids))
    return [_run_grid(g) for g in grids]


def run_suite(name: str, quick: bool = False, seed: int = 0, jobs: int = 1, oracle_n: int | None = None) -> list[GridResult]:
    """Run one suite (or every suite for ``all``)."""
    names = SUITES if name == "all" else (name,)
    grids = [g for n in names for g in build_suite(n, quick, seed, oracle_n)]
    return run_grids(grids, jobs)


def summarize(results: list[GridResult]) -> list[dict]:
    """One summary per identity, in first-appearance order."""
    order, table = [], {}
    for r in results:
        if r.identity not in table:
            order.append(r.identity)
            table[r.identity] = {"identity": r.identity, "passed": 0, "total": 0, "failures": []}
        row = table[r.identity]
        row["total"] += 1
        if r.ok:
            row["passed"] += 1
        else:
            row["failures"].append(r.detail)
    return [table[k] for k in order]
