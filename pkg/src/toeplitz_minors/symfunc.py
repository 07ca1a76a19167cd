"""Specializations of symmetric functions.

A specialization assigns values to the variables x = (x_1, x_2, ...). The
complete homogeneous, elementary and power-sum functions are evaluated
exactly; Schur and skew Schur functions go through the Jacobi-Trudi minors
det(g_{j - lam_j - k + mu_k}) with g = h (basis "H") or g = e (basis "E").
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from . import linalg
from .partitions import Partition, as_partition, conjugate, contains, partitions_up_to
from .scalar import Series, barnes_g, one_like, q_pochhammer, to_fraction, zero_like

__all__ = [
    "FiniteList",
    "PrincipalFinite",
    "PrincipalShiftedFinite",
    "PrincipalInfinite",
    "PowerSums",
    "graded",
    "ones",
    "complete_h",
    "elementary_e",
    "power_p",
    "generating_coefficients",
    "skew_schur",
    "schur",
    "schur_at_ones",
    "CoefficientProfile",
    "coefficient_profile",
    "cauchy_check",
    "specialization_to_json",
    "specialization_from_json",
]


def _scalar(x):
    return x if isinstance(x, Series) else to_fraction(x)


@dataclass(frozen=True)
class FiniteList:
    values: tuple

    def __init__(self, values=()):
        object.__setattr__(self, "values", tuple(_scalar(v) for v in values))

    def finite_values(self) -> tuple:
        return self.values

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class PrincipalFinite:
    """(1, q, ..., q^{count-1})"""

    q: object
    count: int

    def finite_values(self) -> tuple:
        return tuple(self.q ** i if i else one_like(self.q) for i in range(self.count))

    def __len__(self):
        return self.count


@dataclass(frozen=True)
class PrincipalShiftedFinite:
    """(q^start, ..., q^{start+count-1})"""

    q: object
    start: int
    count: int

    def finite_values(self) -> tuple:
        return tuple(self.q ** (self.start + i) for i in range(self.count))

    def __len__(self):
        return self.count


@dataclass(frozen=True)
class PrincipalInfinite:
    """(q^start, q^{start+1}, ...) with |q| < 1 for rational q."""

    q: object
    start: int = 0

    def __post_init__(self):
        q = self.q
        if not isinstance(q, Series) and not abs(to_fraction(q)) < 1:
            raise ValueError(f"infinite principal specialization diverges at q = {q}")


@dataclass(frozen=True)
class PowerSums:
    """A specialization given only through p_1, p_2, ... (later p_k are 0).

    Every symmetric function is a polynomial in the p_k, so this is enough for
    h, e and Schur values; it is how a bare coefficient profile is evaluated.
    """

    values: tuple

    def __init__(self, values=()):
        object.__setattr__(self, "values", tuple(_scalar(v) for v in values))

    def p(self, k: int):
        return self.values[k - 1] if k <= len(self.values) else zero_like(_like(self))


Specialization = FiniteList | PrincipalFinite | PrincipalShiftedFinite | PrincipalInfinite | PowerSums


def graded(values, order: int) -> FiniteList:
    """Variables a_i * t with t the series parameter known through t^order."""
    t = Series.gen(order)
    return FiniteList([to_fraction(a) * t for a in values])


def ones(n: int) -> FiniteList:
    return FiniteList([1] * n)


def _is_finite(x) -> bool:
    return hasattr(x, "finite_values")


@lru_cache(maxsize=4096)
def generating_coefficients(x, kind: str, upto: int) -> tuple:
    """[g_0, ..., g_upto] with g = h (kind "H") or e (kind "E") at x."""
    if kind not in ("H", "E"):
        raise ValueError(f"unknown kind {kind!r}")
    if isinstance(x, PrincipalInfinite):
        q, s = x.q, x.start
        out = []
        for k in range(upto + 1):
            num = q ** (s * k + (k * (k - 1) // 2 if kind == "E" else 0)) if k else one_like(q)
            out.append(num / q_pochhammer(k, q))
        return tuple(out)
    if isinstance(x, PowerSums):
        # Newton: n g_n = sum_i (+-1)^{i-1} p_i g_{n-i}
        out = [one_like(_like(x))]
        for n in range(1, upto + 1):
            total = zero_like(_like(x))
            for i in range(1, n + 1):
                term = x.p(i) * out[n - i]
                total = total + (term if kind == "H" or i % 2 else -term)
            out.append(total / n)
        return tuple(out)
    values = x.finite_values()
    like = next((v for v in values if isinstance(v, Series)), Fraction(1))
    coeffs = [one_like(like)] + [zero_like(like)] * upto
    for v in values:
        if kind == "H":
            # multiply by 1/(1 - v z): c_k += v c_{k-1}, ascending
            for k in range(1, upto + 1):
                coeffs[k] = coeffs[k] + v * coeffs[k - 1]
        else:
            # multiply by (1 + v z), descending
            for k in range(upto, 0, -1):
                coeffs[k] = coeffs[k] + v * coeffs[k - 1]
    return tuple(coeffs)


def _like(x):
    if isinstance(x, PrincipalInfinite) or isinstance(x, (PrincipalFinite, PrincipalShiftedFinite)):
        return x.q if isinstance(x.q, Series) else Fraction(1)
    return next((v for v in x.values if isinstance(v, Series)), Fraction(1))


def complete_h(k: int, x):
    if k < 0:
        return zero_like(_like(x))
    return generating_coefficients(x, "H", k)[k]


def elementary_e(k: int, x):
    if k < 0 or (_is_finite(x) and k > len(x)):
        return zero_like(_like(x))
    return generating_coefficients(x, "E", k)[k]


def power_p(k: int, x):
    if k < 1:
        raise ValueError("power sums are indexed by k >= 1")
    if isinstance(x, PowerSums):
        return x.p(k)
    if isinstance(x, PrincipalInfinite):
        q = x.q
        return q ** (x.start * k) / (1 - q ** k)
    if isinstance(x, PrincipalFinite) and not isinstance(x.q, Series) and x.q != 1:
        q = to_fraction(x.q)
        return (1 - q ** (k * x.count)) / (1 - q ** k)
    values = x.finite_values()
    total = zero_like(_like(x))
    for v in values:
        total = total + v ** k
    return total


def _jt_size(mu, lam) -> int:
    return max(len(mu), len(lam), 1)


def skew_schur(mu, lam, x, basis: str = "H", size: int | None = None):
    """s_{mu/lam}(x) (basis H) or s_{(mu/lam)'}(x) (basis E) by Jacobi-Trudi."""
    mu, lam = as_partition(mu), as_partition(lam)
    like = _like(x)
    if not contains(lam, mu):
        return zero_like(like)
    n = _jt_size(mu, lam) if size is None else size
    if n < len(mu):
        raise ValueError(f"Jacobi-Trudi size {n} is smaller than l(mu) = {len(mu)}")
    top = mu[0] + n if mu else n
    g = generating_coefficients(x, basis, top)

    def entry(m):
        if m < 0:
            return zero_like(like)
        if basis == "E" and _is_finite(x) and m > len(x):
            return zero_like(like)
        return g[m]

    mp, lp = mu.padded(n), lam.padded(n)
    matrix = [[entry(j - lp[j] - k + mp[k]) for k in range(n)] for j in range(n)]
    return linalg.det(matrix)


def schur(mu, x, basis: str = "H"):
    return skew_schur(mu, (), x, basis)


def schur_at_ones(mu, n: int) -> Fraction:
    """s_mu(1^n) = prod_{j<k} (mu_j - mu_k + k - j) / G(n + 1)."""
    mu = as_partition(mu)
    if n < len(mu):
        raise ValueError(f"need n >= l(mu) = {len(mu)}")
    p = mu.padded(n)
    num = 1
    for j in range(n):
        for k in range(j + 1, n):
            num *= p[j] - p[k] + k - j
    return Fraction(num) / barnes_g(n + 1)


class CoefficientProfile:
    """The c_k with log f = sum_k c_k z^k; c_0 is not used."""

    def __init__(self, func: Callable[[int], object] | Mapping[int, object], strict: bool = False):
        self._func = func
        self.strict = strict
        self._cache: dict[int, object] = {}

    def __call__(self, k: int):
        if k == 0:
            raise ValueError("c_0 does not enter the minor formulas")
        if k not in self._cache:
            if callable(self._func):
                self._cache[k] = self._func(k)
            elif k in self._func:
                self._cache[k] = _scalar(self._func[k])
            elif self.strict:
                raise KeyError(f"profile is missing c_{k}")
            else:
                self._cache[k] = Fraction(0)
        return self._cache[k]

    @classmethod
    def from_values(cls, values: Mapping[int, object], strict: bool = True) -> "CoefficientProfile":
        return cls(dict(values), strict=strict)


def coefficient_profile(x, y, x_kind: str = "H", y_kind: str = "H") -> CoefficientProfile:
    """Profile of f = G(y; z^{-1}) G(x; z): c_k = p_k(x)/k, c_{-k} = p_k(y)/k for H
    factors, with the alternating sign (-1)^{k+1} for E factors."""

    def side(spec, kind, k):
        if spec is None:
            return Fraction(0)
        sign = 1 if kind == "H" or k % 2 == 1 else -1
        return power_p(k, spec) * Fraction(sign, k)

    def c(k):
        return side(x, x_kind, k) if k > 0 else side(y, y_kind, -k)

    return CoefficientProfile(c)


def cauchy_check(x, y, degree: int, dual: bool = False) -> bool:
    """Cauchy identity (or its dual) as t-series through t^degree.

    Both specializations must be graded (finite lists of series values with
    positive valuation).
    """
    for spec in (x, y):
        if not isinstance(spec, FiniteList) or not all(
            isinstance(v, Series) and v.val >= 1 for v in spec.values
        ):
            raise ValueError("cauchy_check needs graded specializations")
    like = next(iter(x.values + y.values), None)
    if like is None:
        return True
    prec = degree + 1
    lhs = Series([], prec=prec)
    for nu in partitions_up_to(degree):
        other = conjugate(nu) if dual else nu
        lhs = lhs + schur(nu, x) * schur(other, y)
    rhs = Series([1], prec=prec)
    for a in x.values:
        for b in y.values:
            rhs = rhs * ((1 + a * b) if dual else 1 / (1 - a * b))
    return lhs.truncate(prec) == rhs.truncate(prec) and min(lhs.prec, rhs.prec) >= prec


def specialization_to_json(x) -> dict:
    from .scalar import scalar_to_json

    if isinstance(x, FiniteList):
        return {"kind": "finite", "values": [scalar_to_json(v) for v in x.values]}
    if isinstance(x, PrincipalFinite):
        return {"kind": "principal", "q": scalar_to_json(x.q), "count": x.count}
    if isinstance(x, PrincipalShiftedFinite):
        return {"kind": "principal_shifted", "q": scalar_to_json(x.q), "start": x.start, "count": x.count}
    if isinstance(x, PowerSums):
        return {"kind": "power_sums", "values": [scalar_to_json(v) for v in x.values]}
    out = {"kind": "principal_infinite", "q": scalar_to_json(x.q)}
    if x.start:
        out["start"] = x.start
    return out


def specialization_from_json(obj: dict):
    from .scalar import scalar_from_json

    kind = obj.get("kind")
    if kind == "finite":
        return FiniteList([scalar_from_json(v) for v in obj["values"]])
    if kind == "graded":
        return graded(obj["values"], int(obj["order"]))
    if kind == "principal":
        return PrincipalFinite(scalar_from_json(obj["q"]), int(obj["count"]))
    if kind == "principal_shifted":
        return PrincipalShiftedFinite(scalar_from_json(obj["q"]), int(obj["start"]), int(obj["count"]))
    if kind == "principal_infinite":
        return PrincipalInfinite(scalar_from_json(obj["q"]), int(obj.get("start", 0)))
    if kind == "power_sums":
        return PowerSums([scalar_from_json(v) for v in obj["values"]])
    raise ValueError(f"unknown specialization kind {kind!r}")
