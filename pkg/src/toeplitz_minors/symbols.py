"""Symbols on the unit circle and their exact Fourier coefficients.

A symbol is a product of factors E(x; z), H(x; z), E(y; 1/z), H(y; 1/z), or
one of the named families below. Sign convention for the pure Fisher-Hartwig
symbol: ``PureFH(g, d)`` is E(1^d; 1/z) E(1^g; z) = (1 + 1/z)^d (1 + z)^g, so
d_k = binom(g + d, d + k) >= 0. The (1 - z)^g (1 - 1/z)^d form differs by
z -> -z, which multiplies a minor D^{lam,mu} by (-1)^{|mu| - |lam|} and leaves
determinants unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentPoly
from .scalar import Series, binomial, one_like, q_binomial, q_pochhammer, to_fraction, zero_like
from .symfunc import (
    FiniteList,
    PrincipalFinite,
    PrincipalInfinite,
    PrincipalShiftedFinite,
    generating_coefficients,
    ones,
    specialization_from_json,
    specialization_to_json,
)

__all__ = [
    "Factor",
    "SymbolSpec",
    "ProductSymbol",
    "PureFH",
    "ThetaGD",
    "ThetaD",
    "Tridiagonal",
    "fourier_coefficient",
    "fourier_window",
    "as_laurent",
    "symbol_from_json",
    "symbol_to_json",
    "InfiniteSupportError",
]


class InfiniteSupportError(ValueError):
    pass


@dataclass(frozen=True)
class Factor:
    orientation: str  # "z" or "zinv"
    kind: str  # "E" or "H"
    spec: object

    def __post_init__(self):
        if self.orientation not in ("z", "zinv"):
            raise ValueError(f"orientation must be 'z' or 'zinv', not {self.orientation!r}")
        if self.kind not in ("E", "H"):
            raise ValueError(f"kind must be 'E' or 'H', not {self.kind!r}")

    def degree_bound(self, slack: int = 0) -> int | None:
        """Largest m whose coefficient can matter; ``slack`` extra powers of the
        series parameter are kept when the other side carries negative powers."""
        spec = self.spec
        if self.kind == "E" and hasattr(spec, "finite_values"):
            return len(spec)
        if hasattr(spec, "finite_values"):
            values = spec.finite_values()
            if not values:
                return 0
            if all(isinstance(v, Series) and v.val >= 1 for v in values):
                vmin = min(v.val for v in values)
                prec = min(v.prec for v in values) + slack
                return max(math.ceil(prec / vmin) - 1, 0)
            return None
        if isinstance(spec, PrincipalInfinite) and isinstance(spec.q, Series) and spec.q.val >= 1:
            q = spec.q
            m = 0
            while True:
                m += 1
                expo = spec.start * m + (m * (m - 1) // 2 if self.kind == "E" else 0)
                if expo * q.val >= q.prec + slack and expo > 0:
                    return m - 1
                if m > 10 * (q.prec + slack) + 10:
                    return None
        return None


def _like_of_factor(f: Factor):
    spec = f.spec
    if hasattr(spec, "q") and isinstance(spec.q, Series):
        return spec.q
    if isinstance(spec, FiniteList):
        return next((v for v in spec.values if isinstance(v, Series)), None)
    return None


class SymbolSpec:
    """Base for symbols: subclasses provide ``factors`` and may override
    ``coefficient`` with a closed form."""

    factors: tuple = ()

    # scalar variant of the coefficients
    def like(self):
        for f in self.factors:
            s = _like_of_factor(f)
            if s is not None:
                return s
        return Fraction(1)

    def _side(self, orientation):
        return tuple(f for f in self.factors if f.orientation == orientation)

    def _side_bound(self, orientation, slack: int = 0) -> int | None:
        total = 0
        for f in self._side(orientation):
            b = f.degree_bound(slack)
            if b is None:
                return None
            total += b
        return total

    @lru_cache(maxsize=None)
    def _side_coeffs(self, orientation, upto: int) -> tuple:
        like = self.like()
        coeffs = [one_like(like)] + [zero_like(like)] * upto
        for f in self._side(orientation):
            g = generating_coefficients(f.spec, f.kind, upto)
            if f.kind == "E" and hasattr(f.spec, "finite_values"):
                g = tuple(c if i <= len(f.spec) else zero_like(like) for i, c in enumerate(g))
            new = [zero_like(like)] * (upto + 1)
            for i, a in enumerate(coeffs):
                for j in range(upto + 1 - i):
                    new[i + j] = new[i + j] + a * g[j]
            coeffs = new
        return tuple(coeffs)

    def support(self) -> tuple[int | None, int | None]:
        """(lo, hi) bounds of the Fourier support; None when unbounded."""
        b = self._side_bound("zinv")
        a = self._side_bound("z")
        return (None if b is None else -b, a)

    def is_laurent_finite(self) -> bool:
        lo, hi = self.support()
        return lo is not None and hi is not None

    def coefficient(self, k: int):
        return self._convolution_coefficient(k)

    def _slack_from(self, orientation, bound) -> int:
        if bound is None:
            return 0
        vals = [c.val for c in self._side_coeffs(orientation, bound) if isinstance(c, Series) and not c.is_zero()]
        return max(0, -min(vals)) if vals else 0

    def _convolution_coefficient(self, k: int):
        a_bound = self._side_bound("z")
        b_bound = self._side_bound("zinv")
        if b_bound is not None:
            a_bound = self._side_bound("z", self._slack_from("zinv", b_bound))
        if a_bound is not None:
            b_bound = self._side_bound("zinv", self._slack_from("z", a_bound))
        lo_m = max(0, -k)
        if a_bound is not None:
            hi_m = a_bound - k
            if b_bound is not None:
                hi_m = min(hi_m, b_bound)
        elif b_bound is not None:
            hi_m = b_bound
        else:
            raise InfiniteSupportError("both sides of the symbol have unbounded support")
        like = self.like()
        if hi_m < lo_m:
            return zero_like(like)
        a = self._side_coeffs("z", hi_m + k)
        b = self._side_coeffs("zinv", hi_m)
        total = zero_like(like)
        for m in range(lo_m, hi_m + 1):
            total = total + a[m + k] * b[m]
        return total

    def reflected(self) -> "ProductSymbol":
        """The symbol f(1/z): d_k <-> d_{-k}."""
        flip = {"z": "zinv", "zinv": "z"}
        return ProductSymbol([Factor(flip[f.orientation], f.kind, f.spec) for f in self.factors])

    def value_at_one(self):
        """f(1) as the product of factor values (finite factors only)."""
        total = one_like(self.like())
        for f in self.factors:
            if not hasattr(f.spec, "finite_values"):
                raise InfiniteSupportError("factor has infinitely many variables")
            for v in f.spec.finite_values():
                total = total * ((1 + v) if f.kind == "E" else 1 / (1 - v))
        return total

    def factorization(self):
        """(y_kind, y_spec, x_kind, x_spec) for f = G(y; 1/z) G(x; z) with at most
        one factor kind per side; merges finite lists of the same kind."""
        out = []
        for orientation in ("zinv", "z"):
            side = self._side(orientation)
            if not side:
                out += ["H", FiniteList()]
                continue
            kinds = {f.kind for f in side}
            if len(kinds) > 1:
                raise ValueError("mixed E/H factors on one side have no single specialization")
            if len(side) == 1:
                out += [side[0].kind, side[0].spec]
                continue
            if not all(hasattr(f.spec, "finite_values") for f in side):
                raise ValueError("cannot merge infinite specializations")
            merged = FiniteList([v for f in side for v in f.spec.finite_values()])
            out += [side[0].kind, merged]
        return tuple(out)


class ProductSymbol(SymbolSpec):
    def __init__(self, factors=()):
        self.factors = tuple(factors)

    def __eq__(self, other):
        return isinstance(other, ProductSymbol) and self.factors == other.factors

    def __hash__(self):
        return hash(("product", self.factors))

    def __repr__(self):
        return f"ProductSymbol({list(self.factors)})"


@dataclass(frozen=True, eq=True)
class PureFH(SymbolSpec):
    """(1 + 1/z)^delta (1 + z)^gamma"""

    gamma: int
    delta: int

    def __post_init__(self):
        if self.gamma < 0 or self.delta < 0:
            raise ValueError("pure FH parameters must be non-negative integers")

    @property
    def factors(self):
        return (Factor("zinv", "E", ones(self.delta)), Factor("z", "E", ones(self.gamma)))

    def coefficient(self, k: int):
        if -self.delta <= k <= self.gamma:
            return binomial(self.gamma + self.delta, self.delta + k)
        return Fraction(0)

    def support(self):
        return (-self.delta, self.gamma)


@dataclass(frozen=True, eq=True)
class ThetaGD(SymbolSpec):
    """E(1, q, ..., q^{delta-1}; 1/z) E(q, ..., q^gamma; z)"""

    gamma: int
    delta: int
    q: object

    @property
    def factors(self):
        return (
            Factor("zinv", "E", PrincipalFinite(self.q, self.delta)),
            Factor("z", "E", PrincipalShiftedFinite(self.q, 1, self.gamma)),
        )

    def like(self):
        return self.q if isinstance(self.q, Series) else Fraction(1)

    def coefficient(self, k: int):
        g, d, q = self.gamma, self.delta, self.q
        if -d <= k <= g:
            power = q ** (k * (k + 1) // 2) if k * (k + 1) else one_like(q)
            return q_binomial(d + g, d + k, q) * power
        return zero_like(self.like())

    def support(self):
        return (-self.delta, self.gamma)


@dataclass(frozen=True, eq=True)
class ThetaD(SymbolSpec):
    """E(1, 1/q, ..., q^{-(delta-1)}; 1/z) E(q^delta, q^{delta+1}, ...; z)

    Infinite support on the positive side; with a series q the coefficients
    carry negative powers of q for delta >= 2.
    """

    delta: int
    q: object

    @property
    def factors(self):
        return (
            Factor("zinv", "E", PrincipalShiftedFinite(self.q, -(self.delta - 1), self.delta)),
            Factor("z", "E", PrincipalInfinite(self.q, self.delta)),
        )

    def like(self):
        return self.q if isinstance(self.q, Series) else Fraction(1)

    def coefficient(self, k: int):
        d, q = self.delta, self.q
        if k < -d:
            return zero_like(self.like())
        expo = k * d + k * (k - 1) // 2
        power = q ** expo if expo else one_like(q)
        return power / q_pochhammer(d + k, q)

    def support(self):
        return (-self.delta, None)


@dataclass(frozen=True, eq=True)
class Tridiagonal(SymbolSpec):
    """E(y; 1/z) E(x; z) = y/z + (1 + xy) + x z"""

    x: object
    y: object

    @property
    def factors(self):
        return (Factor("zinv", "E", FiniteList([self.y])), Factor("z", "E", FiniteList([self.x])))

    def like(self):
        for v in (self.x, self.y):
            if isinstance(v, Series):
                return v
        return Fraction(1)

    def coefficient(self, k: int):
        if k == 0:
            return 1 + self.x * self.y
        if k == 1:
            return self.x if isinstance(self.x, Series) else to_fraction(self.x)
        if k == -1:
            return self.y if isinstance(self.y, Series) else to_fraction(self.y)
        return zero_like(self.like())

    def support(self):
        return (-1, 1)


# module-level operations


def fourier_coefficient(f: SymbolSpec, k: int):
    return f.coefficient(k)


def fourier_window(f: SymbolSpec, lo: int, hi: int) -> list:
    if lo > hi:
        raise ValueError("empty window")
    return [f.coefficient(k) for k in range(lo, hi + 1)]


def as_laurent(f: SymbolSpec) -> LaurentPoly:
    lo, hi = f.support()
    if lo is None or hi is None:
        raise InfiniteSupportError(f"{f!r} is not a Laurent polynomial")
    return LaurentPoly(1, {(k,): f.coefficient(k) for k in range(lo, hi + 1)})


def symbol_from_json(obj: dict) -> SymbolSpec:
    from .scalar import scalar_from_json

    if "builtin" in obj:
        name = obj["builtin"]
        if name == "pure_fh":
            return PureFH(int(obj["gamma"]), int(obj["delta"]))
        if name == "theta_gd":
            return ThetaGD(int(obj["gamma"]), int(obj["delta"]), scalar_from_json(obj["q"]))
        if name == "theta_d":
            return ThetaD(int(obj["delta"]), scalar_from_json(obj["q"]))
        if name == "tridiagonal":
            return Tridiagonal(scalar_from_json(obj["x"]), scalar_from_json(obj["y"]))
        raise ValueError(f"unknown builtin symbol {name!r}")
    if "factors" in obj:
        return ProductSymbol(
            Factor(f["orientation"], f["kind"], specialization_from_json(f["spec"])) for f in obj["factors"]
        )
    raise ValueError("symbol needs 'builtin' or 'factors'")


def symbol_to_json(f: SymbolSpec) -> dict:
    from .scalar import scalar_to_json

    if isinstance(f, PureFH):
        return {"builtin": "pure_fh", "gamma": f.gamma, "delta": f.delta}
    if isinstance(f, ThetaGD):
        return {"builtin": "theta_gd", "gamma": f.gamma, "delta": f.delta, "q": scalar_to_json(f.q)}
    if isinstance(f, ThetaD):
        return {"builtin": "theta_d", "delta": f.delta, "q": scalar_to_json(f.q)}
    if isinstance(f, Tridiagonal):
        return {"builtin": "tridiagonal", "x": scalar_to_json(f.x), "y": scalar_to_json(f.y)}
    return {
        "factors": [
            {"orientation": x.orientation, "kind": x.kind, "spec": specialization_to_json(x.spec)}
            for x in f.factors
        ]
    }
