"""Exact scalars: rationals, truncated Laurent series, and the (q-)special
functions evaluated at integer arguments.

Rationals are plain :class:`fractions.Fraction` (ints are accepted wherever a
rational is). Series carry an absolute precision: ``Series`` represents

    sum_i coeffs[i] * q**(val + i)  +  O(q**prec)

so division by a series of positive valuation, or multiplication by negative
powers of q, lowers the precision instead of silently inventing coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence, Union

__all__ = [
    "Series",
    "Scalar",
    "to_fraction",
    "is_series",
    "one_like",
    "zero_like",
    "factorial_gamma",
    "barnes_g",
    "q_integer",
    "q_pochhammer",
    "q_gamma",
    "q_barnes",
    "q_binomial",
    "binomial",
    "series_arith",
    "scalar_to_json",
    "scalar_from_json",
    "decimal_string",
]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Series:
    """Truncated formal Laurent series in one parameter over the rationals."""

    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, coeffs: Sequence = (), prec: int | None = None, val: int = 0):
        cs = [to_fraction(c) for c in coeffs]
        if prec is None:
            prec = val + len(cs)
        if prec < val:
            cs = []
            val = prec
        cs = cs[: prec - val]
        cs += [Fraction(0)] * (prec - val - len(cs))
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        self.val = val + i
        self.coeffs = tuple(cs[i:])
        self.prec = prec

    # constructors

    @classmethod
    def gen(cls, order: int) -> "Series":
        """The parameter itself, known through exponent ``order``."""
        return cls([0, 1], prec=order + 1)

    @classmethod
    def const(cls, c, order: int) -> "Series":
        return cls([c], prec=order + 1)

    @classmethod
    def monomial(cls, c, exponent: int, prec: int) -> "Series":
        return cls([c], prec=prec, val=exponent)

    # structure

    @property
    def order(self) -> int:
        """Largest exponent whose coefficient is known."""
        return self.prec - 1

    @property
    def valuation(self) -> int:
        return self.val

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, n: int) -> Fraction:
        if n >= self.prec:
            raise ValueError(f"coefficient of q^{n} is beyond precision O(q^{self.prec})")
        if n < self.val:
            return Fraction(0)
        return self.coeffs[n - self.val]

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def coefficient_list(self, upto: int | None = None) -> list[Fraction]:
        """Coefficients of q^0 .. q^upto (defaults to the full precision)."""
        if upto is None:
            upto = self.prec - 1
        if self.val < 0 and any(self.coeffs[: -self.val]):
            raise ValueError("series has negative powers; use coefficient()")
        return [self.coefficient(n) for n in range(0, upto + 1)]

    def truncate(self, prec: int) -> "Series":
        return Series(self.coeffs, prec=min(prec, self.prec), val=self.val)

    def substitute(self, value):
        """Evaluate the known part at a rational (useful for exact polynomials)."""
        value = to_fraction(value)
        return sum((c * value ** (self.val + i) for i, c in enumerate(self.coeffs)), Fraction(0))

    # arithmetic

    def __neg__(self):
        return Series([-c for c in self.coeffs], prec=self.prec, val=self.val)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if self.prec <= 0:
                return self
            other = Series([other], prec=self.prec)
        elif not isinstance(other, Series):
            return NotImplemented
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        cs = [Fraction(0)] * max(prec - lo, 0)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                e = s.val + i
                if e < prec:
                    cs[e - lo] += c
        return Series(cs, prec=prec, val=lo)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Series)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Series([], prec=self.prec)
            return Series([c * other for c in self.coeffs], prec=self.prec, val=self.val)
        if not isinstance(other, Series):
            return NotImplemented
        prec = min(self.val + other.prec, other.val + self.prec)
        val = self.val + other.val
        n = prec - val
        if n <= 0:
            return Series([], prec=prec)
        cs = [Fraction(0)] * n
        a, b = self.coeffs, other.coeffs
        for i, x in enumerate(a[:n]):
            if x:
                for j, y in enumerate(b[: n - i]):
                    cs[i + j] += x * y
        return Series(cs, prec=prec, val=val)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        if self.is_zero():
            raise ZeroDivisionError("series is zero to its known precision")
        v = self.val
        n = self.prec - v  # relative precision
        a = self.coeffs
        a0 = a[0]
        inv = [Fraction(0)] * n
        inv[0] = 1 / a0
        for k in range(1, n):
            s = sum((a[i] * inv[k - i] for i in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
            inv[k] = -s / a0
        return Series(inv, prec=n - v, val=-v)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / to_fraction(other))
        if isinstance(other, Series):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return Series([1], prec=max(self.prec, 1))
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # comparison

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series([other], prec=self.prec)
        elif not isinstance(other, Series):
            return NotImplemented
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        return all(self.coefficient(e) == other.coefficient(e) for e in range(lo, prec))

    def __hash__(self):
        return hash((self.val, self.coeffs, self.prec))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                e = self.val + i
                terms.append(f"{c}" if e == 0 else f"{c}*q^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.prec})"

    def __repr__(self):
        return f"Series({self})"


Scalar = Union[Fraction, int, Series]


def is_series(x) -> bool:
    return isinstance(x, Series)


def one_like(x):
    if isinstance(x, Series):
        return Series([1], prec=x.prec if x.prec > 0 else 1)
    return Fraction(1)


def zero_like(x):
    if isinstance(x, Series):
        return Series([], prec=x.prec if x.prec > 0 else 1)
    return Fraction(0)


def _is_rational_one(q) -> bool:
    return isinstance(q, (int, Fraction)) and q == 1


def _check_q(q):
    if _is_rational_one(q):
        raise ValueError("q = 1 is a pole of the q-normalization; substitute q = 1 - eps in a series")


# classical special functions at integers


def factorial_gamma(n: int) -> Fraction:
    """Gamma(n + 1) = n!"""
    if n < 0:
        raise ValueError("factorial_gamma needs n >= 0")
    return Fraction(factorial(n))


@lru_cache(maxsize=None)
def barnes_g(n: int) -> Fraction:
    """Barnes G at a positive integer: G(1) = 1, G(n + 1) = Gamma(n) G(n)."""
    if n <= 0:
        raise ValueError(f"barnes_g is only defined here for positive integers, got {n}")
    if n == 1:
        return Fraction(1)
    return factorial_gamma(n - 2) * barnes_g(n - 1)


def binomial(a: int, b: int) -> Fraction:
    """Binomial coefficient with arbitrary integer top via the falling factorial."""
    if b < 0:
        return Fraction(0)
    num = 1
    for i in range(b):
        num *= a - i
    return Fraction(num, factorial(b))


# q-analogues


def q_integer(n: int, q):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    total = zero_like(q)
    power = one_like(q)
    for _ in range(n):
        total = total + power
        power = power * q
    return total


def q_pochhammer(k: int, q):
    """(q; q)_k = prod_{j=1}^{k} (1 - q^j)."""
    if k < 0:
        raise ValueError("q_pochhammer needs k >= 0")
    result = one_like(q)
    power = one_like(q)
    for _ in range(k):
        power = power * q
        result = result * (1 - power)
    return result


def q_gamma(n: int, q):
    """Gamma_q(n) = (q;q)_{n-1} / (1-q)^{n-1}, evaluated as prod of [j]_q so
    that q = 1 - eps series stay invertible."""
    if n < 1:
        raise ValueError("q_gamma needs n >= 1")
    _check_q(q)
    result = one_like(q)
    for j in range(1, n):
        result = result * q_integer(j, q)
    return result


def q_barnes(n: int, q):
    """G_q(k + 1) = prod_{j=1}^{k-1} Gamma_q(j + 1) with n = k + 1."""
    if n < 1:
        raise ValueError("q_barnes needs n >= 1")
    _check_q(q)
    result = one_like(q)
    for j in range(1, n - 1):
        result = result * q_gamma(j + 1, q)
    return result


def q_binomial(a: int, b: int, q):
    """Gaussian binomial [a, b]_q; zero outside 0 <= b <= a."""
    _check_q(q)
    if b < 0 or b > a or a < 0:
        return zero_like(q)
    return _gauss_binomial(a, min(b, a - b), q)


@lru_cache(maxsize=4096)
def _gauss_binomial(a: int, b: int, q):
    # division-free q-Pascal rule: [a,b] = [a-1,b-1] + q^b [a-1,b]
    if b == 0 or b == a:
        return one_like(q)
    left = _gauss_binomial(a - 1, min(b - 1, a - b), q)
    right = _gauss_binomial(a - 1, min(b, a - 1 - b), q)
    return left + q ** b * right


def series_arith(a: Series, b: Series | None, op: str) -> Series:
    """Strict front door for series arithmetic: equal orders required."""
    if op not in ("add", "mul", "invert"):
        raise ValueError(f"unknown op {op!r}")
    if op == "invert":
        if a.val != 0 or a.is_zero():
            raise ZeroDivisionError("constant term is not invertible")
        return a.inverse()
    if a.prec != b.prec:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    return a + b if op == "add" else a * b


# serialization


def scalar_to_json(x):
    if isinstance(x, Series):
        if x.val < 0:
            return {"val": x.val, "coeffs": [str(c) for c in x.coeffs], "order": x.order}
        return {"coeffs": [str(c) for c in x.coefficient_list()], "order": x.order}
    return str(to_fraction(x))


def scalar_from_json(obj):
    if isinstance(obj, dict):
        order = int(obj["order"])
        return Series([Fraction(c) for c in obj["coeffs"]], prec=order + 1, val=int(obj.get("val", 0)))
    if isinstance(obj, (int, str)):
        return Fraction(obj)
    raise ValueError(f"cannot read scalar from {obj!r}")


def decimal_string(x, digits: int = 12) -> str:
    """Fixed-precision decimal rendering of a rational (presentation only)."""
    x = to_fraction(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    scaled = (x.numerator * 10 ** digits * 2 + x.denominator) // (2 * x.denominator)
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
