"""Sparse multivariate Laurent polynomials with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .scalar import Series, to_fraction


def _is_zero(c) -> bool:
    return c.is_zero() if isinstance(c, Series) else c == 0


class LaurentPoly:
    """Map from exponent tuples (fixed arity) to nonzero coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple, object] = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong arity for {nvars} variables")
            if not isinstance(c, Series):
                c = to_fraction(c)
            clean[exp] = clean[exp] + c if exp in clean else c
        self.terms = {e: c for e, c in clean.items() if not _is_zero(c)}

    @classmethod
    def constant(cls, nvars: int, c=1) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int, power: int = 1, c=1) -> "LaurentPoly":
        exp = [0] * nvars
        exp[index] = power
        return cls(nvars, {tuple(exp): c})

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.nvars, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict[tuple, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def coefficient(self, exp) -> object:
        return self.terms.get(tuple(exp), Fraction(0))

    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def substitute_inverse(self) -> "LaurentPoly":
        """Replace every z_i by 1/z_i."""
        return LaurentPoly(self.nvars, {tuple(-a for a in e): c for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return self.nvars == other.nvars and all(self.coefficient(k) == other.coefficient(k) for k in keys)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"z{i + 1}^{a}" for i, a in enumerate(e) if a)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)
