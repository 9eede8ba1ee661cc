"""Finite combinations of integer powers of the umbral symbol c.

``c^k`` evaluates to ``1/Gamma(k+1)`` and powers compose by adding exponents.
Only integer exponents are supported.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .exactnum import as_rational, factorial, recip_gamma_int

__all__ = [
    "UmbralPoly",
    "c_power",
    "umbral_compose",
    "umbral_eval",
    "umbral_hermite",
    "umbral_exp_partial",
]


class UmbralPoly:
    """Immutable map exponent -> coefficient, zero coefficients never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean: dict[int, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            if isinstance(exp, bool) or not isinstance(exp, int):
                raise TypeError(f"umbral exponents must be ints, got {exp!r}")
            coeff = as_rational(coeff)
            if coeff:
                clean[exp] = clean.get(exp, Fraction(0)) + coeff
        self._terms = {e: c for e, c in sorted(clean.items()) if c}

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UmbralPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "UmbralPoly(0)"
        parts = [f"{c}*c^{e}" for e, c in self._terms.items()]
        return "UmbralPoly(" + " + ".join(parts) + ")"

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "UmbralPoly") -> "UmbralPoly":
        if not isinstance(other, UmbralPoly):
            return NotImplemented
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, Fraction(0)) + c
        return UmbralPoly(merged)

    def scale(self, factor) -> "UmbralPoly":
        factor = as_rational(factor)
        return UmbralPoly({e: c * factor for e, c in self._terms.items()})

    def __matmul__(self, other: "UmbralPoly") -> "UmbralPoly":
        # a @ b reads as a composed with b
        if not isinstance(other, UmbralPoly):
            return NotImplemented
        return umbral_compose(self, other)

    def evaluate(self) -> Fraction:
        return umbral_eval(self)


def c_power(k: int, coeff=1) -> UmbralPoly:
    return UmbralPoly({k: coeff})


def umbral_compose(a: UmbralPoly, b: UmbralPoly) -> UmbralPoly:
    out: dict[int, Fraction] = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            out[ea + eb] = out.get(ea + eb, Fraction(0)) + ca * cb
    return UmbralPoly(out)


def umbral_eval(a: UmbralPoly) -> Fraction:
    return sum((c * recip_gamma_int(e) for e, c in a.terms.items()), Fraction(0))


def umbral_hermite(n: int, x, y=1) -> UmbralPoly:
    """H_n(x, y*c) as a polynomial in c.

    The coefficient of c^r is n! x^(n-2r) y^r / ((n-2r)! r!).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    x, y = as_rational(x), as_rational(y)
    nf = factorial(n)
    return UmbralPoly(
        {
            r: Fraction(nf, factorial(n - 2 * r) * factorial(r)) * x ** (n - 2 * r) * y**r
            for r in range(n // 2 + 1)
        }
    )


def umbral_exp_partial(x, terms: int) -> UmbralPoly:
    """sum_{r<=terms} x^r c^r / r!, the truncation of exp(c x)."""
    x = as_rational(x)
    return UmbralPoly({r: x**r / factorial(r) for r in range(terms + 1)})
