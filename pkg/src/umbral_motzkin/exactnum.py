"""Exact integer and rational kernels.

Python ints are already arbitrary precision and :class:`fractions.Fraction`
keeps itself in lowest terms with a positive denominator, so those two types
are the scalars of the whole package.  This module only adds the handful of
combinatorial helpers the rest of the code leans on.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

__all__ = [
    "Rational",
    "as_rational",
    "factorial",
    "binomial",
    "catalan",
    "recip_gamma_int",
    "central_kernel",
    "NonIntegralValueError",
    "require_int",
    "format_rational",
    "parse_rational",
]

Rational = Fraction


def _check_nat(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: a float that reaches the core is almost always a bug.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    _check_nat("n", n)
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero whenever k falls outside 0..n."""
    _check_nat("n", n)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(k: int) -> int:
    _check_nat("k", k)
    return math.comb(2 * k, k) // (k + 1)


def recip_gamma_int(k: int) -> Fraction:
    """1/Gamma(k+1) at an integer k.

    Gamma has poles at 0, -1, -2, ..., so the reciprocal vanishes there and
    every ``k <= -1`` maps to exactly zero.
    """
    if k < 0:
        return Fraction(0)
    return Fraction(1, factorial(k))


def central_kernel(s: int) -> int:
    """The coefficient f_s of the Motzkin triangle.

    ``s!/(Gamma(s/2+2) Gamma(s/2+1)) * |cos(s pi/2)|`` is Catalan(s/2) for even
    s and is killed by the cosine for odd s; no Gamma at half-integers needed.
    """
    _check_nat("s", s)
    if s % 2:
        return 0
    return catalan(s // 2)


class NonIntegralValueError(ArithmeticError):
    """A value that should be an integer came out with a denominator."""


def require_int(value, what: str = "value") -> int:
    value = as_rational(value)
    if value.denominator != 1:
        raise NonIntegralValueError(f"{what} = {value} is not an integer")
    return value.numerator


def format_rational(value) -> str:
    """``5/6`` for proper fractions, plain digits for integers."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    if "." in text or "e" in text.lower():
        raise ValueError(f"decimal literals are not accepted: {text!r}")
    return Fraction(text)
