"""Two-variable Hermite-Kampe de Feriet polynomials H_n^(m)(x, y)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import as_rational, binomial, factorial
from .powerseries import Series, from_egf, polynomial, ps_exp, ps_mul
from .report import UnknownIdentityError, VerificationReport, check_points, check_series_points

__all__ = [
    "HermiteValue",
    "hermite_kdf",
    "hermite_shift_poly",
    "hermite_identity_tags",
    "verify_hermite_identity",
    "DEFAULT_SHIFT_GRID",
    "DEFAULT_DUP_GRID",
]

DEFAULT_SHIFT_GRID = ((Fraction(1), Fraction(1)), (Fraction(1), Fraction(1, 2)), (Fraction(2), Fraction(1, 3)))
DEFAULT_DUP_GRID = tuple(
    (Fraction(x), Fraction(y))
    for x in (1, Fraction(1, 2), 2, -3)
    for y in (1, Fraction(1, 2), Fraction(1, 3), -2, 0)
)


def hermite_kdf(n: int, m_order: int, x, y) -> Fraction:
    """n! * sum_{r=0}^{n//m} x^(n-mr) y^r / ((n-mr)! r!)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if m_order < 2:
        raise ValueError(f"order m must be >= 2, got {m_order}")
    x, y = as_rational(x), as_rational(y)
    nf = factorial(n)
    total = Fraction(0)
    for r in range(n // m_order + 1):
        k = n - m_order * r
        total += Fraction(nf, factorial(k) * factorial(r)) * x**k * y**r
    return total


@dataclass(frozen=True)
class HermiteValue:
    n: int
    m_order: int
    x: Fraction
    y: Fraction
    value: Fraction

    @classmethod
    def compute(cls, n: int, m_order: int, x, y) -> "HermiteValue":
        x, y = as_rational(x), as_rational(y)
        return cls(n, m_order, x, y, hermite_kdf(n, m_order, x, y))

    def check(self) -> bool:
        return self.value == hermite_kdf(self.n, self.m_order, self.x, self.y)


def hermite_shift_poly(l: int, x, y, order: int) -> Series:
    """H_l(x + 2yt, y) expanded in t by the binomial theorem."""
    x, y = as_rational(x), as_rational(y)
    coeffs = [Fraction(0)] * (l + 1)
    lf = factorial(l)
    for r in range(l // 2 + 1):
        k = l - 2 * r
        outer = Fraction(lf, factorial(k) * factorial(r)) * y**r
        for j in range(k + 1):
            coeffs[j] += outer * binomial(k, j) * x ** (k - j) * (2 * y) ** j
    return polynomial(coeffs, order)


def _gf_shift_sides(l: int, x: Fraction, y: Fraction, order: int):
    lhs = from_egf([hermite_kdf(n + l, 2, x, y) for n in range(order + 1)])
    rhs = ps_mul(hermite_shift_poly(l, x, y, order), ps_exp(polynomial([0, x, y], order)))
    return lhs, rhs


def _dup_sides(n: int, x: Fraction, y: Fraction):
    lhs = hermite_kdf(2 * n, 2, x, y)
    rhs = sum(
        (
            binomial(n, r) ** 2 * factorial(r) * (2 * y) ** r * hermite_kdf(n - r, 2, x, y) ** 2
            for r in range(n + 1)
        ),
        Fraction(0),
    )
    return lhs, rhs


def hermite_identity_tags() -> tuple[str, ...]:
    return ("GF-HERMITE-SHIFT", "HERMITE-DUP")


def verify_hermite_identity(
    tag: str,
    *,
    l_max: int = 4,
    n_min: int = 1,
    n_max: int = 12,
    order: int = 24,
    grid=None,
) -> VerificationReport:
    """Check one Hermite identity exactly over a parameter range.

    GF-HERMITE-SHIFT ranges over ``l = 0..l_max`` and ``grid`` points
    (default :data:`DEFAULT_SHIFT_GRID`) to ``order``; HERMITE-DUP ranges over
    ``n = n_min..n_max`` and ``grid`` (default :data:`DEFAULT_DUP_GRID`).
    """
    tag = tag.upper()
    if tag == "GF-HERMITE-SHIFT":
        grid = DEFAULT_SHIFT_GRID if grid is None else grid
        points = [(l, as_rational(x), as_rational(y)) for l in range(l_max + 1) for x, y in grid]
        return check_series_points(
            tag,
            f"l=0..{l_max}, {len(grid)} (x,y) points, order {order}",
            ("l", "x", "y"),
            points,
            lambda l, x, y: _gf_shift_sides(l, x, y, order),
        )
    if tag == "HERMITE-DUP":
        grid = DEFAULT_DUP_GRID if grid is None else grid
        points = [(n, as_rational(x), as_rational(y)) for n in range(n_min, n_max + 1) for x, y in grid]
        return check_points(
            tag,
            f"n={n_min}..{n_max}, {len(grid)} (x,y) points",
            ("n", "x", "y"),
            points,
            _dup_sides,
        )
    raise UnknownIdentityError(tag)
