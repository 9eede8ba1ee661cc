"""Telephone numbers, their coefficient triangle and the order-m generalisation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import as_rational, binomial, catalan, factorial, require_int
from .hermite import hermite_kdf
from .motzkin import Triangle
from .powerseries import Series, from_egf, monomial, polynomial, ps_exp
from .report import UnknownIdentityError, VerificationReport, check_points, check_series_points

__all__ = [
    "TelephoneRow",
    "telephone",
    "hermite_number",
    "hermite_number_via_catalan",
    "telephone_coeff",
    "telephone_triangle",
    "telephone_as_triangle",
    "gen_telephone",
    "gen_telephone_gf_series",
    "telephone_identity_tags",
    "verify_telephone_identity",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class TelephoneRow:
    n: int
    coeffs: tuple[int, ...]
    total: int

    def __post_init__(self):
        if sum(self.coeffs) != self.total:
            raise ValueError(f"row {self.n} does not sum to {self.total}")


def telephone(n: int) -> int:
    """T(n) = H_n(1, 1/2)."""
    return require_int(hermite_kdf(n, 2, 1, HALF), f"T({n})")


def hermite_number(s: int, y) -> Fraction:
    """h_s(y): zero for odd s, y^k (2k)!/k! for s = 2k."""
    if s < 0:
        raise ValueError("s must be >= 0")
    if s % 2:
        return Fraction(0)
    k = s // 2
    return as_rational(y) ** k * Fraction(factorial(2 * k), factorial(k))


def hermite_number_via_catalan(s: int, y) -> Fraction:
    """h_s(y) through y^(s/2) Gamma(s/2+2) f_s; a second route for cross-checks."""
    if s % 2:
        return Fraction(0)
    k = s // 2
    return as_rational(y) ** k * factorial(k + 1) * catalan(k)


def telephone_coeff(n: int, s: int) -> int:
    if s < 0 or s > n:
        raise ValueError(f"need 0 <= s <= n, got n={n}, s={s}")
    return require_int(binomial(n, s) * hermite_number(s, HALF), f"t({n},{s})")


def telephone_triangle(n_max: int) -> list[TelephoneRow]:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return [
        TelephoneRow(n, tuple(telephone_coeff(n, s) for s in range(n + 1)), telephone(n))
        for n in range(n_max + 1)
    ]


def telephone_as_triangle(n_max: int) -> Triangle:
    rows = telephone_triangle(n_max)
    return Triangle("telephone", tuple(r.coeffs for r in rows), tuple(r.total for r in rows))


def gen_telephone(n: int, m: int) -> int:
    """T_n^(m) = H_n^(m)(1, 1/m)."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    return require_int(hermite_kdf(n, m, 1, Fraction(1, m)), f"T_{n}^({m})")


def gen_telephone_gf_series(m: int, order: int) -> Series:
    """exp(t + t^m/m)."""
    return ps_exp(polynomial([0, 1], order) + monomial(m, order, Fraction(1, m)))


def _falling(n: int, k: int) -> int:
    # n!/(n-k)!, zero once n-k < 0
    if n - k < 0:
        return 0
    return factorial(n) // factorial(n - k)


def _rec_sides(m: int, n: int):
    lhs = gen_telephone(n + 1, m)
    j = n - m + 1
    rhs = gen_telephone(n, m)
    if j >= 0:
        rhs += _falling(n, m - 1) * gen_telephone(j, m)
    return Fraction(lhs), Fraction(rhs)


def _dup_sides(n: int):
    rhs = sum(binomial(n, r) ** 2 * factorial(r) * telephone(n - r) ** 2 for r in range(n + 1))
    return Fraction(telephone(2 * n)), Fraction(rhs)


def telephone_identity_tags() -> tuple[str, ...]:
    return ("TEL-DUP", "TEL-GF", "TEL-REC")


def verify_telephone_identity(
    tag: str,
    *,
    n_min: int | None = None,
    n_max: int | None = None,
    m_values=(2, 3, 4, 5, 6),
    order: int = 24,
) -> VerificationReport:
    """TEL-DUP walks n = 1..15 and TEL-REC walks n = 0..40 unless told otherwise."""
    tag = tag.upper()
    m_values = tuple(m_values)
    if tag == "TEL-DUP":
        n_min = 1 if n_min is None else n_min
        n_max = 15 if n_max is None else n_max
        return check_points(
            tag, f"n={n_min}..{n_max}", ("n",), [(n,) for n in range(n_min, n_max + 1)], _dup_sides
        )
    if tag == "TEL-GF":
        return check_series_points(
            tag,
            f"m in {list(m_values)}, order {order}",
            ("m",),
            [(m,) for m in m_values],
            lambda m: (
                from_egf([gen_telephone(n, m) for n in range(order + 1)]),
                gen_telephone_gf_series(m, order),
            ),
        )
    if tag == "TEL-REC":
        # n = 0 is a genuine case here: T_1 = T_0 for every m >= 2
        n_min = 0 if n_min is None else n_min
        n_max = 40 if n_max is None else n_max
        return check_points(
            tag,
            f"m in {list(m_values)}, n={n_min}..{n_max}",
            ("m", "n"),
            [(m, n) for m in m_values for n in range(n_min, n_max + 1)],
            _rec_sides,
        )
    raise UnknownIdentityError(tag)
