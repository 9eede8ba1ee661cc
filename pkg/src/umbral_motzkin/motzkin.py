"""Motzkin numbers, the hybrid polynomials behind them, and their identities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import as_rational, binomial, central_kernel, factorial
from .powerseries import Series, cq_series, from_egf, polynomial, ps_exp, ps_inflate, ps_mul
from .report import UnknownIdentityError, VerificationReport, check_points, check_series_points

__all__ = [
    "Triangle",
    "hybrid_poly",
    "motzkin",
    "motzkin_coeff",
    "motzkin_triangle",
    "assoc_motzkin",
    "tilde_motzkin",
    "motzkin_egf_series",
    "hybrid_gf_series",
    "mu_series",
    "motzkin_shift_gf_series",
    "motzkin_identity_tags",
    "verify_motzkin_identity",
    "DEFAULT_HYBRID_GRID",
]

DEFAULT_HYBRID_GRID = (
    (Fraction(1), Fraction(1)),
    (Fraction(1), Fraction(1, 2)),
    (Fraction(2), Fraction(1, 3)),
    (Fraction(-1), Fraction(3, 2)),
    (Fraction(1, 2), Fraction(-2)),
)


@dataclass(frozen=True)
class Triangle:
    """Rows of a coefficient triangle; ``rows[n]`` holds entries s = 0..n."""

    name: str
    rows: tuple[tuple[int, ...], ...]
    row_sums: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.row_sums):
            raise ValueError("one row sum per row")
        for n, (row, total) in enumerate(zip(self.rows, self.row_sums)):
            if len(row) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries")
            if sum(row) != total:
                raise ValueError(f"row {n} does not sum to {total}")

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def column(self, s: int) -> list[int]:
        """Entries of column s for n = s..n_max."""
        return [row[s] for row in self.rows[s:]]


def hybrid_poly(n: int, q: int, x, y) -> Fraction:
    """P_n^(q)(x, y) = n! sum_r x^(n-2r) y^r / ((n-2r)! r! (r+q)!)."""
    if n < 0 or q < 0:
        raise ValueError("n and q must be >= 0")
    x, y = as_rational(x), as_rational(y)
    nf = factorial(n)
    total = Fraction(0)
    for r in range(n // 2 + 1):
        k = n - 2 * r
        total += Fraction(nf, factorial(k) * factorial(r) * factorial(r + q)) * x**k * y**r
    return total


def motzkin_coeff(n: int, s: int) -> int:
    if s < 0 or s > n:
        raise ValueError(f"need 0 <= s <= n, got n={n}, s={s}")
    return binomial(n, s) * central_kernel(s)


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(binomial(n, s) * central_kernel(s) for s in range(0, n + 1, 2))


def motzkin_triangle(n_max: int) -> Triangle:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    rows = tuple(tuple(motzkin_coeff(n, s) for s in range(n + 1)) for n in range(n_max + 1))
    return Triangle("motzkin", rows, tuple(motzkin(n) for n in range(n_max + 1)))


@lru_cache(maxsize=None)
def assoc_motzkin(n: int, q: int) -> Fraction:
    """Associated Motzkin number m_n^(q) = P_n^(q)(1, 1); rational for q != 1."""
    return hybrid_poly(n, q, 1, 1)


def tilde_motzkin(n: int, q: int) -> Fraction:
    """((n+q)!/n!) m_n^(q), the integer rescaling of the associated numbers."""
    return Fraction(factorial(n + q), factorial(n)) * assoc_motzkin(n, q)


# -- generating functions as rational series ---------------------------------


def hybrid_gf_series(q: int, x, y, order: int) -> Series:
    """C_q(y t^2) e^(x t), the square-root-free form of the hybrid EGF."""
    x = as_rational(x)
    return ps_mul(ps_inflate(cq_series(q, order), 2, y), ps_exp(polynomial([0, x], order)))


def motzkin_egf_series(order: int) -> Series:
    """C_1(t^2) e^t, whose EGF coefficients are the Motzkin numbers."""
    return hybrid_gf_series(1, 1, 1, order)


def _bessel_quotient_series(s: int, r: int, order: int) -> Series:
    # I_{s+r+1}(2t) / t^(r+1) = sum_k t^(2k+s) / (k! (k+s+r+1)!)
    out = [Fraction(0)] * (order + 1)
    k = 0
    while 2 * k + s <= order:
        out[2 * k + s] = Fraction(1, factorial(k) * factorial(k + s + r + 1))
        k += 1
    return Series(out)


def mu_series(l: int, order: int) -> Series:
    """mu_l(t) assembled from rational Bessel quotients."""
    lf = factorial(l)
    acc = Series([0], order)
    for r in range(l // 2 + 1):
        for s in range(l - 2 * r + 1):
            weight = Fraction(lf * 2**s, factorial(r) * factorial(s) * factorial(l - 2 * r - s))
            acc = acc + _bessel_quotient_series(s, r, order) * weight
    return acc


def motzkin_shift_gf_series(l: int, order: int) -> Series:
    return ps_mul(mu_series(l, order), ps_exp(polynomial([0, 1], order)))


# -- identity right-hand sides ----------------------------------------------


def _dup_rhs(n: int) -> Fraction:
    total = Fraction(0)
    for r in range(n + 1):
        k = n - r
        inner = sum(
            (
                assoc_motzkin(k, r + s + 1) / (factorial(k - 2 * s) * factorial(s))
                for s in range(k // 2 + 1)
            ),
            Fraction(0),
        )
        total += binomial(n, r) ** 2 * 2**r * factorial(r) * factorial(k) * inner
    return total


def _big_m(p: int, n: int, t: int) -> Fraction:
    """M_{p,n,t} = p! sum_r m_n^(t+r+1) / ((p-2r)! r!)."""
    return factorial(p) * sum(
        (
            assoc_motzkin(n, t + r + 1) / (factorial(p - 2 * r) * factorial(r))
            for r in range(p // 2 + 1)
        ),
        Fraction(0),
    )


def _add_rhs(n: int, p: int) -> Fraction:
    # binomial() vanishes past min(n, p), so the bound takes care of itself
    total = Fraction(0)
    for s in range(max(n, p) + 1):
        w = 2**s * factorial(s) * binomial(p, s) * binomial(n, s)
        if w:
            total += w * _big_m(p - s, n - s, s)
    return total


def _conv_sides(n: int):
    lhs = Fraction(sum(motzkin(n - s) * motzkin(s) for s in range(n + 1)))
    return lhs, 2 * (n + 1) * assoc_motzkin(n, 2)


def motzkin_identity_tags() -> tuple[str, ...]:
    return (
        "GF-HYBRID",
        "GF-MOTZKIN",
        "GF-MOTZKIN-SHIFT",
        "MOTZKIN-DUP",
        "ASSOC-REC",
        "MOTZKIN-ADD",
        "MOTZKIN-CONV",
    )


_DEFAULTS = {
    "GF-HYBRID": {"q_max": 3, "order": 24},
    "GF-MOTZKIN": {"order": 30},
    "GF-MOTZKIN-SHIFT": {"l_max": 6, "order": 24},
    "MOTZKIN-DUP": {"n_max": 12},
    "ASSOC-REC": {"n_max": 40, "q_max": 5},
    "MOTZKIN-ADD": {"n_max": 10},
    "MOTZKIN-CONV": {"n_max": 40},
}


def verify_motzkin_identity(
    tag: str,
    *,
    n_min: int = 1,
    n_max: int | None = None,
    q_max: int | None = None,
    l_max: int | None = None,
    order: int | None = None,
    grid=None,
) -> VerificationReport:
    """Check one Motzkin identity exactly; unset bounds take per-tag defaults.

    Scalar identities walk ``n = n_min..n_max``; MOTZKIN-ADD walks
    ``n, p = 0..n_max`` (its own boundary cases are the interesting ones).
    """
    tag = tag.upper()
    if tag not in _DEFAULTS:
        raise UnknownIdentityError(tag)
    d = _DEFAULTS[tag]
    n_max = d.get("n_max") if n_max is None else n_max
    q_max = d.get("q_max") if q_max is None else q_max
    l_max = d.get("l_max") if l_max is None else l_max
    order = d.get("order") if order is None else order

    if tag == "GF-HYBRID":
        grid = DEFAULT_HYBRID_GRID if grid is None else grid
        points = [(q, as_rational(x), as_rational(y)) for q in range(q_max + 1) for x, y in grid]

        def sides(q, x, y):
            lhs = from_egf([hybrid_poly(n, q, x, y) for n in range(order + 1)])
            return lhs, hybrid_gf_series(q, x, y, order)

        return check_series_points(
            tag, f"q=0..{q_max}, {len(grid)} (x,y) points, order {order}", ("q", "x", "y"), points, sides
        )
    if tag == "GF-MOTZKIN":
        return check_series_points(
            tag,
            f"order {order}",
            (),
            [()],
            lambda: (from_egf([motzkin(n) for n in range(order + 1)]), motzkin_egf_series(order)),
        )
    if tag == "GF-MOTZKIN-SHIFT":
        return check_series_points(
            tag,
            f"l=0..{l_max}, order {order}",
            ("l",),
            [(l,) for l in range(l_max + 1)],
            lambda l: (
                from_egf([motzkin(n + l) for n in range(order + 1)]),
                motzkin_shift_gf_series(l, order),
            ),
        )
    if tag == "MOTZKIN-DUP":
        return check_points(
            tag,
            f"n={n_min}..{n_max}",
            ("n",),
            [(n,) for n in range(n_min, n_max + 1)],
            lambda n: (Fraction(motzkin(2 * n)), _dup_rhs(n)),
        )
    if tag == "ASSOC-REC":
        # at n = 0 the correction term is 0 * m_{-1}, which is undefined
        return check_points(
            tag,
            f"n={max(n_min, 1)}..{n_max}, q=0..{q_max}",
            ("n", "q"),
            [(n, q) for n in range(max(n_min, 1), n_max + 1) for q in range(q_max + 1)],
            lambda n, q: (
                assoc_motzkin(n + 1, q),
                assoc_motzkin(n, q) + 2 * n * assoc_motzkin(n - 1, q + 1),
            ),
        )
    if tag == "MOTZKIN-ADD":
        return check_points(
            tag,
            f"n,p=0..{n_max}",
            ("n", "p"),
            [(n, p) for n in range(n_max + 1) for p in range(n_max + 1)],
            lambda n, p: (Fraction(motzkin(n + p)), _add_rhs(n, p)),
        )
    # MOTZKIN-CONV
    return check_points(
        tag, f"n={n_min}..{n_max}", ("n",), [(n,) for n in range(n_min, n_max + 1)], _conv_sides
    )
