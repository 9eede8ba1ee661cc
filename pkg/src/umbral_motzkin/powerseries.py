"""Truncated formal power series with Fraction coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import as_rational, factorial

__all__ = [
    "Series",
    "ps_add",
    "ps_mul",
    "ps_scale",
    "ps_exp",
    "ps_inflate",
    "cq_series",
    "egf_coeff",
    "from_egf",
    "monomial",
    "polynomial",
]


class Series:
    """c_0 + c_1 t + ... + c_N t^N, known exactly up to t^N.

    Binary operations between series of different orders truncate to the
    smaller order, since the longer series' tail is not matched by anything
    known in the shorter one.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [as_rational(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("a series needs at least one coefficient")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs[k]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self._coeffs)
        return f"Series([{body}])"

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return Series(self._coeffs[: order + 1])

    def evaluate(self, x) -> Fraction:
        """Horner evaluation of the truncated polynomial."""
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if isinstance(other, Series):
            return ps_add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Series):
            return ps_add(self, ps_scale(other, -1))
        return NotImplemented

    def __neg__(self):
        return ps_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, Series):
            return ps_mul(self, other)
        try:
            return ps_scale(self, other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__


def ps_add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series([a[k] + b[k] for k in range(n + 1)])


def ps_scale(a: Series, c) -> Series:
    c = as_rational(c)
    return Series([c * x for x in a])


def ps_mul(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        ai = a[i]
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return Series(out)


def ps_exp(a: Series) -> Series:
    """exp(a) for a series without constant term.

    Uses n b_n = sum_{k=1}^{n} k a_k b_{n-k}, which follows from b' = a' b.
    """
    if a[0] != 0:
        raise ValueError("formal exp needs a zero constant term")
    n = a.order
    b = [Fraction(0)] * (n + 1)
    b[0] = Fraction(1)
    for m in range(1, n + 1):
        acc = Fraction(0)
        for k in range(1, m + 1):
            if a[k]:
                acc += k * a[k] * b[m - k]
        b[m] = acc / m
    return Series(b)


def ps_inflate(a: Series, m: int, c=1) -> Series:
    """Substitute ``u -> c t^m``; the result keeps the order of ``a``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    c = as_rational(c)
    n = a.order
    out = [Fraction(0)] * (n + 1)
    power = Fraction(1)
    for r in range(n // m + 1):
        out[m * r] = a[r] * power
        power *= c
    return Series(out)


def cq_series(q: int, order: int) -> Series:
    """sum_r u^r / (r! (q+r)!), the rational-series form of I_q(2 sqrt u)/sqrt(u)^q."""
    if q < 0:
        raise ValueError("q must be >= 0")
    return Series(
        [Fraction(1, factorial(r) * factorial(q + r)) for r in range(order + 1)]
    )


def egf_coeff(a: Series, n: int) -> Fraction:
    if n < 0 or n > a.order:
        raise ValueError(f"coefficient {n} lies outside truncation order {a.order}")
    return a[n] * factorial(n)


def from_egf(values: Sequence) -> Series:
    """The series sum_n values[n] t^n / n!."""
    return Series([as_rational(v) / factorial(n) for n, v in enumerate(values)])


def monomial(k: int, order: int, c=1) -> Series:
    out = [0] * (order + 1)
    if k <= order:
        out[k] = c
    return Series(out)


def polynomial(coeffs: Sequence, order: int) -> Series:
    """Embed a polynomial (low degree first) as a series of the given order."""
    return Series(list(coeffs), order)
