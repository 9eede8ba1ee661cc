"""Verification reports shared by every identity checker."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable

from .exactnum import format_rational
from .powerseries import Series

__all__ = [
    "Counterexample",
    "VerificationReport",
    "UnknownIdentityError",
    "check_points",
    "check_series_points",
]


class UnknownIdentityError(KeyError):
    pass


@dataclass(frozen=True)
class Counterexample:
    params: dict
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    range: str
    checked: int
    failed: int = 0
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def summary(self) -> str:
        ok = self.checked - self.failed
        verdict = "pass" if self.passed else "FAIL"
        line = f"{self.identity}: {ok}/{self.checked} {verdict} ({self.range})"
        if self.counterexample is not None:
            cx = self.counterexample
            params = ", ".join(f"{k}={_fmt(v)}" for k, v in cx.params.items())
            line += f"\n  first counterexample: {params}: lhs={_fmt(cx.lhs)} rhs={_fmt(cx.rhs)}"
        return line

    def to_json(self) -> dict:
        cx = None
        if self.counterexample is not None:
            cx = {
                "params": {k: _fmt(v) for k, v in self.counterexample.params.items()},
                "lhs": _fmt(self.counterexample.lhs),
                "rhs": _fmt(self.counterexample.rhs),
            }
        return {
            "identity": self.identity,
            "range": self.range,
            "checked": self.checked,
            "failed": self.failed,
            "passed": self.passed,
            "counterexample": cx,
        }


def _fmt(v: Any) -> str:
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return format_rational(v)
    return str(v)


def check_points(
    identity: str,
    range_desc: str,
    names: tuple[str, ...],
    points: Iterable[tuple],
    sides: Callable[..., tuple[Fraction, Fraction]],
) -> VerificationReport:
    """Evaluate ``sides(*point)`` at every point and compare exactly.

    Points are visited in sorted order, so the reported counterexample is the
    lexicographically smallest failing tuple whatever order they came in.
    """
    checked = failed = 0
    first = None
    for point in sorted(set(points)):
        lhs, rhs = sides(*point)
        checked += 1
        if lhs != rhs:
            failed += 1
            if first is None:
                first = Counterexample(dict(zip(names, point)), lhs, rhs)
    if checked == 0:
        raise ValueError(f"{identity}: empty parameter range")
    return VerificationReport(identity, range_desc, checked, failed, first)


def check_series_points(
    identity: str,
    range_desc: str,
    names: tuple[str, ...],
    points: Iterable[tuple],
    sides: Callable[..., tuple[Series, Series]],
) -> VerificationReport:
    """Like :func:`check_points` for series-valued sides.

    A failure records the first coefficient index ``k`` where the sides differ.
    """
    checked = failed = 0
    first = None
    for point in sorted(set(points)):
        lhs, rhs = sides(*point)
        checked += 1
        n = min(lhs.order, rhs.order)
        bad = next((k for k in range(n + 1) if lhs[k] != rhs[k]), None)
        if bad is not None:
            failed += 1
            if first is None:
                params = dict(zip(names, point))
                params["k"] = bad
                first = Counterexample(params, lhs[bad], rhs[bad])
    if checked == 0:
        raise ValueError(f"{identity}: empty parameter range")
    return VerificationReport(identity, range_desc, checked, failed, first)
