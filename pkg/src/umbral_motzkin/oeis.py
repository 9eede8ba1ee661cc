"""OEIS b-file parsing, prefix comparison and the bundled fixture set."""

from __future__ import annotations

import os
import re
import urllib.error
import urllib.request
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Callable, Sequence

from .exactnum import require_int
from .motzkin import motzkin, motzkin_coeff, tilde_motzkin
from .report import Counterexample, VerificationReport
from .telephone import gen_telephone, telephone_coeff

__all__ = [
    "SequenceFixture",
    "BFileFormatError",
    "FetchError",
    "OfflineError",
    "Alignment",
    "ALIGNMENTS",
    "DEFAULT_BASE_URL",
    "validate_anumber",
    "parse_bfile",
    "render_bfile",
    "compare_prefix",
    "fetch_bfile",
    "load_fixture",
    "bundled_ids",
    "check_alignment",
]

DEFAULT_BASE_URL = "https://oeis.org"
_ANUM = re.compile(r"A\d{6}")


class BFileFormatError(ValueError):
    pass


class FetchError(RuntimeError):
    """Network or HTTP failure while fetching a b-file."""


class OfflineError(FetchError):
    pass


@dataclass(frozen=True)
class SequenceFixture:
    id: str
    offset: int
    terms: tuple[int, ...]

    def __post_init__(self):
        validate_anumber(self.id)
        if not self.terms:
            raise ValueError(f"{self.id}: fixture has no terms")

    @property
    def last_index(self) -> int:
        return self.offset + len(self.terms) - 1

    def term(self, index: int) -> int:
        return self.terms[index - self.offset]


def validate_anumber(anum: str) -> str:
    if not isinstance(anum, str) or not _ANUM.fullmatch(anum):
        raise ValueError(f"not an OEIS A-number: {anum!r}")
    return anum


def parse_bfile(text: str, anum: str = "A000000") -> SequenceFixture:
    """Parse ``index value`` lines; ``#`` comments and blank lines are skipped."""
    offset = None
    terms: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileFormatError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileFormatError(f"line {lineno}: non-integer field in {raw!r}") from None
        if offset is None:
            offset = index
        elif index != offset + len(terms):
            raise BFileFormatError(
                f"line {lineno}: index {index} does not follow {offset + len(terms) - 1}"
            )
        terms.append(value)
    if offset is None:
        raise BFileFormatError("b-file contains no terms")
    return SequenceFixture(anum, offset, tuple(terms))


def render_bfile(fixture: SequenceFixture) -> str:
    lines = [f"# {fixture.id}"]
    lines += [f"{fixture.offset + i} {v}" for i, v in enumerate(fixture.terms)]
    return "\n".join(lines) + "\n"


def compare_prefix(
    fixture: SequenceFixture, computed: Sequence, computed_offset: int
) -> VerificationReport:
    """Exact term-by-term comparison over the overlapping index range."""
    lo = max(fixture.offset, computed_offset)
    hi = min(fixture.last_index, computed_offset + len(computed) - 1)
    if hi < lo:
        raise ValueError(
            f"{fixture.id}: no overlap between fixture indices "
            f"{fixture.offset}..{fixture.last_index} and computed indices "
            f"{computed_offset}..{computed_offset + len(computed) - 1}"
        )
    failed = 0
    first = None
    for i in range(lo, hi + 1):
        want, got = fixture.term(i), computed[i - computed_offset]
        if want != got:
            failed += 1
            if first is None:
                first = Counterexample({"index": i}, Fraction(want), Fraction(got))
    return VerificationReport(f"OEIS {fixture.id}", f"index {lo}..{hi}", hi - lo + 1, failed, first)


def fetch_bfile(
    anum: str, *, offline: bool = True, base_url: str | None = None, timeout: float = 30
) -> str:
    """Download the b-file body for ``anum``.

    Offline by default; pass ``offline=False`` to reach ``base_url`` (or
    ``$OEIS_BASE_URL``, or the public site).  Never falls back to a fixture.
    """
    validate_anumber(anum)
    if offline:
        raise OfflineError(f"offline mode: refusing to fetch {anum}")
    base = (base_url or os.environ.get("OEIS_BASE_URL") or DEFAULT_BASE_URL).rstrip("/")
    url = f"{base}/{anum}/b{anum[1:]}.txt"
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            return resp.read().decode("utf-8")
    except urllib.error.HTTPError as exc:
        raise FetchError(f"{url}: HTTP {exc.code}") from exc
    except (urllib.error.URLError, OSError) as exc:
        raise FetchError(f"{url}: {exc}") from exc


def _fixture_dir():
    return resources.files("umbral_motzkin") / "data" / "bfiles"


def bundled_ids() -> list[str]:
    return sorted(
        "A" + p.name[1:7] for p in _fixture_dir().iterdir() if re.fullmatch(r"b\d{6}\.txt", p.name)
    )


def load_fixture(anum: str) -> SequenceFixture:
    validate_anumber(anum)
    path = _fixture_dir() / f"b{anum[1:]}.txt"
    if not path.is_file():
        raise FileNotFoundError(f"no bundled fixture for {anum}")
    return parse_bfile(path.read_text(), anum)


# -- family to OEIS alignment ------------------------------------------------


@dataclass(frozen=True)
class Alignment:
    """How a computed family lines up with an OEIS sequence.

    ``compute(count)`` returns the family values starting at ``first``; the
    value computed at position ``first + i`` is compared with the OEIS term at
    index ``first + i + shift``, after multiplying the OEIS term by ``scale``.
    """

    anum: str
    against: str
    first: int
    shift: int
    scale: int
    compute: Callable[[int], list[int]]
    note: str = ""


def _family_alignments() -> dict[str, Alignment]:
    def col(fn, s):
        return lambda count: [fn(n, s) for n in range(s, s + count)]

    def tilde(q):
        return lambda count: [
            require_int(tilde_motzkin(n, q), f"tilde m_{n}^({q})") for n in range(count)
        ]

    def gen(m):
        return lambda count: [gen_telephone(n, m) for n in range(count)]

    table = [
        Alignment("A001006", "motzkin", 0, 0, 1, lambda c: [motzkin(n) for n in range(c)]),
        Alignment("A000217", "motzkin-col:s=2", 2, -1, 1, col(motzkin_coeff, 2),
                  "m_{n,2} = A000217(n-1)"),
        Alignment("A034827", "motzkin-col:s=4", 4, 0, 1, col(motzkin_coeff, 4)),
        Alignment("A000910", "motzkin-col:s=6", 6, 0, 1, col(motzkin_coeff, 6)),
        Alignment("A014531", "tilde-motzkin:q=2", 0, 0, 1, tilde(2)),
        Alignment("A014532", "tilde-motzkin:q=3", 0, 0, 1, tilde(3)),
        Alignment("A050534", "telephone-col:s=4", 4, -1, 1, col(telephone_coeff, 4),
                  "t_{n,4} = A050534(n-1)"),
        Alignment("A000910", "telephone-col:s=6", 6, 0, 3, col(telephone_coeff, 6),
                  "t_{n,6} = 3*A000910(n)"),
        Alignment("A001470", "gen-telephone:m=3", 0, 0, 1, gen(3)),
        Alignment("A118934", "gen-telephone:m=4", 0, 0, 1, gen(4)),
    ]
    return {a.against: a for a in table}


ALIGNMENTS: dict[str, Alignment] = _family_alignments()


def check_alignment(
    alignment: Alignment, fixture: SequenceFixture | None = None, extra: int = 5
) -> VerificationReport:
    """Compare a computed family with its fixture over the full overlap.

    Computes ``extra`` terms past the end of the fixture so the overlap is
    bounded by the fixture rather than by the computation.
    """
    fixture = fixture or load_fixture(alignment.anum)
    if fixture.id != alignment.anum:
        raise ValueError(f"alignment is for {alignment.anum}, fixture is {fixture.id}")
    # computed index space -> OEIS index space
    start = alignment.first + alignment.shift
    count = max(fixture.last_index - start + 1 + extra, 1)
    computed = alignment.compute(count)
    scaled = SequenceFixture(fixture.id, fixture.offset, tuple(alignment.scale * t for t in fixture.terms))
    report = compare_prefix(scaled, computed, start)
    label = f"{alignment.against} vs {'%d*' % alignment.scale if alignment.scale != 1 else ''}{fixture.id}"
    return VerificationReport(label, report.range, report.checked, report.failed, report.counterexample)
