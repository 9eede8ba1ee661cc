"""Text, CSV and JSON renderings of triangles, sequences and reports."""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .exactnum import format_rational, parse_rational
from .motzkin import Triangle
from .powerseries import Series, egf_coeff
from .report import VerificationReport

__all__ = [
    "triangle_table",
    "triangle_csv",
    "parse_triangle_csv",
    "triangle_json",
    "sequence_text",
    "sequence_csv",
    "sequence_json",
    "series_text",
    "series_json",
    "reports_json",
    "parse_values",
]


def triangle_table(tri: Triangle) -> str:
    """Printed-table grid: entries above the diagonal are blank, zeros print as 0."""
    n_max = tri.n_max
    cells = [[str(v) for v in row] + [""] * (n_max - n) for n, row in enumerate(tri.rows)]
    width = max([len(str(n_max)), *(len(c) for row in cells for c in row)])
    sum_w = max(len("sum"), *(len(str(s)) for s in tri.row_sums))
    label = "n\\s"
    n_w = max(len(label), len(str(n_max)))
    header = f"{label:>{n_w}} | " + " ".join(f"{s:>{width}}" for s in range(n_max + 1))
    header += f" | {'sum':>{sum_w}}"
    lines = [header, "-" * len(header)]
    for n, row in enumerate(cells):
        body = " ".join(f"{c:>{width}}" for c in row)
        lines.append(f"{n:>{n_w}} | {body} | {tri.row_sums[n]:>{sum_w}}")
    return "\n".join(lines) + "\n"


def triangle_csv(tri: Triangle) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", *range(tri.n_max + 1), "total"])
    for n, row in enumerate(tri.rows):
        w.writerow([n, *row, *([""] * (tri.n_max - n)), tri.row_sums[n]])
    return buf.getvalue()


def parse_triangle_csv(text: str, name: str = "triangle") -> Triangle:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header[0] != "n" or header[-1] != "total":
        raise ValueError("triangle CSV must have columns n, 0..N, total")
    rows, sums = [], []
    for record in reader:
        if not record:
            continue
        n = int(record[0])
        if n != len(rows):
            raise ValueError(f"row {n} out of order")
        entries = record[1:-1]
        if any(entries[n + 1 :]):
            raise ValueError(f"row {n} has entries above the diagonal")
        rows.append(tuple(int(v) for v in entries[: n + 1]))
        sums.append(int(record[-1]))
    return Triangle(name, tuple(rows), tuple(sums))


def triangle_json(tri: Triangle) -> str:
    doc = {
        "kind": "triangle",
        "params": {"family": tri.name, "max": tri.n_max},
        "rows": [
            {"n": n, "coeffs": [str(v) for v in row], "total": str(tri.row_sums[n])}
            for n, row in enumerate(tri.rows)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def sequence_text(values: Sequence) -> str:
    return " ".join(format_rational(v) for v in values) + "\n"


def sequence_csv(values: Sequence, offset: int = 0) -> str:
    lines = ["n,value"] + [f"{offset + i},{format_rational(v)}" for i, v in enumerate(values)]
    return "\n".join(lines) + "\n"


def sequence_json(values: Sequence, params: dict, offset: int = 0) -> str:
    doc = {
        "kind": "sequence",
        "params": {**params, "offset": offset},
        "values": [format_rational(v) for v in values],
    }
    return json.dumps(doc, indent=2) + "\n"


def series_text(series: Series) -> str:
    lines = ["k coeff egf"]
    for k in range(series.order + 1):
        lines.append(f"{k} {format_rational(series[k])} {format_rational(egf_coeff(series, k))}")
    return "\n".join(lines) + "\n"


def series_json(series: Series, params: dict) -> str:
    doc = {
        "kind": "series",
        "params": params,
        "values": [format_rational(c) for c in series],
        "egf": [format_rational(egf_coeff(series, k)) for k in range(series.order + 1)],
    }
    return json.dumps(doc, indent=2) + "\n"


def reports_json(reports: Sequence[VerificationReport], params: dict) -> str:
    doc = {
        "kind": "report",
        "params": params,
        "result": {
            "passed": all(r.passed for r in reports),
            "reports": [r.to_json() for r in reports],
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_values(text: str) -> list:
    """Inverse of :func:`sequence_text`."""
    return [parse_rational(tok) for tok in text.split()]
