"""Command-line front end.

    umbral-motzkin seq motzkin --max 7
    umbral-motzkin triangle telephone --max 7 --format csv
    umbral-motzkin series GF-MOTZKIN --order 10
    umbral-motzkin verify all
    umbral-motzkin oeis check A014531 --against tilde-motzkin:q=2

Exit status: 0 on success, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import render
from .exactnum import parse_rational
from .hermite import hermite_shift_poly
from .identities import IDENTITY_TAGS, verify_all, verify_identity
from .motzkin import (
    assoc_motzkin,
    hybrid_gf_series,
    hybrid_poly,
    motzkin,
    motzkin_egf_series,
    motzkin_shift_gf_series,
    motzkin_triangle,
    tilde_motzkin,
)
from .oeis import (
    ALIGNMENTS,
    FetchError,
    check_alignment,
    fetch_bfile,
    load_fixture,
    parse_bfile,
    validate_anumber,
)
from .powerseries import polynomial, ps_exp, ps_mul
from .telephone import gen_telephone, gen_telephone_gf_series, telephone, telephone_as_triangle

SEQ_FAMILIES = ("motzkin", "assoc-motzkin", "tilde-motzkin", "hybrid", "telephone", "gen-telephone")
SERIES_TAGS = ("GF-HYBRID", "GF-MOTZKIN", "GF-MOTZKIN-SHIFT", "GF-HERMITE-SHIFT", "TEL-GF")


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nat(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbral-motzkin",
        description="Exact Motzkin, associated Motzkin and telephone number computations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print the first terms of a sequence")
    p.add_argument("family", type=str.lower, choices=SEQ_FAMILIES)
    p.add_argument("--max", type=_nat, default=10, help="last index (inclusive)")
    p.add_argument("--q", type=_nat, default=None, help="order of the associated numbers")
    p.add_argument("--m", type=_nat, default=3, help="order of the generalised telephone numbers")
    p.add_argument("--x", type=_rational, default=1)
    p.add_argument("--y", type=_rational, default=1)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("triangle", help="render a coefficient triangle")
    p.add_argument("family", type=str.lower, choices=("motzkin", "telephone"))
    p.add_argument("--max", type=_nat, default=7)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p = sub.add_parser("series", help="dump a generating function as a truncated series")
    p.add_argument("tag", type=str.upper, choices=SERIES_TAGS)
    p.add_argument("--order", type=_nat, default=24)
    p.add_argument("--q", type=_nat, default=1)
    p.add_argument("--l", type=_nat, default=0)
    p.add_argument("--m", type=_nat, default=2)
    p.add_argument("--x", type=_rational, default=1)
    p.add_argument("--y", type=_rational, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="check identities exactly")
    p.add_argument("tag", type=str.upper, choices=(*IDENTITY_TAGS, "ALL"), metavar="TAG|all")
    p.add_argument("--min", dest="n_min", type=_nat, default=None)
    p.add_argument("--max", dest="n_max", type=_nat, default=None)
    p.add_argument("--order", type=_nat, default=None)
    p.add_argument("--q-max", dest="q_max", type=_nat, default=None)
    p.add_argument("--l-max", dest="l_max", type=_nat, default=None)
    p.add_argument("--m", dest="m_values", type=_nat, action="append", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("oeis", help="compare against OEIS b-files")
    osub = p.add_subparsers(dest="oeis_command", required=True)
    c = osub.add_parser("check", help="compare a family with a b-file")
    c.add_argument("anum")
    c.add_argument("--against", default=None, help="family name, e.g. tilde-motzkin:q=2")
    _offline_flags(c)
    c.add_argument("--format", choices=("text", "json"), default="text")
    f = osub.add_parser("fetch", help="download a b-file")
    f.add_argument("anum")
    f.add_argument("-o", "--output", type=Path, default=None)
    _offline_flags(f)
    osub.add_parser("list", help="list known family/OEIS alignments")
    return parser


def _offline_flags(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--offline", dest="offline", action="store_true", default=True,
                   help="use bundled fixtures only (default)")
    g.add_argument("--online", dest="offline", action="store_false",
                   help="fetch from $OEIS_BASE_URL or oeis.org")


def _cmd_seq(args, parser) -> int:
    idx = range(args.max + 1)
    fam = args.family
    params = {"family": fam, "max": args.max}
    if fam == "motzkin":
        values = [motzkin(n) for n in idx]
    elif fam in ("assoc-motzkin", "tilde-motzkin", "hybrid"):
        q = args.q if args.q is not None else (1 if fam == "hybrid" else 2)
        params["q"] = q
        if fam == "assoc-motzkin":
            values = [assoc_motzkin(n, q) for n in idx]
        elif fam == "tilde-motzkin":
            values = [tilde_motzkin(n, q) for n in idx]
        else:
            params.update(x=str(args.x), y=str(args.y))
            values = [hybrid_poly(n, q, args.x, args.y) for n in idx]
    elif fam == "telephone":
        values = [telephone(n) for n in idx]
    else:
        if args.m < 2:
            parser.error("--m must be >= 2")
        params["m"] = args.m
        values = [gen_telephone(n, args.m) for n in idx]

    if args.format == "json":
        sys.stdout.write(render.sequence_json(values, params))
    elif args.format == "csv":
        sys.stdout.write(render.sequence_csv(values))
    else:
        sys.stdout.write(render.sequence_text(values))
    return 0


def _cmd_triangle(args, parser) -> int:
    tri = motzkin_triangle(args.max) if args.family == "motzkin" else telephone_as_triangle(args.max)
    out = {"table": render.triangle_table, "csv": render.triangle_csv, "json": render.triangle_json}
    sys.stdout.write(out[args.format](tri))
    return 0


def _cmd_series(args, parser) -> int:
    tag, order = args.tag, args.order
    params = {"tag": tag, "order": order}
    if tag == "GF-HYBRID":
        s = hybrid_gf_series(args.q, args.x, args.y, order)
        params.update(q=args.q, x=str(args.x), y=str(args.y))
    elif tag == "GF-MOTZKIN":
        s = motzkin_egf_series(order)
    elif tag == "GF-MOTZKIN-SHIFT":
        s = motzkin_shift_gf_series(args.l, order)
        params["l"] = args.l
    elif tag == "GF-HERMITE-SHIFT":
        s = ps_mul(
            hermite_shift_poly(args.l, args.x, args.y, order),
            ps_exp(polynomial([0, args.x, args.y], order)),
        )
        params.update(l=args.l, x=str(args.x), y=str(args.y))
    else:
        if args.m < 2:
            parser.error("--m must be >= 2")
        s = gen_telephone_gf_series(args.m, order)
        params["m"] = args.m
    if args.format == "json":
        sys.stdout.write(render.series_json(s, params))
    else:
        sys.stdout.write(render.series_text(s))
    return 0


def _cmd_verify(args, parser) -> int:
    ranges = {
        "n_min": args.n_min,
        "n_max": args.n_max,
        "order": args.order,
        "q_max": args.q_max,
        "l_max": args.l_max,
        "m_values": tuple(args.m_values) if args.m_values else None,
    }
    if args.m_values and min(args.m_values) < 2:
        parser.error("--m must be >= 2")
    try:
        if args.tag == "ALL":
            reports = verify_all(**ranges)
        else:
            reports = [verify_identity(args.tag, **ranges)]
    except ValueError as exc:
        parser.error(str(exc))
    _emit_reports(reports, {"tag": args.tag, **{k: v for k, v in ranges.items() if v is not None}}, args)
    return 0 if all(r.passed for r in reports) else 1


def _emit_reports(reports, params, args, noun="identities"):
    if args.format == "json":
        sys.stdout.write(render.reports_json(reports, params))
        return
    for r in reports:
        print(r.summary())
    if len(reports) > 1:
        ok = sum(r.passed for r in reports)
        print(f"{ok}/{len(reports)} {noun} pass")


def _cmd_oeis(args, parser) -> int:
    if args.oeis_command == "list":
        for a in ALIGNMENTS.values():
            extra = f"  ({a.note})" if a.note else ""
            print(f"{a.anum}  {a.against}{extra}")
        return 0
    try:
        anum = validate_anumber(args.anum.upper())
    except ValueError as exc:
        parser.error(str(exc))

    if args.oeis_command == "fetch":
        try:
            text = fetch_bfile(anum, offline=args.offline)
        except FetchError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        if args.output:
            args.output.write_text(text)
        else:
            sys.stdout.write(text)
        return 0

    if args.against is not None:
        alignment = ALIGNMENTS.get(args.against.lower())
        if alignment is None:
            parser.error(f"unknown family {args.against!r}; see 'oeis list'")
        if alignment.anum != anum:
            parser.error(f"{args.against} is aligned with {alignment.anum}, not {anum}")
        alignments = [alignment]
    else:
        alignments = [a for a in ALIGNMENTS.values() if a.anum == anum]
        if not alignments:
            parser.error(f"no family is aligned with {anum}; pass --against or see 'oeis list'")

    try:
        if args.offline:
            fixture = load_fixture(anum)
        else:
            fixture = parse_bfile(fetch_bfile(anum, offline=False), anum)
    except (FetchError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    reports = [check_alignment(a, fixture) for a in alignments]
    _emit_reports(reports, {"anum": anum, "offline": args.offline}, args, noun="alignments")
    return 0 if all(r.passed for r in reports) else 1


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "seq": _cmd_seq,
        "triangle": _cmd_triangle,
        "series": _cmd_series,
        "verify": _cmd_verify,
        "oeis": _cmd_oeis,
    }
    try:
        return handlers[args.command](args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
