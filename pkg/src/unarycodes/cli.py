"""Command-line front end.

Examples::

    unarycodes encode --scheme guc --n 8 --k 3 13
    unarycodes decode --scheme guc --n 8 --k 3 10000111
    unarycodes table --scheme fixed --n 7 --k 3 --format csv
    unarycodes distance --scheme guc --n 8 --k 3 --ref 1 --format csv
    unarycodes count-compare --k 3 --n-min 5 --n-max 12
    unarycodes verify --scheme guc --n 10 --k 4
"""

import argparse
import csv
import json
import sys

from . import analysis, codecs
from .bitword import word_from_text, word_to_text
from .codecs import CodecError, CodeParams, Scheme

FORMATS = ("text", "csv", "json")


class UsageError(Exception):
    pass


def _params(args) -> CodeParams:
    scheme = Scheme(args.scheme)
    if scheme is Scheme.INCREASING_K:
        if args.k is not None:
            raise UsageError("--k is not accepted for scheme 'increasing'")
    elif args.k is None:
        raise UsageError(f"--k is required for scheme {scheme.value!r}")
    params = CodeParams(args.n, args.k)
    codecs.validate_params(scheme, params)
    return params


def _emit(rows, columns, fmt, out):
    """Write ``rows`` (tuples matching ``columns``) in the requested format."""
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
    elif fmt == "json":
        json.dump([dict(zip(columns, row)) for row in rows], out)
        out.write("\n")
    else:
        for row in rows:
            out.write("\t".join(str(x) for x in row) + "\n")


def cmd_encode(args, out):
    scheme = Scheme(args.scheme)
    w = codecs.encode(scheme, _params(args), args.value)
    out.write(word_to_text(w) + "\n")
    return 0


def cmd_decode(args, out):
    scheme = Scheme(args.scheme)
    params = _params(args)
    try:
        w = word_from_text(args.bits)
    except ValueError as exc:
        raise codecs.InvalidCodeword(str(exc)) from None
    out.write(f"{codecs.decode(scheme, params, w)}\n")
    return 0


def cmd_table(args, out):
    scheme = Scheme(args.scheme)
    rows = analysis.enumerate_table(scheme, _params(args))
    _emit(rows, ("value", "code"), args.format, out)
    return 0


def cmd_distance(args, out):
    scheme = Scheme(args.scheme)
    records = analysis.distance_profile(scheme, _params(args), args.ref)
    _emit([(r.n2, r.distance) for r in records], ("n2", "distance"), args.format, out)
    return 0


def cmd_count_compare(args, out):
    records = analysis.count_comparison(args.k, args.n_min, args.n_max)
    rows = [(r.n, r.fixed_k_count, r.guc_count) for r in records]
    _emit(rows, ("n", "fixed_k_count", "guc_count"), args.format, out)
    return 0


def cmd_verify(args, out):
    scheme = Scheme(args.scheme)
    report = analysis.verify_scheme(scheme, _params(args))
    out.write(report.summary() + "\n")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unarycodes",
        description="Generalized unary codes: encode, decode, tables and analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def scheme_args(p):
        p.add_argument("--scheme", required=True, choices=[s.value for s in Scheme])
        p.add_argument("--n", type=int, required=True, help="codeword width in bits")
        p.add_argument("--k", type=int, help="size of the 1-block (fixed and guc only)")

    def format_arg(p, default="text"):
        p.add_argument("--format", choices=FORMATS, default=default)

    p = sub.add_parser("encode", help="print the codeword for a value")
    scheme_args(p)
    p.add_argument("value", type=int)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="print the value of a codeword")
    scheme_args(p)
    p.add_argument("bits", help="codeword, MSB first")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("table", help="print the full code table")
    scheme_args(p)
    format_arg(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("distance", help="Hamming distances from a reference value")
    scheme_args(p)
    p.add_argument("--ref", type=int, required=True, help="reference value n1")
    format_arg(p, default="csv")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("count-compare", help="fixed-k vs guc counts over a range of n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    format_arg(p, default="csv")
    p.set_defaults(func=cmd_count_compare)

    p = sub.add_parser("verify", help="exhaustively check a code (n <= 24)")
    scheme_args(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except codecs.InvalidCodeword as exc:
        err.write(f"error: invalid codeword: {exc}\n")
    except (CodecError, UsageError) as exc:
        err.write(f"error: {exc}\n")
    return 2


if __name__ == "__main__":
    sys.exit(main())
