"""Command-line interface.

Exit codes: 0 success or verified, 1 negative verdict or discrepancy,
2 usage error.  Records go to stdout, notes and diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import sys

from . import _kernels
from .bisector import NotIntegral, bisector_segments, integral_bisector_length, sub_triangle
from .family import (
    enumerate_bisector_family,
    enumerate_family,
    family_member,
    is_primitive,
    params_from_triangle,
)
from .oracle import NAIVE_LIMIT, compare
from .records import FORMATS, record_from_member, write_records
from .triangle import (
    Triangle,
    approx_angles_deg,
    classify,
    cosines,
    is_double_angle_triangle,
    satisfies_triangle_inequalities,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def _int_at_least(lo):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doubleangle",
        description="Integral triangles whose angle B is twice angle A.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p):
        p.add_argument("--max-perimeter", type=_int_at_least(1), required=True)
        p.add_argument("--primitive", action="store_true", help="only gcd(a, b, c) = 1")
        p.add_argument("--format", choices=FORMATS, default="csv")
        p.add_argument("--approx", action="store_true",
                       help="add approximate angles in degrees (display only)")

    add_output_flags(sub.add_parser("gen", help="enumerate the double-angle family"))
    add_output_flags(sub.add_parser(
        "gen-bisector", help="enumerate members whose bisector of B is integral"))

    for name, help_text in (("check", "analyse one triangle"),
                            ("invert", "print only the (l, k, m) parameters")):
        p = sub.add_parser(name, help=help_text)
        for side in ("a", "b", "c"):
            p.add_argument(side, type=_int_at_least(1))
        if name == "check":
            p.add_argument("--approx", action="store_true")

    p = sub.add_parser("oracle", help="compare enumeration against brute-force search")
    p.add_argument("--max-perimeter", type=_int_at_least(3), required=True)
    p.add_argument("--family", choices=("result1", "result2"), default="result1")
    p.add_argument("--naive", action="store_true",
                   help=f"use the cubic triple loop (max perimeter {NAIVE_LIMIT})")
    return parser


def cmd_gen(args, out, err):
    members = enumerate_family(args.max_perimeter, primitive_only=args.primitive)
    records = [record_from_member(fm, "l", args.approx) for fm in members]
    write_records(records, out, args.format, "l", args.approx)
    return EXIT_OK


def cmd_gen_bisector(args, out, err):
    if args.primitive:
        print("note: no member with integral bisector is primitive; "
              "gcd(a, b, c) = d*m and m >= 2", file=err)
    members = enumerate_bisector_family(args.max_perimeter, primitive_only=args.primitive)
    records = [record_from_member(fm, "d", args.approx) for fm in members]
    write_records(records, out, args.format, "d", args.approx)
    return EXIT_OK


def _yes(flag):
    return "yes" if flag else "no"


def cmd_check(args, out, err):
    t = Triangle(args.a, args.b, args.c)
    print(f"triangle (a, b, c) = {t.a} {t.b} {t.c}", file=out)
    if not satisfies_triangle_inequalities(t):
        print("degenerate: sides violate the triangle inequality", file=out)
        print("in family: no", file=out)
        return EXIT_NEGATIVE
    member = is_double_angle_triangle(t)
    print(f"in family: {_yes(member)}", file=out)
    if member:
        fm = family_member(t)
        l, k, m = fm.params  # noqa: E741
        print(f"params (l, k, m) = {l} {k} {m}", file=out)
        print(f"branch: {fm.branch.value}", file=out)
    print(f"primitive: {_yes(is_primitive(t))}", file=out)
    print(f"angle class: {classify(t).value}", file=out)
    cos = cosines(t)
    print(f"cos A = {cos.cos_a}  cos B = {cos.cos_b}  cos C = {cos.cos_c}", file=out)
    if getattr(args, "approx", False):
        angles = approx_angles_deg(t)
        print("angles (approximate, degrees): A = {:.3f}  B = {:.3f}  C = {:.3f}".format(*angles),
              file=out)
    seg = bisector_segments(t)
    print(f"bisector of B: |AD| = {seg.ad}  |DC| = {seg.dc}", file=out)
    if member:
        try:
            r = integral_bisector_length(t)
        except NotIntegral:
            print(f"bisector length r = {seg.ad} (not integral)", file=out)
        else:
            d = fm.params.l // fm.params.m
            print(f"bisector length r = {r} (integral)", file=out)
            print(f"bisector params (d, k, m) = {d} {fm.params.k} {fm.params.m}", file=out)
            s = sub_triangle(t)
            print(f"sub-triangle BDC (a, b, c) = {s.a} {s.b} {s.c}", file=out)
    return EXIT_OK if member else EXIT_NEGATIVE


def cmd_invert(args, out, err):
    t = Triangle(args.a, args.b, args.c)
    if not is_double_angle_triangle(t):
        print(f"{t.a} {t.b} {t.c}: not in family", file=err)
        return EXIT_NEGATIVE
    l, k, m = params_from_triangle(t)  # noqa: E741
    print(f"{l} {k} {m}", file=out)
    return EXIT_OK


def cmd_oracle(args, out, err):
    report = compare(args.max_perimeter, args.family, naive=args.naive)
    label = f"{args.family} max-perimeter {args.max_perimeter}"
    if report.verified:
        print(f"{label}: verified, {len(report.found)} members", file=out)
        return EXIT_OK
    print(f"{label}: DISCREPANCY ({len(report.found)} found by search)", file=out)
    for t in report.missing_from_parametric:
        print(f"missing from enumeration: {t.a} {t.b} {t.c}", file=out)
    for t in report.extra_in_parametric:
        print(f"extra in enumeration: {t.a} {t.b} {t.c}", file=out)
    return EXIT_NEGATIVE


COMMANDS = {
    "gen": cmd_gen,
    "gen-bisector": cmd_gen_bisector,
    "check": cmd_check,
    "invert": cmd_invert,
    "oracle": cmd_oracle,
}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "oracle":
        limit = NAIVE_LIMIT if args.naive else _kernels.SCAN_LIMIT
        if args.max_perimeter > limit:
            print(f"error: --max-perimeter must be <= {limit}", file=err)
            return EXIT_USAGE
    return COMMANDS[args.command](args, out, err)


if __name__ == "__main__":
    sys.exit(main())
