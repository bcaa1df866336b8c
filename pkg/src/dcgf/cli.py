"""Command-line interface.

Exit codes: 0 success, 1 runtime or evaluation failure, 2 usage error,
3 no classifier match.  Reports go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import dsl
from .errors import DCGFError, DSLSyntaxError, InvalidSpecError, SampleTooShortError
from .families import T6_CONVENTION, FamilySpec, Kind, build_series
from .fit import SearchBounds, SequenceSample, classify
from .io_oeis import compare, fixture_path, load_fixture, read_bfile
from .mahler import (
    check_equation,
    equation_for_family,
    parse_equation,
    two_pow_e0_series,
)
from .recurrence import e0, e1, eval_recurrence, family_recurrence
from .series import TruncatedSeries
from .tworational import eval_linear_rep, rep_for_affine

EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, EXIT_NO_MATCH = 0, 1, 2, 3

FAMILY_NAMES = {
    "t1": Kind.T1,
    "t2": Kind.T2,
    "t3": Kind.T3,
    "t4": Kind.T4,
    "t5": Kind.T5,
    "t6": Kind.T6,
    "ones-count": Kind.ONES_COUNT,
    "zeros-count": Kind.ZEROS_COUNT,
    "thue-morse": Kind.THUE_MORSE,
    "ruler-plus-one": Kind.RULER_PLUS_ONE,
}

ORACLES = {
    "two-pow-e0": two_pow_e0_series,
    "ones-count": lambda n: TruncatedSeries(tuple(e1(i) for i in range(n))),
    "zeros-count": lambda n: TruncatedSeries(tuple(e0(i) for i in range(n))),
    "thue-morse": lambda n: TruncatedSeries(tuple((-1) ** e1(i) for i in range(n))),
}

BUNDLED_EQUATIONS = ("ones-count", "thue-morse", "two-pow-e0")

T6_NOTE = "T6 convention: regularized (each summand minus 1, so a_0 = 0)"


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _range(text):
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected a range like 0..8, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if hi <= lo:
        raise argparse.ArgumentTypeError("range is empty")
    return range(lo, hi)


def _add_family_args(p, required=False):
    p.add_argument("--family", choices=sorted(FAMILY_NAMES), required=required)
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--tail", type=_int_list, default=[], help="c_1,...,c_D for t5/t6")


def _spec(args) -> FamilySpec:
    try:
        return FamilySpec(FAMILY_NAMES[args.family], c=args.c, alpha=args.alpha, d=args.d, tail=tuple(args.tail))
    except InvalidSpecError as exc:
        raise UsageError(str(exc)) from None


def _emit(values, fmt, offset=0):
    if fmt == "csv":
        print(",".join(str(v) for v in values))
    else:
        for j, v in enumerate(values):
            print(f"{offset + j} {v}")


def cmd_gen(args):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if (args.expr is None) == (args.family is None):
        raise UsageError("give exactly one of --family or --expr")
    if args.expr is not None:
        if args.via == "rec":
            raise UsageError("--via rec needs --family")
        try:
            expr = dsl.parse(args.expr)
        except DSLSyntaxError as exc:
            raise UsageError(str(exc)) from None
        values = dsl.evaluate(expr, args.n).tolist()
    else:
        spec = _spec(args)
        if args.via == "gf":
            values = build_series(spec, args.n, t6_convention=T6_CONVENTION).tolist()
        else:
            values = eval_recurrence(family_recurrence(spec), args.n)
    _emit(values, args.format)
    return EXIT_OK


def cmd_verify(args):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    spec = _spec(args)
    ok = True
    print(f"family: {spec}")
    if spec.theorem_equivalent().kind is Kind.T6:
        print(T6_NOTE)
    series = build_series(spec, args.n, t6_convention=T6_CONVENTION)
    rec = eval_recurrence(family_recurrence(spec), args.n)
    result = compare(_sample(series.tolist()), rec, 0)
    if result:
        print(f"series vs recurrence: PASS ({args.n} terms)")
    else:
        ok = False
        print(
            f"series vs recurrence: FAIL at n={result.index}: "
            f"series {result.expected}, recurrence {result.actual}"
        )
    check = check_equation(equation_for_family(spec), series)
    print(f"functional equation: {check}")
    ok = ok and check.passed
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_RUNTIME


def _sample(values, offset=0):
    return SequenceSample(offset, tuple(values))


def _load_sample(source):
    path = Path(source)
    if path.is_file():
        return read_bfile(path)
    if re.fullmatch(r"[Aa]\d{6}", source):
        return load_fixture(source)
    raise FileNotFoundError(f"no such file: {source}")


def cmd_classify(args):
    try:
        sample = _load_sample(args.source)
    except (OSError, DCGFError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    if args.terms:
        sample = sample.head(args.terms)
    bounds = SearchBounds(
        c=args.max_c, alpha=args.max_alpha, d=args.max_d, max_depth=args.max_depth, tail=args.max_tail
    )
    try:
        report = classify(sample, bounds)
    except SampleTooShortError as exc:
        raise UsageError(str(exc)) from None
    if not report.matches:
        print("no match in bounds")
        return EXIT_NO_MATCH
    for m in report.matches:
        print(m)
    return EXIT_OK


def _load_equation(source):
    if source in BUNDLED_EQUATIONS:
        text = fixture_path(f"equations/{source}.eq").read_text(encoding="utf-8")
    else:
        text = Path(source).read_text(encoding="utf-8")
    return parse_equation(text)


def cmd_mahler(args):
    try:
        eq = _load_equation(args.equation)
    except (OSError, DCGFError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    sources = [x is not None for x in (args.family, args.expr, args.oracle, args.bfile)]
    if sum(sources) != 1:
        raise UsageError("give exactly one series source: --family, --expr, --oracle or --bfile")
    if args.family:
        series = build_series(_spec(args), args.n, t6_convention=T6_CONVENTION)
    elif args.expr:
        series = dsl.evaluate(args.expr, args.n)
    elif args.oracle:
        series = ORACLES[args.oracle](args.n)
    else:
        sample = read_bfile(args.bfile)
        if sample.offset != 0:
            print("error: a series b-file must start at index 0", file=sys.stderr)
            return EXIT_RUNTIME
        series = TruncatedSeries(sample.values[: args.n])
    result = check_equation(eq, series)
    print(result)
    return EXIT_OK if result.passed else EXIT_RUNTIME


def cmd_tworat(args):
    if args.alpha == 0:
        raise UsageError("T4 requires |alpha|>0, got alpha=0")
    rep = rep_for_affine(args.alpha, args.c, args.d)
    values = [eval_linear_rep(rep, n) for n in args.range]
    _emit(values, "bfile", args.range.start)
    if args.check:
        rec = eval_recurrence(family_recurrence(FamilySpec.t4(args.alpha, args.c, args.d)), args.range.stop)
        result = compare(_sample(values, args.range.start), rec, 0)
        print(result if not result else "PASS")
        return EXIT_OK if result else EXIT_RUNTIME
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="dcgf", description="Divide-and-conquer generating functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print coefficients of a family or DSL expression")
    _add_family_args(p)
    p.add_argument("--expr", help="DSL expression, e.g. 'prod(k){1 - z^(2^k)}'")
    p.add_argument("--n", type=int, default=64)
    p.add_argument("--via", choices=("gf", "rec"), default="gf")
    p.add_argument("--format", choices=("bfile", "csv"), default="bfile")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check series against recurrence and functional equation")
    _add_family_args(p, required=True)
    p.add_argument("--n", type=int, default=64)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="fit a b-file to the families")
    p.add_argument("source", help="b-file path, or an A-number of a bundled fixture")
    p.add_argument("--terms", type=int, default=0, help="use only the first TERMS values")
    defaults = SearchBounds()
    p.add_argument("--max-c", type=int, default=defaults.c)
    p.add_argument("--max-alpha", type=int, default=defaults.alpha)
    p.add_argument("--max-d", type=int, default=defaults.d)
    p.add_argument("--max-depth", type=int, default=defaults.max_depth)
    p.add_argument("--max-tail", type=int, default=defaults.tail)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("mahler", help="check a functional equation file against a series")
    p.add_argument("equation", help=f"equation file, or one of {', '.join(BUNDLED_EQUATIONS)}")
    _add_family_args(p)
    p.add_argument("--expr")
    p.add_argument("--oracle", choices=sorted(ORACLES))
    p.add_argument("--bfile")
    p.add_argument("--n", type=int, default=256)
    p.set_defaults(func=cmd_mahler)

    p = sub.add_parser("tworat", help="evaluate the 2-rational form of a T4 sequence")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--range", type=_range, default=range(0, 16), help="half-open, e.g. 0..8")
    p.add_argument("--check", action="store_true", help="compare with the T4 recurrence")
    p.set_defaults(func=cmd_tworat)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DCGFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
