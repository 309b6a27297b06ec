"""Command-line front door.

Exit codes: 0 success, 1 law failure (or unexpected demo outcome), 2 parse or
usage error, 3 unsupported symbol, 4 expansion/decomposition precondition
failure.
"""
from __future__ import annotations

import argparse
import os
import random
import sys

from .algebra import (ComplexRationalField, PrimeField, ProductStructure, QuaternionField,
                      RationalField, Structure, UnsupportedSymbol, unit_regular_witness)
from .finite import (DecompositionError, FiniteInversionStructure, NotDistinctlyRegular,
                     NotSkewMeadow, NotStronglyRegular, RingTableError, InversionTableError,
                     TableFormatError, decompose, expand_distinctly_regular,
                     expand_strongly_regular, from_structure, read_table,
                     verify_unique_inverse, write_table)
from .laws import Exhaustive, Grid, Random, get_suite, run_suite
from .matrix import Matrix2, MatrixRing, inv_matrix
from .terms import ParseError, evaluate, normalize, parse

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_PRECONDITION = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def parse_structure(selector: str) -> Structure:
    """q0 | c0 | h0 | m2q0 | fp:<p> | prod:<sel>,<sel>,... | table:<path>"""
    if selector.startswith("table:"):
        path = selector[len("table:"):]
        if not path:
            raise UsageError("table: selector needs a path")
        return _read(path)
    if selector.startswith("prod:"):
        parts = selector[len("prod:"):].split(",")
        if len(parts) < 1 or not all(parts):
            raise UsageError(f"bad product selector {selector!r}")
        factors = []
        for part in parts:
            if part.startswith(("prod:", "table:")):
                raise UsageError(f"product factors must be simple structures, got {part!r}")
            factors.append(parse_structure(part))
        return ProductStructure(factors)
    simple = {"q0": RationalField, "c0": ComplexRationalField, "h0": QuaternionField,
              "m2q0": MatrixRing}
    if selector in simple:
        return simple[selector]()
    if selector.startswith("fp:"):
        digits = selector[3:]
        if not digits.isdigit():
            raise UsageError(f"bad prime in {selector!r}")
        try:
            return PrimeField(int(digits))
        except ValueError as err:
            raise UsageError(str(err)) from None
    raise UsageError(f"unknown structure {selector!r}")


def _read(path):
    try:
        return read_table(path)
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror or err}") from None
    except (TableFormatError, RingTableError, InversionTableError) as err:
        raise UsageError(f"{path}: {err}") from None


def _emit(args, text: str) -> None:
    print(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


# --------------------------------------------------------------------------
# commands


def cmd_eval(args) -> int:
    s = parse_structure(args.structure or "q0")
    value = evaluate(parse(args.expr), s)
    _emit(args, s.render(value))
    return EXIT_OK


def cmd_normalize(args) -> int:
    _emit(args, str(normalize(parse(args.expr))))
    return EXIT_OK


def _mode(args, s: Structure):
    if args.exhaustive and args.grid is not None:
        raise UsageError("--exhaustive and --grid are mutually exclusive")
    if args.grid is not None:
        if not isinstance(s, MatrixRing):
            raise UsageError("--grid applies to m2q0 only")
        if args.grid < 1:
            raise UsageError("--grid needs a positive bound")
        return Grid(args.grid)
    if args.exhaustive:
        if not s.finite:
            raise UsageError(f"{s.name} is infinite; --exhaustive needs a finite structure")
        return Exhaustive()
    if s.finite and args.samples is None:
        return Exhaustive()
    return Random(seed=args.seed, samples=10_000 if args.samples is None else args.samples,
                  bound=args.bound)


def cmd_check(args) -> int:
    if not args.structure:
        raise UsageError("check needs --structure")
    try:
        suite = get_suite(args.suite)
    except KeyError as err:
        raise UsageError(err.args[0]) from None
    s = parse_structure(args.structure)
    report = run_suite(suite, s, _mode(args, s), workers=args.workers)
    _emit(args, report.porcelain() if args.porcelain else report.table())
    ok = report.passed != args.expect_fail
    return EXIT_OK if ok else EXIT_FAIL


def _suites_passed(s: FiniteInversionStructure) -> list:
    names = []
    for name in ("RU", "SkMd", "IR", "PCIR", "DerivedProps"):
        if run_suite(get_suite(name), s, Exhaustive()).passed:
            names.append(name)
    return names


def cmd_expand(args) -> int:
    s = _read(args.table)
    try:
        if args.flavor == "strong":
            out = expand_strongly_regular(s)
        else:
            out = expand_distinctly_regular(s)
    except NotStronglyRegular as err:
        print(f"error: {err}", file=sys.stderr)
        print(f"witness x={err.witness}")
        return EXIT_PRECONDITION
    except NotDistinctlyRegular as err:
        print(f"error: {err}", file=sys.stderr)
        cands = " ".join(map(str, sorted(err.candidates))) or "none"
        print(f"witness x={err.witness} candidates={cands}")
        return EXIT_PRECONDITION
    target = args.output or args.table + ".inv"
    write_table(target, out)
    print("inv " + " ".join(map(str, out.inv_table)))
    passed = _suites_passed(out)
    print("passed: " + (" ".join(passed) if passed else "none"))
    print(f"wrote {target}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    s = _read(args.table)
    try:
        d = decompose(s)
    except (NotSkewMeadow, DecompositionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PRECONDITION
    lines = ["factors: " + " ".join(map(str, d.orders()))]
    lines += [f"atom {e} -> order {f.n}" for e, f in zip(d.atoms, d.factors)]
    for x in range(s.n):
        lines.append(f"{s.render(x)} -> ({', '.join(map(str, d.embed(x)))})")
    if args.output:
        os.makedirs(args.output, exist_ok=True)
        for i, f in enumerate(d.factors):
            path = os.path.join(args.output, f"factor{i}.table")
            write_table(path, f)
            lines.append(f"wrote {path}")
    print("\n".join(lines))
    return EXIT_OK


# --------------------------------------------------------------------------
# demos


def _demo_matrix(args) -> int:
    s = MatrixRing()
    out = []
    expected = True

    def show(label, value):
        out.append(f"{label} = {value}")
        return value

    e21 = show("e21", Matrix2.of([[0, 0], [1, 0]]))
    ie21 = show("inv(e21)", inv_matrix(e21))
    show("e21*e21", e21 * e21)
    ril = show("e21*(e21*inv(e21))", e21 * (e21 * ie21))
    ril_fails = ril != e21
    pil = show("e21*(inv(e21)*e21)", e21 * (ie21 * e21))
    out.append(f"Ril at e21: {'fails' if ril_fails else 'holds'} (expected to fail)")
    out.append(f"Pil at e21: {'holds' if pil == e21 else 'fails'} (expected to hold)")
    expected &= ril_fails and pil == e21

    p = show("P", Matrix2.of([[1, 0], [1, 0]]))
    pp = show("P*P", p * p)
    ip = show("inv(P)", inv_matrix(p))
    ip2 = show("inv(P)*inv(P)", ip * ip)
    out.append(f"P idempotent: {'yes' if pp == p else 'no'}")
    out.append(f"inv(P) idempotent: {'yes' if ip2 == ip else 'no'} (expected no)")
    lhs = show("inv(P*P)", s.inv(pp))
    pc_fails = lhs != ip2
    out.append(f"inv(P*P) vs inv(P)*inv(P): pseudo-commutativity at (P, P) {'fails' if pc_fails else 'holds'} (expected to fail)")
    expected &= pp == p and ip == Matrix2.of([["1/2", "1/2"], [0, 0]]) and ip2 != ip and pc_fails
    out.append("result: " + ("expected outcome observed" if expected else "UNEXPECTED outcome"))
    _emit(args, "\n".join(out))
    return EXIT_OK if expected else EXIT_FAIL


def _demo_unit_regular(args) -> int:
    s = parse_structure(args.structure or "q0")
    s.require({"inv"})
    rng = random.Random(args.seed)
    xs = [s.zero, s.one]
    if s.finite:
        xs = list(s.elements())
    else:
        xs += [s.random_element(rng, args.bound) for _ in range(args.samples or 5)]
    out = [f"structure {s.name}: y = Z(x) + inv(x), y' = Z(x) + x"]
    ok = True
    for x in xs:
        y, y2 = unit_regular_witness(s, x)
        xyx, yy2 = s.mul(s.mul(x, y), x), s.mul(y, y2)
        good = s.eq(xyx, x) and s.eq(yy2, s.one)
        ok &= good
        out.append(f"x = {s.render(x)}; y = {s.render(y)}; y' = {s.render(y2)}; "
                   f"x*y*x = {s.render(xyx)}; y*y' = {s.render(yy2)}  {'ok' if good else 'FAIL'}")
    out.append("result: " + ("x*y*x = x and y*y' = 1 for every sample" if ok else "UNEXPECTED outcome"))
    _emit(args, "\n".join(out))
    return EXIT_OK if ok else EXIT_FAIL


def _demo_uniqueness(args) -> int:
    if args.structure:
        s = parse_structure(args.structure)
        if not isinstance(s, FiniteInversionStructure):
            if not s.finite:
                raise UsageError("uniqueness demo needs a finite structure")
            s.require({"inv"})
            s = from_structure(s)
    else:
        s = from_structure(PrimeField(7))
    out = [f"structure {s.name} of order {s.n}",
           "inv " + " ".join(map(str, s.inv_table)),
           "claim: if (x*y*x = x or x*x*y = x) and (y*x*y = y or y*y*x = y) then y = inv(x)"]
    report = verify_unique_inverse(s)
    out.append(str(report))
    out.append("result: " + ("every inverse candidate is inv(x)" if report.passed else "UNEXPECTED outcome"))
    _emit(args, "\n".join(out))
    return EXIT_OK if report.passed != args.expect_fail else EXIT_FAIL


DEMOS = {"matrix-counterexample": _demo_matrix, "unit-regular": _demo_unit_regular,
         "uniqueness": _demo_uniqueness}


def cmd_demo(args) -> int:
    return DEMOS[args.name](args)


# --------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--structure", help="q0 | c0 | h0 | fp:<p> | prod:<sel>,... | m2q0 | table:<path>")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--bound", type=int, default=100)
    common.add_argument("--exhaustive", action="store_true")
    common.add_argument("--grid", type=int, default=None, metavar="N")
    common.add_argument("--porcelain", action="store_true", help="machine-readable LAW lines")
    common.add_argument("--output", metavar="PATH")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--expect-fail", action="store_true",
                        help="invert the expected outcome (negative controls)")

    parser = _Parser(prog="skewmeadow", description="Exact skew meadow and inversion ring toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate a closed term")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("normalize", parents=[common], help="canonical form of a pure meadow term")
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("check", parents=[common], help="run a law suite")
    p.add_argument("--suite", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("expand", parents=[common], help="expand a finite ring table with an inverse")
    p.add_argument("table")
    p.add_argument("--flavor", choices=("strong", "distinct"), default="strong")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("decompose", parents=[common], help="embed a finite skew meadow in a product of fields")
    p.add_argument("table")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("demo", parents=[common], help="narrated worked examples")
    p.add_argument("name", choices=sorted(DEMOS))
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.samples is not None and args.samples < 1:
            raise UsageError("--samples must be positive")
        if args.workers < 1:
            raise UsageError("--workers must be positive")
        return args.func(args)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedSymbol as err:
        print(f"unsupported: {err}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except RecursionError:
        print("parse error: expression nested too deeply", file=sys.stderr)
        return EXIT_USAGE
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
