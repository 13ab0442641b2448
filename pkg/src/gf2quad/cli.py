"""Command-line interface: table generation, solving, verification, benchmarks.

All values cross the CLI boundary as hex integers: polynomials with bit
i holding the coefficient of x^i, elements by their basis index.  JSON
output round-trips through the documented schemas; exit status is 0 on
success, 1 when a solve finds no roots (or verification fails), 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import baselines, solver, verifysuite
from .errors import NotIrreducibleError, RangeError
from .field import default_modulus, field_new, parse_hex, poly_hex


class CliError(Exception):
    pass


def _parse_field(args):
    if args.modulus is not None:
        modulus = _parse_hex_arg(args.modulus, "--modulus")
        if modulus.bit_length() != args.m + 1:
            raise CliError(f"--modulus must have degree m={args.m} "
                           f"(m+1 = {args.m + 1} bits), got {args.modulus}")
    else:
        modulus = default_modulus(args.m)
    return field_new(args.m, modulus)


def _parse_hex_arg(text, flag):
    try:
        value = parse_hex(text)
    except ValueError:
        raise CliError(f"{flag} expects a hex integer, got {text!r}")
    if value < 0:
        raise CliError(f"{flag} must be non-negative")
    return value


def _parse_element(field, text, flag):
    value = _parse_hex_arg(text, flag)
    if value >= field.order:
        raise CliError(f"{flag}={text} does not fit in {field.m} bits")
    return field.element(value)


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_tables(args) -> int:
    field = _parse_field(args)
    tables = solver.build_tables(field)
    if args.format == "json":
        _emit(args, json.dumps(solver.tables_to_dict(tables), indent=2))
        return 0
    m = field.m
    product = tables.transform @ tables.quad_matrix
    criterion_bits = [j for j in range(m) if (tables.criterion_row >> j) & 1]
    criterion = " ^ ".join(f"b{j}(c)" for j in criterion_bits) or "0"
    lines = [
        f"GF(2^{m}), modulus {poly_hex(field.modulus)}",
        f"zero row (ell*): {tables.zero_row}",
        "P =",
        tables.transform.render(),
        "(0 | I0) = P @ B =",
        product.render(),
        f"solvability criterion (row {tables.zero_row} of P): {criterion} == 0",
    ]
    _emit(args, "\n".join(lines))
    return 0


def cmd_solve(args) -> int:
    field = _parse_field(args)
    reduced = args.c is not None
    general = any(v is not None for v in (args.a, args.b, args.d))
    if reduced == general:
        raise CliError("give either --c (reduced mode) or all of --a --b --d")

    if reduced:
        c = _parse_element(field, args.c, "--c")
        tables = solver.build_tables(field)
        outcome, cost = solver.solve_with_cost(tables, c)
        payload = {
            "m": field.m,
            "modulus_hex": poly_hex(field.modulus),
            "mode": "reduced",
            "c": poly_hex(c.index),
            "solvable": outcome.solvable,
            "syndrome": poly_hex(outcome.syndrome),
            "roots": ([poly_hex(r.index) for r in outcome.roots]
                      if outcome.solvable else []),
            "cost": {"sequential_xors": cost.sequential_xors,
                     "depth": cost.depth,
                     "columns_summed": cost.columns_summed},
        }
        if args.format == "json":
            _emit(args, json.dumps(payload, indent=2))
        elif outcome.solvable:
            _emit(args, "\n".join([
                f"x^2 + x + {poly_hex(c.index)} over GF(2^{field.m}): solvable",
                f"roots: {payload['roots'][0]} {payload['roots'][1]}",
                f"syndrome: {payload['syndrome']}",
                f"cost: {cost.sequential_xors} XORs sequential, depth {cost.depth}, "
                f"{cost.columns_summed} columns summed",
            ]))
        else:
            _emit(args, "\n".join([
                f"x^2 + x + {poly_hex(c.index)} over GF(2^{field.m}): no roots",
                f"syndrome: {payload['syndrome']}",
                f"cost: {cost.sequential_xors} XORs sequential, depth {cost.depth}, "
                f"{cost.columns_summed} columns summed",
            ]))
        return 0 if outcome.solvable else 1

    if args.a is None or args.b is None or args.d is None:
        raise CliError("general mode needs all of --a --b --d")
    a = _parse_element(field, args.a, "--a")
    b = _parse_element(field, args.b, "--b")
    d = _parse_element(field, args.d, "--d")
    outcome = solver.solve_general(field, a, b, d)
    payload = {
        "m": field.m,
        "modulus_hex": poly_hex(field.modulus),
        "mode": "general",
        "a": poly_hex(a.index), "b": poly_hex(b.index), "d": poly_hex(d.index),
        "kind": outcome.kind.value,
        "roots": [poly_hex(r.index) for r in outcome.roots],
    }
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    else:
        desc = {"all_elements": "every field element is a root",
                "no_roots": "no roots",
                "single": "single root",
                "double": "double root",
                "pair": "two roots"}[outcome.kind.value]
        roots = " ".join(payload["roots"])
        _emit(args, f"{poly_hex(a.index)}*y^2 + {poly_hex(b.index)}*y + "
                    f"{poly_hex(d.index)} over GF(2^{field.m}): {desc}"
                    + (f": {roots}" if roots else ""))
    return 1 if outcome.kind is solver.RootKind.NO_ROOTS else 0


def cmd_verify(args) -> int:
    ms = [args.m] if args.m is not None else None
    report = verifysuite.run_verify(ms=ms, exhaustive_limit=args.exhaustive_limit)
    if args.format == "json":
        _emit(args, json.dumps(report.to_dict(), indent=2))
    else:
        lines = [r.line() for r in report.results]
        n_fail = sum(1 for r in report.results if not r.passed)
        lines.append(f"suites: {len(report.results)}, failing: {n_fail}")
        _emit(args, "\n".join(lines))
    return 0 if report.all_passed else 1


def cmd_bench(args) -> int:
    field = _parse_field(args)
    rng = random.Random(args.seed)
    cs = [field.element(rng.randrange(field.order)) for _ in range(args.samples)]
    rows = baselines.compare_methods(field, cs)
    solvable = [c for c in cs if field.trace_int(c.index) == 0] or [field.zero]
    timing = baselines.time_solvers(field, solvable, repeats=args.repeats)
    for row in rows:
        if row.method in timing:
            row.ns_median = timing[row.method]
    payload = {"m": field.m, "rows": [r.to_dict() for r in rows]}
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
        return 0
    lines = [f"GF(2^{field.m}), modulus {poly_hex(field.modulus)}, "
             f"{len(cs)} sampled c values"]
    for r in rows:
        if not r.applicable:
            lines.append(f"  {r.method:<22} inapplicable" +
                         (f"  [{r.notes}]" if r.notes else ""))
            continue
        parts = []
        for label, val in (("adds", r.adds), ("muls", r.muls),
                           ("exps", r.exps), ("xors", r.xors)):
            if val is not None:
                parts.append(f"{label}={val}")
        if r.ns_median is not None:
            parts.append(f"ns/solve={r.ns_median:.0f}")
        lines.append(f"  {r.method:<22} " + " ".join(parts) +
                     (f"  [{r.notes}]" if r.notes else ""))
    _emit(args, "\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gf2quad",
        description="XOR-only solver for x^2 + x + c over GF(2^m), with "
                    "precomputed-table generation, verification suites, and "
                    "classical baselines.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, need_m=True):
        p.add_argument("--m", type=int, required=need_m,
                       help="extension degree (2..32)")
        p.add_argument("--modulus", help="modulus polynomial, hex, bit i = coeff of x^i")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write the report to a file instead of stdout")

    p = sub.add_parser("tables", help="print the precomputed (P, I0) pair")
    common(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("solve", help="solve a reduced or general quadratic")
    common(p)
    p.add_argument("--c", help="constant of x^2 + x + c (hex element index)")
    p.add_argument("--a", help="general mode: coefficient of y^2")
    p.add_argument("--b", help="general mode: coefficient of y")
    p.add_argument("--d", help="general mode: constant term")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run the exhaustive verification suites")
    p.add_argument("--m", type=int, help="verify a single degree only")
    p.add_argument("--exhaustive-limit", type=int, default=16,
                   help="largest degree verified exhaustively (default 16)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write the report to a file instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="compare method operation counts and timings")
    common(p)
    p.add_argument("--samples", type=int, default=8,
                   help="number of random c values (default 8)")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.add_argument("--repeats", type=int, default=32,
                   help="timing repetitions per method (default 32)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors with status 2
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (CliError, RangeError, NotIrreducibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
