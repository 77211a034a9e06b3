"""Command line front end.

Subcommands:

* ``eval`` - evaluate an arithmetic/set expression under a representation
* ``convert`` - re-render a value between formats and representations
* ``selftest`` - run the oracle-backed property suite
* ``bench`` - time the representations against each other

Exit codes: 0 success, 1 selftest property failure, 2 syntax error,
3 domain error, 4 resource-limit error. Results go to stdout, one-line
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import replace

from . import expr, selftest, textio
from .core import DEFAULT_LIMITS, Limits, Numeral, convert
from .errors import DomainError, ParseError, ResourceLimitError
from .interpretations import (
    BigNat,
    Hfs,
    Peano,
    REPRESENTATIONS,
    node_count,
    singleton_chain,
)

EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_SYNTAX = 2
EXIT_DOMAIN = 3
EXIT_RESOURCE = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polynat",
        description=(
            "Arithmetic and finite-set calculus over interchangeable "
            "number representations."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_guards(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--max-exp",
            type=int,
            default=DEFAULT_LIMITS.max_exponent,
            metavar="N",
            help="exponent/iteration guard for exp2, ^, powset, ordinal",
        )
        p.add_argument(
            "--max-powset",
            type=int,
            default=DEFAULT_LIMITS.max_powerset_elems,
            metavar="N",
            help="largest base-set size accepted by powset",
        )

    pe = sub.add_parser("eval", help="evaluate an expression")
    pe.add_argument("expression")
    pe.add_argument(
        "--repr",
        dest="representation",
        choices=sorted(REPRESENTATIONS),
        default="bignat",
    )
    pe.add_argument("--show", choices=textio.FORMATS, default="decimal")
    add_guards(pe)

    pc = sub.add_parser("convert", help="re-render a value")
    pc.add_argument("value")
    pc.add_argument(
        "--from",
        dest="source_format",
        choices=("auto",) + textio.FORMATS,
        default="auto",
    )
    pc.add_argument("--to", dest="target_format", choices=textio.FORMATS,
                    required=True)
    pc.add_argument(
        "--repr",
        dest="representation",
        choices=sorted(REPRESENTATIONS),
        default="bignat",
        help="carrier representation for the conversion",
    )
    add_guards(pc)

    ps = sub.add_parser("selftest", help="run the property suite")
    ps.add_argument("--bound", type=int, default=256, metavar="N")

    pb = sub.add_parser("bench", help="time the representations")
    pb.add_argument(
        "scenario", choices=("succ-chain", "add-mul-grid", "tower-succ")
    )
    pb.add_argument(
        "--n",
        type=int,
        default=None,
        metavar="N",
        help="scenario size (chain length or grid bound)",
    )
    return parser


def _limits_from(args: argparse.Namespace) -> Limits:
    return replace(
        DEFAULT_LIMITS,
        max_exponent=args.max_exp,
        max_powerset_elems=args.max_powset,
    )


def _cmd_eval(args: argparse.Namespace) -> int:
    limits = _limits_from(args)
    target = REPRESENTATIONS[args.representation]
    node = expr.parse_expression(args.expression)
    result = expr.evaluate(node, target, limits)
    if isinstance(result, bool):
        print("true" if result else "false")
    else:
        print(textio.print_value(result, args.show, limits))
    return EXIT_OK


def _cmd_convert(args: argparse.Namespace) -> int:
    limits = _limits_from(args)
    carrier = REPRESENTATIONS[args.representation]
    fmt = args.source_format
    if fmt == "auto":
        fmt = textio.detect_format(args.value)
    value = textio.parse_value(args.value, fmt, carrier, limits)
    print(textio.print_value(value, args.target_format, limits))
    return EXIT_OK


def _cmd_selftest(args: argparse.Namespace) -> int:
    results = selftest.run_suite(selftest.SuiteConfig(bound=args.bound))
    for res in results:
        print(res.line())
    failed = [r for r in results if not r.ok]
    print(
        f"{len(results) - len(failed)}/{len(results)} properties passed "
        f"(bound={args.bound})"
    )
    return EXIT_SELFTEST_FAILED if failed else EXIT_OK


# ----------------------------------------------------------------------
# bench
# ----------------------------------------------------------------------

_PEANO_CHAIN_CAP = 1500
_PEANO_GRID_CAP = 16


def _timed(fn) -> "tuple[float, object]":
    start = time.perf_counter()
    out = fn()
    return time.perf_counter() - start, out


def _print_table(rows: "list[tuple[str, str, str]]") -> None:
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))


def _bench_succ_chain(n: int) -> None:
    rows = [("representation", "time", "note")]
    for name, cls in REPRESENTATIONS.items():
        count = min(n, _PEANO_CHAIN_CAP) if cls is Peano else n
        def chain(cls=cls, count=count):
            v = cls.zero()
            for _ in range(count):
                v = v.succ()
            return v
        elapsed, _ = _timed(chain)
        note = f"capped at {count} steps" if count != n else f"{count} steps"
        rows.append((name, f"{elapsed:.4f}s", note))
    _print_table(rows)


def _bench_add_mul_grid(bound: int) -> None:
    rows = [("representation", "time", "note")]
    grids: "dict[str, dict[tuple[int, int], tuple[int, int]]]" = {}
    for name, cls in REPRESENTATIONS.items():
        top = min(bound, _PEANO_GRID_CAP) if cls is Peano else bound
        step = max(1, top // 32)
        points = list(range(0, top + 1, step))
        def grid(cls=cls, points=points):
            vals = {k: cls.from_int(k) for k in points}
            return {
                (x, y): (
                    selftest.as_int(vals[x].add(vals[y])),
                    selftest.as_int(vals[x].multiply(vals[y])),
                )
                for x in points
                for y in points
            }
        elapsed, table = _timed(grid)
        grids[name] = table
        note = f"{len(points)}x{len(points)} grid to {top}"
        rows.append((name, f"{elapsed:.4f}s", note))
    mismatches = 0
    for name, table in grids.items():
        for (x, y), (s, p) in table.items():
            if s != x + y or p != x * y:
                mismatches += 1
    _print_table(rows)
    print(f"cross-check against machine arithmetic: {mismatches} mismatches")


def _bench_tower_succ() -> None:
    rows = [("representation", "time", "note")]
    chain = singleton_chain(9)
    elapsed, result = _timed(chain.succ)
    okay = result == Hfs((Hfs.zero(), singleton_chain(8)))
    rows.append(
        (
            "hfs",
            f"{elapsed:.6f}s",
            f"{node_count(chain)}-node tower; structural result "
            f"{'verified' if okay else 'WRONG'}",
        )
    )
    for name in ("peano", "bitstack", "bignat"):
        rows.append((name, "-", "skipped: magnitude guard"))
    _print_table(rows)
    print(
        "the decimal magnitude of this successor is a tower of exponents "
        "and is not materializable in any positional representation"
    )


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.scenario == "succ-chain":
        _bench_succ_chain(args.n or 10_000)
    elif args.scenario == "add-mul-grid":
        _bench_add_mul_grid(args.n or 128)
    else:
        _bench_tower_succ()
    return EXIT_OK


def main(argv: "list[str] | None" = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "eval": _cmd_eval,
        "convert": _cmd_convert,
        "selftest": _cmd_selftest,
        "bench": _cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
