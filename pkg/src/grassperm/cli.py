"""
Command-line front end.

Subcommands:

- ``count``      one exact value (word counts, parity splits, class counts,
                 fixed points, grand totals)
- ``table``      CSV/JSON dumps of the (k, m) grids and class tables
- ``enumerate``  list avoiding words, avoider permutations, or Dyck paths
- ``biject``     trace the word <-> path constructions on one input
- ``verify``     run the verification suites against the oracles

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain or
cap error.  All output is deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classes, core, counting, oracle, parity, paths, patterns, series, verify
from .errors import DomainError

COUNT_QUANTITIES = (
    "B",
    "A",
    "O",
    "E",
    "bigrass",
    "bigrass-odd",
    "invol",
    "invol-odd",
    "fixed",
    "total-words",
    "total-perms",
    "total-odd",
)

ENUMERATE_CAPS = {"words": oracle.WORD_CAP, "avoiders": 14, "dyck": 12}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grassperm",
        description="Count, enumerate, and cross-verify Grassmannian "
        "permutations avoiding an increasing pattern.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print one exact count")
    p_count.add_argument("--quantity", required=True, choices=COUNT_QUANTITIES)
    p_count.add_argument("--k", type=int)
    p_count.add_argument("--m", type=int)
    p_count.add_argument("--n", type=int)
    p_count.add_argument("--j", type=int)

    p_table = sub.add_parser("table", help="dump a table as CSV or JSON")
    p_table.add_argument(
        "--quantity", required=True, choices=("B", "A", "parity", "classes", "gf")
    )
    p_table.add_argument("--k-max", type=int, default=6)
    p_table.add_argument("--m-max", type=int, default=10)
    p_table.add_argument("--n-max", type=int, default=10)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")

    p_enum = sub.add_parser("enumerate", help="list combinatorial objects")
    enum_sub = p_enum.add_subparsers(dest="kind", required=True)
    e_words = enum_sub.add_parser("words", help="avoiding binary words")
    e_words.add_argument("--k", type=int, required=True)
    e_words.add_argument("--m", type=int, required=True)
    e_words.add_argument("--stats", choices=("inversions",))
    e_words.add_argument("--cap", type=int, default=ENUMERATE_CAPS["words"])
    e_avoid = enum_sub.add_parser("avoiders", help="avoider permutations")
    e_avoid.add_argument("--n", type=int, required=True)
    e_avoid.add_argument("--pattern", required=True)
    e_avoid.add_argument("--stats", choices=("inversions", "fixed-points"))
    e_avoid.add_argument("--cap", type=int, default=ENUMERATE_CAPS["avoiders"])
    e_dyck = enum_sub.add_parser("dyck", help="Dyck paths")
    e_dyck.add_argument("--n", type=int, required=True)
    e_dyck.add_argument("--stats", choices=("peaks",))
    e_dyck.add_argument("--cap", type=int, default=ENUMERATE_CAPS["dyck"])

    p_biject = sub.add_parser("biject", help="trace a bijection on one input")
    p_biject.add_argument(
        "map", choices=("word-to-dyck", "word-to-lattice", "toggle", "halve")
    )
    p_biject.add_argument("--k", type=int)
    p_biject.add_argument("--input", required=True)
    p_biject.add_argument("--svg", metavar="FILE", help="also write the output path as SVG")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument(
        "--suite",
        default="all",
        choices=("all",) + tuple(verify.SUITES),
    )
    p_verify.add_argument("--k-max", type=int, default=6)
    p_verify.add_argument("--perm-cap", type=int, default=9)
    p_verify.add_argument("--word-cap", type=int, default=20)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument(
        "--inject-fault",
        metavar="K,M",
        help="testing aid: flip one cell of the recurrence table",
    )
    return parser


def _require(parser: argparse.ArgumentParser, args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join(f"--{n}" for n in missing)
        parser.error(f"--quantity {args.quantity} requires {flags}")


def _cmd_count(parser: argparse.ArgumentParser, args) -> int:
    q = args.quantity
    if q in ("B", "A", "O", "E"):
        _require(parser, args, "k", "m")
        fn = {
            "B": counting.avoiding_word_count,
            "A": counting.avoiding_word_count_alternating,
            "O": parity.odd_word_count,
            "E": parity.even_word_count,
        }[q]
        value = fn(args.k, args.m)
    elif q in ("bigrass", "bigrass-odd", "invol", "invol-odd"):
        _require(parser, args, "m")
        total_fn, avoider_fn = {
            "bigrass": (classes.bigrassmannian_count, classes.bigrassmannian_avoider_count),
            "bigrass-odd": (
                classes.odd_bigrassmannian_count,
                classes.odd_bigrassmannian_avoider_count,
            ),
            "invol": (classes.involution_count, classes.involution_avoider_count),
            "invol-odd": (
                classes.odd_involution_count,
                classes.odd_involution_avoider_count,
            ),
        }[q]
        value = total_fn(args.m) if args.k is None else avoider_fn(args.k, args.m)
    elif q == "fixed":
        _require(parser, args, "n", "k")
        value = counting.fixed_point_count(args.n, args.k)
    elif q == "total-words":
        _require(parser, args, "k")
        if args.j is None:
            value = counting.total_avoiding_words(args.k)
        else:
            value = counting.avoiding_words_with_zeros(args.k, args.j)
    elif q == "total-perms":
        _require(parser, args, "k")
        value = counting.total_avoiding_perms(args.k)
    else:  # total-odd
        _require(parser, args, "k")
        value = parity.total_odd_avoiders(args.k)
    print(value)
    return 0


def _table_rows(args) -> tuple[list[str], list[tuple]]:
    q = args.quantity
    if q in ("B", "A"):
        fn = (
            counting.avoiding_word_count
            if q == "B"
            else counting.avoiding_word_count_alternating
        )
        return ["k", "m", "value"], [
            (k, m, fn(k, m))
            for k in range(1, args.k_max + 1)
            for m in range(2 * k - 1)
        ]
    if q == "parity":
        return ["k", "m", "B", "O", "E"], [
            (
                k,
                m,
                counting.avoiding_word_count(k, m),
                parity.odd_word_count(k, m),
                parity.even_word_count(k, m),
            )
            for k in range(1, args.k_max + 1)
            for m in range(2 * k - 1)
        ]
    if q == "classes":
        fns = {
            "bigrass": classes.bigrassmannian_count,
            "bigrass_odd": classes.odd_bigrassmannian_count,
            "invol": classes.involution_count,
            "invol_odd": classes.odd_involution_count,
        }
        return ["class", "m", "value"], [
            (name, m, fn(m))
            for name, fn in fns.items()
            for m in range(args.m_max + 1)
        ]
    # gf
    return ["n", "i", "count"], series.inversion_table(args.n_max).rows()


def _cmd_table(args) -> int:
    header, rows = _table_rows(args)
    if args.format == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(str(v) for v in row))
    else:
        print(json.dumps([dict(zip(header, row)) for row in rows], indent=None))
    return 0


def _with_stat(line: str, stats: str | None, value) -> str:
    return line if stats is None else f"{line} {stats}={value}"


def _cmd_enumerate(args) -> int:
    if args.kind == "words":
        if args.m > args.cap:
            raise DomainError(f"word length {args.m} over cap {args.cap}")
        for w in patterns.enumerate_avoiding_words(args.k, args.m):
            print(_with_stat(w, args.stats, core.inversion_count(w)))
    elif args.kind == "avoiders":
        if args.n > args.cap:
            raise DomainError(f"size {args.n} over cap {args.cap}")
        pattern = core.perm_from_str(args.pattern)
        for p in patterns.enumerate_avoiders(args.n, pattern):
            if args.stats == "fixed-points":
                stat = len(core.fixed_points(p))
            else:
                stat = core.inversion_count(core.canonical_word(p))
            print(_with_stat(core.perm_to_str(p), args.stats, stat))
    else:  # dyck
        if args.n > args.cap:
            raise DomainError(f"semilength {args.n} over cap {args.cap}")
        for p in paths.enumerate_dyck(args.n):
            print(_with_stat(p, args.stats, len(paths.peaks(p))))
    return 0


def _format_a_sequence(a: tuple[int, ...]) -> str:
    return ",".join(str(x) for x in a)


def _cmd_biject(parser: argparse.ArgumentParser, args) -> int:
    out_path = None
    if args.map == "word-to-dyck":
        if args.k is None:
            parser.error("word-to-dyck requires --k")
        w = core.check_word(args.input)
        out_path = paths.word_to_dyck(args.k, w)
        print(f"word={w}")
        print(f"a={_format_a_sequence(core.a_sequence(w))}")
        print(f"dyck={out_path}")
        print(f"peak_sum={paths.first_last_peak_sum(out_path)}")
    elif args.map == "word-to-lattice":
        if args.k is None:
            parser.error("word-to-lattice requires --k")
        w = core.check_word(args.input)
        lp = paths.word_to_lattice(args.k, w)
        out_path = lp.steps
        print(f"word={w}")
        print(f"a={_format_a_sequence(core.a_sequence(w))}")
        print(f"lattice={lp.steps}")
        print(f"floor={lp.floor}")
        try:
            i, kind, height = paths.find_first_floor_parity_extremum(lp)
            partner = paths.toggle_lattice_path(lp)
            print(f"toggle_position={i + 1} toggle_kind={kind} toggle_height={height}")
            print(f"toggle={partner.steps}")
            print(f"toggle_word={paths.lattice_to_word(partner)}")
        except DomainError:
            print("toggle=none (no peak or valley at floor parity)")
    elif args.map == "toggle":
        steps = paths.check_steps(args.input)
        if args.k is not None:
            lp = paths.LatticePath(steps, args.k)
            run_seq = paths.lattice_run_sequence(lp)
            i, kind, height = paths.find_first_floor_parity_extremum(lp)
            out_path = paths.toggle_lattice_path(lp).steps
        else:
            run_seq = paths.dyck_run_sequence(steps)
            i, kind, height = paths.find_first_even_extremum(steps)
            out_path = paths.toggle_first_even_extremum(steps)
        print(f"path={steps}")
        print(f"a={_format_a_sequence(run_seq)}")
        print(f"position={i + 1} kind={kind} height={height}")
        print(f"toggled={out_path}")
    else:  # halve
        out_path = paths.halve_all_odd_path(args.input)
        print(f"path={args.input}")
        print(f"a={_format_a_sequence(paths.dyck_run_sequence(args.input))}")
        print(f"halved={out_path}")
    if args.svg and out_path is not None:
        floor = 0
        if args.map == "word-to-lattice":
            floor = paths.LatticePath(out_path, args.k).floor
        with open(args.svg, "w", encoding="ascii") as fh:
            fh.write(paths.path_svg(out_path, floor))
        print(f"svg={args.svg}")
    return 0


def _parse_fault(parser: argparse.ArgumentParser, raw: str | None):
    if raw is None:
        return None
    try:
        k, m = (int(tok) for tok in raw.split(","))
    except ValueError:
        parser.error("--inject-fault expects K,M")
    return (k, m)


def _cmd_verify(parser: argparse.ArgumentParser, args) -> int:
    opts = verify.Options(
        k_max=args.k_max,
        perm_cap=args.perm_cap,
        word_cap=args.word_cap,
        fault=_parse_fault(parser, args.inject_fault),
    )
    names = None if args.suite == "all" else [args.suite]
    results = verify.run_suites(names, opts)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "suite": r.suite,
                        "checks": [
                            {
                                "name": c.name,
                                "params": c.params,
                                "expected": c.expected,
                                "actual": c.actual,
                                "pass": c.passed,
                            }
                            for c in r.checks
                        ],
                    }
                    for r in results
                ]
            )
        )
    else:
        for r in results:
            for c in r.checks:
                status = "PASS" if c.passed else "FAIL"
                line = f"{status} {r.suite}.{c.name} {c.actual}/{c.expected} cells"
                mismatch = c.params.get("first_mismatch")
                if mismatch is not None:
                    where = " ".join(
                        f"{key}={val}"
                        for key, val in mismatch.items()
                        if key not in ("expected", "actual")
                    )
                    line += (
                        f" (first mismatch at {where}: expected "
                        f"{mismatch['expected']}, actual {mismatch['actual']})"
                    )
                print(line)
        total = sum(len(r.checks) for r in results)
        bad = sum(1 for r in results for c in r.checks if not c.passed)
        print(f"{total - bad}/{total} checks passed")
    return 0 if all(r.passed for r in results) else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            return _cmd_count(parser, args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "biject":
            return _cmd_biject(parser, args)
        return _cmd_verify(parser, args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
