"""Command-line front end.

Exit status: 0 ok, 1 usage error, 2 data error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys

from . import census
from .codec import DTCodeError, dt_to_gauss, parse_gauss, serialize_gauss
from .engine import DEFAULT_BUDGET, BranchBudgetExceeded, NoMgonError, minimal_genus_states
from .invariants import crosscap_from_state
from .oracle import DEFAULT_BOUND, OracleInconsistencyError, brute_force_invariants

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_MISMATCH = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _records(args):
    if args.fixture:
        return census.load_fixture(args.fixture)
    if not args.input:
        raise _UsageError("one of --input or --fixture is required")
    return census.ingest_csv(args.input)


def _report_ingest(recs) -> bool:
    for line, msg in recs.errors:
        _err(f"line {line}: {msg}")
    return bool(recs.errors)


def cmd_compute(args) -> int:
    try:
        g = dt_to_gauss(args.dt) if args.dt else parse_gauss(args.gauss)
    except ValueError as exc:
        _err(f"invalid input: {exc}")
        return EXIT_DATA
    c = g.crossing_count
    if c < 2:
        _err("need at least 2 crossings")
        return EXIT_DATA
    try:
        res = minimal_genus_states(g, budget=args.budget, best_only=not args.leaves)
    except (NoMgonError, BranchBudgetExceeded) as exc:
        _err(str(exc))
        return EXIT_DATA
    rep = crosscap_from_state(c, res.best)
    print(f"gauss: {serialize_gauss(g)}")
    print(f"c: {rep.crossing_count}")
    print(f"s: {rep.circle_count}")
    print(f"unoriented genus: {rep.unoriented_genus}")
    print(f"crosscap number: {rep.crosscap}")
    print(f"state code: {rep.witness}")
    print(f"simple: {str(rep.simple).lower()}")
    print(f"bipartite: {str(rep.bipartite).lower()}")
    print(f"branches: {res.branch_count}")
    if args.leaves:
        for leaf in res.all_leaves:
            print(f"leaf: {len(leaf)} {leaf}")
    return EXIT_OK


def cmd_batch(args) -> int:
    recs = _records(args)
    bad = _report_ingest(recs)
    rows = census.process_batch(recs, jobs=args.jobs, budget=args.budget)
    for r in rows:
        if not r.ok:
            _err(f"{r.name}: {r.error}")
            bad = True
    try:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            n = census.emit_csv(rows, fh)
    except OSError as exc:
        _err(f"cannot write {args.output}: {exc}")
        return EXIT_DATA
    print(f"wrote {n} rows to {args.output}")
    return EXIT_DATA if bad else EXIT_OK


def _results(args):
    return census.read_results(args.input)


def cmd_summarize(args) -> int:
    table = census.summarize(_results(args))
    print(census.render_summary(table), end="")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            census.summary_csv(table, fh)
    return EXIT_OK


def cmd_defect(args) -> int:
    table = census.defect_report(_results(args))
    print(census.render_defects(table), end="")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            census.defects_csv(table, fh)
    if args.fit:
        lo, hi = args.fit_range or (min(table), max(table))
        pts = [(c, row.proportion) for c, row in table.items() if lo <= c <= hi and row.total > 0]
        try:
            amp, rate = census.fit_exponential_decay(pts)
        except ValueError as exc:
            _err(f"fit failed: {exc}")
            return EXIT_DATA
        print(f"fit over {len(pts)} points: proportion ~ {amp:.4f} * exp(-{rate:.4f} c)")
        print(f"amplitude: {amp:.6f}")
        print(f"rate: {rate:.6f}")
    return EXIT_OK


def cmd_verify(args) -> int:
    recs = _records(args)
    bad_input = _report_ingest(recs)
    checked = mismatched = 0
    for r in recs:
        c = r.gauss.crossing_count
        if c > args.max_crossings or c < 2:
            continue
        checked += 1
        try:
            res = minimal_genus_states(r.gauss, budget=args.budget, best_only=True)
            eng = crosscap_from_state(c, res.best)
            ora = brute_force_invariants(r.gauss, bound=args.bound)
        except OracleInconsistencyError as exc:
            _err(f"{r.name}: {exc}")
            mismatched += 1
            continue
        except (NoMgonError, BranchBudgetExceeded, ValueError) as exc:
            _err(f"{r.name}: {exc}")
            bad_input = True
            continue
        got = (eng.circle_count, eng.unoriented_genus, eng.crosscap)
        want = (ora.circle_count, ora.unoriented_genus, ora.crosscap)
        if got != want:
            mismatched += 1
            _err(f"{r.name}: engine (s, genus, crosscap) = {got}, oracle = {want}")
    print(f"checked {checked} codes with c <= {args.max_crossings}: {mismatched} mismatches")
    if mismatched:
        return EXIT_MISMATCH
    return EXIT_DATA if bad_input else EXIT_OK


def cmd_convert(args) -> int:
    try:
        print(serialize_gauss(dt_to_gauss(args.dt)))
    except DTCodeError as exc:
        _err(f"invalid DT code: {exc}")
        return EXIT_DATA
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stategenus", description="Unoriented genus and crosscap number of alternating links.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    sp = sub.add_parser("compute", help="invariants of one Gauss code")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--gauss", help='unsigned Gauss code, e.g. "[[1,2,3,1,2,3]]"')
    src.add_argument("--dt", help='knot DT code, e.g. "4 6 2"')
    sp.add_argument("--leaves", action="store_true", help="also list every terminal state")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_compute)

    def census_input(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--input", help="CSV with a name column and 'Gauss Code'")
        g.add_argument("--fixture", choices=["knots", "links"], help="use a bundled census")

    sp = sub.add_parser("batch", help="run a census CSV")
    census_input(sp)
    sp.add_argument("--output", required=True)
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    sp.add_argument("--best-only", action="store_true", help="accepted for compatibility; rows only use the best state")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_batch)

    sp = sub.add_parser("summarize", help="distribution table from a results CSV")
    sp.add_argument("--input", required=True)
    sp.add_argument("--csv", help="also write the table as CSV")
    sp.set_defaults(func=cmd_summarize)

    sp = sub.add_parser("defect", help="crosscap > genus counts from a results CSV")
    sp.add_argument("--input", required=True)
    sp.add_argument("--csv", help="also write the table as CSV")
    sp.add_argument("--fit", action="store_true", help="fit an exponential decay to the proportions")
    sp.add_argument("--fit-range", type=int, nargs=2, metavar=("LO", "HI"))
    sp.set_defaults(func=cmd_defect)

    sp = sub.add_parser("verify", help="cross-check the engine against exhaustive enumeration")
    census_input(sp)
    sp.add_argument("--max-crossings", type=int, default=10)
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("convert", help="DT code to Gauss code")
    sp.add_argument("--dt", required=True)
    sp.set_defaults(func=cmd_convert)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify" and args.max_crossings > args.bound:
            raise _UsageError(f"--max-crossings {args.max_crossings} exceeds --bound {args.bound}")
        return args.func(args)
    except _UsageError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except census.IngestError as exc:
        _err(str(exc))
        return EXIT_DATA
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
