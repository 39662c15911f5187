"""Command-line interface exposing every capability of the package.

Data goes to stdout in the chosen format (text, csv, or json); diagnostics
go to stderr.  Exit codes: 0 success, 1 verification mismatch, 2 usage
error, 3 resource or network error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

from . import chains, classify, oeis, ramanujan, stats
from .engine import PrimeTable, build_table
from .errors import (BFileParseError, OeisUnavailableError, OutOfRangeError,
                     ResourceLimitError)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_DIRECTION_BY_FLAG = {"desc": chains.DESCENDING, "asc": chains.ASCENDING}

_OEIS_GENERATED = ("A104272", "A080359", "A006992", "A055496")


def _prime_upper_bound(count: int) -> int:
    """An x guaranteed to have at least `count` primes below it."""
    if count < 6:
        return 15
    log = math.log(count)
    return int(count * (log + math.log(log))) + 10


def _make_table(args: argparse.Namespace, needed_limit: int) -> PrimeTable:
    limit = args.table_limit if args.table_limit else max(needed_limit, 11)
    return build_table(limit, threads=args.threads)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.9f}"
    return str(value)


def _emit_rows(args: argparse.Namespace, columns: tuple[str, ...], rows: list[tuple]) -> None:
    out = sys.stdout
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(value) for value in row])
    elif args.format == "json":
        json.dump([dict(zip(columns, row)) for row in rows], out, indent=2)
        out.write("\n")
    else:
        cells = [[_cell(value) for value in row] for row in rows]
        widths = [max(len(name), *(len(row[i]) for row in cells)) if cells else len(name)
                  for i, name in enumerate(columns)]
        out.write("  ".join(name.ljust(width) for name, width in zip(columns, widths)).rstrip() + "\n")
        for row in cells:
            out.write("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() + "\n")


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def cmd_primes(args: argparse.Namespace) -> int:
    table = _make_table(args, max(args.limit, 11))
    values = table.primes_upto(max(args.limit, 0))
    rows = [(position + 1, int(value)) for position, value in enumerate(values)]
    _emit_rows(args, ("n", "p"), rows)
    return EXIT_OK


def _sequence_rows(values) -> list[tuple[int, int]]:
    return [(position + 1, int(value)) for position, value in enumerate(values)]


def cmd_ramanujan(args: argparse.Namespace) -> int:
    table = _make_table(args, _prime_upper_bound(3 * args.count))
    _emit_rows(args, ("n", "value"), _sequence_rows(ramanujan.ramanujan_primes(table, args.count)))
    return EXIT_OK


def cmd_labos(args: argparse.Namespace) -> int:
    table = _make_table(args, _prime_upper_bound(3 * args.count))
    _emit_rows(args, ("n", "value"), _sequence_rows(ramanujan.labos_primes(table, args.count)))
    return EXIT_OK


_SIDE_COLUMNS = {
    "right": ("p", "n", "right_class", "cond1", "cond2", "witness_right"),
    "left": ("p", "n", "left_class", "cond3", "cond4", "witness_left"),
    "both": classify.CSV_FIELDS,
}


def cmd_classify(args: argparse.Namespace) -> int:
    table = _make_table(args, max(2 * args.limit + 10_000, 100))
    records = classify.classify_range(table, args.limit)
    columns = _SIDE_COLUMNS[args.side]
    if args.format == "json":
        # JSON-lines, one object per prime, same field names as CSV.
        for record in records:
            payload = {name: getattr(record, name) for name in columns}
            sys.stdout.write(json.dumps(payload) + "\n")
        return EXIT_OK
    rows = [tuple(getattr(record, name) for name in columns) for record in records]
    _emit_rows(args, columns, rows)
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    direction = _DIRECTION_BY_FLAG[args.direction]
    table = _make_table(args, 4 * args.horizon)
    state = chains.family_sieve(table, args.horizon, direction)
    if args.format == "json":
        payload = {
            "horizon": state.horizon,
            "direction": state.direction,
            "seeds": state.seeds,
            "families": [{"seed": chain.seed, "direction": chain.direction,
                          "terms": chain.terms} for chain in state.families],
        }
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return EXIT_OK
    if args.format == "csv":
        rows = []
        for family_index, chain in enumerate(state.families, start=1):
            for position, term in enumerate(chain.terms, start=1):
                rows.append((family_index, chain.seed, position, term,
                             term <= state.horizon))
        _emit_rows(args, ("family", "seed", "position", "term", "within_horizon"), rows)
        return EXIT_OK
    out = sys.stdout
    out.write(f"horizon {state.horizon} ({state.direction}); "
              f"terms marked * exceed the horizon\n")
    out.write("seeds: " + " ".join(str(seed) for seed in state.seeds) + "\n")
    for family_index, chain in enumerate(state.families, start=1):
        rendered = " ".join(
            f"{term}*" if term > state.horizon else str(term) for term in chain.terms)
        out.write(f"  family {family_index} (seed {chain.seed}): {rendered}\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem == 1:
        table = _make_table(args, 4 * _prime_upper_bound(3 * args.count))
        results = chains.verify_seed_identity(table, args.count)
        rows = [(position + 1, seed, reference, equal)
                for position, (seed, reference, equal) in enumerate(results)]
        failures = [row for row in rows if not row[3]]
        if args.format == "text" and not failures:
            print(f"seed identity: {len(rows)} of {len(rows)} sieve seeds "
                  f"match the classifier sequence")
        else:
            _emit_rows(args, ("n", "seed", "classifier", "equal"),
                       rows if args.format != "text" else failures)
        return EXIT_MISMATCH if failures else EXIT_OK
    table = _make_table(args, max(2 * args.count + 10_000, 200))
    checkpoints = stats.aligned_checkpoints(table, args.count)
    rows = []
    failures = 0
    for checkpoint in checkpoints:
        identity = stats.interval_count_identity(table, checkpoint)
        ok = identity.nonrpr == identity.k and identity.k <= identity.h
        failures += 0 if ok else 1
        rows.append((checkpoint, identity.k, identity.nonrpr, identity.h, ok))
    if args.format == "text" and not failures:
        print(f"interval accounting: {len(rows)} aligned checkpoints <= {args.count} "
              f"all satisfy nonrpr = k <= h")
    else:
        _emit_rows(args, ("n", "k", "nonrpr", "h", "ok"), rows)
    return EXIT_MISMATCH if failures else EXIT_OK


_LADDER_COLUMNS = ("prefix_size", "win_fraction", "ramanujan_fraction", "k", "h")


def _ladder_row(report: stats.StatsReport) -> tuple:
    return (report.prefix_size, report.win_fraction, report.ramanujan_fraction,
            report.nonempty_intervals, report.h)


def _report_items(report: stats.StatsReport) -> list[tuple[str, object]]:
    items = [
        ("prefix_size", report.prefix_size),
        ("prime_count", report.prime_count),
        ("rpr_count", report.rpr_count),
        ("ramanujan_count", report.ramanujan_count),
        ("labos_count", report.labos_count),
        ("lpl_count", report.lpl_count),
        ("win_fraction", report.win_fraction),
        ("ramanujan_fraction", report.ramanujan_fraction),
        ("aligned_n", report.aligned_n),
        ("nonempty_intervals", report.nonempty_intervals),
        ("h", report.h),
    ]
    items.extend((f"reference_{name}", value) for name, value in report.reference.items())
    return items


def cmd_stats(args: argparse.Namespace) -> int:
    needed = max(2 * _prime_upper_bound(args.primes + 1),
                 _prime_upper_bound(3 * (args.primes // 2 + 2)), 200)
    table = _make_table(args, needed)
    reports = stats.ladder(table, args.primes) if args.ladder \
        else [stats.win_fraction(table, args.primes)]
    if args.plot:
        from .plotting import save_ladder_figure
        os.makedirs(args.plot, exist_ok=True)
        figure_path = save_ladder_figure(reports, os.path.join(args.plot, "win_fraction.png"))
        csv_path = os.path.join(args.plot, "ladder.csv")
        with open(csv_path, "w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(_LADDER_COLUMNS)
            for report in reports:
                writer.writerow([_cell(value) for value in _ladder_row(report)])
        _note(f"wrote {figure_path} and {csv_path}")
    if args.format == "json":
        payload = []
        for report in reports:
            entry = dict(_report_items(report))
            for name in ("reference_half", "reference_p0", "reference_p1"):
                del entry[name]
            entry["reference"] = report.reference
            payload.append(entry)
        json.dump(payload if args.ladder else payload[0], sys.stdout, indent=2)
        sys.stdout.write("\n")
    elif args.format == "csv" or args.ladder:
        _emit_rows(args, _LADDER_COLUMNS, [_ladder_row(report) for report in reports])
    else:
        for name, value in _report_items(reports[0]):
            print(f"{name}: {_cell(value) if value is not None else 'n/a'}")
    return EXIT_OK


def cmd_oeis_check(args: argparse.Namespace) -> int:
    sequence_id = args.seq
    if sequence_id not in _OEIS_GENERATED:
        raise ValueError(f"no generator for {sequence_id}; "
                         f"supported ids: {', '.join(_OEIS_GENERATED)}")
    reference = oeis.fetch_bfile(sequence_id, cache_dir=args.cache_dir,
                                 offline=args.offline)
    if sequence_id == "A006992":
        generated = chains.doubling_terms(2, args.count, chains.DESCENDING)
    elif sequence_id == "A055496":
        generated = chains.doubling_terms(2, args.count, chains.ASCENDING)
    else:
        table = _make_table(args, _prime_upper_bound(3 * args.count))
        generator = ramanujan.ramanujan_primes if sequence_id == "A104272" \
            else ramanujan.labos_primes
        generated = generator(table, args.count).tolist()
    mismatches = oeis.diff_sequence(generated, reference, args.count)
    if args.format == "text" and not mismatches:
        print(f"{sequence_id}: first {args.count} terms match the "
              f"{reference.source} b-file")
    else:
        _emit_rows(args, ("index", "generated", "reference"), mismatches)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text",
                        help="output format (default: text)")
    common.add_argument("--table-limit", type=int, default=None, metavar="N",
                        help="sieve table size (default: sized from the arguments)")
    common.add_argument("--cache-dir", default=None, metavar="DIR",
                        help="b-file cache directory (default: $OEIS_CACHE_DIR "
                             "or ~/.cache/primefam/oeis)")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1, metavar="N",
                        help="sieve construction workers (default: CPU count)")
    parser = argparse.ArgumentParser(
        prog="primefam",
        description="Ramanujan and Labos prime families: sequences, per-prime "
                    "classification, doubling-chain sieves, density statistics, "
                    "and OEIS cross-checks.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("primes", parents=[common], help="list primes up to a limit")
    p.add_argument("--limit", type=int, required=True, help="inclusive upper bound")
    p.set_defaults(handler=cmd_primes)

    p = sub.add_parser("ramanujan", parents=[common], help="first K Ramanujan primes")
    p.add_argument("--count", type=int, required=True, help="number of terms")
    p.set_defaults(handler=cmd_ramanujan)

    p = sub.add_parser("labos", parents=[common], help="first K Labos primes")
    p.add_argument("--count", type=int, required=True, help="number of terms")
    p.set_defaults(handler=cmd_labos)

    p = sub.add_parser("classify", parents=[common],
                       help="classify every prime up to a limit into the "
                            "right/left families")
    p.add_argument("--limit", type=int, required=True, help="inclusive upper bound")
    p.add_argument("--side", choices=("right", "left", "both"), default="both",
                   help="which family columns to include (default: both)")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("family", parents=[common],
                       help="run the doubling-chain family sieve")
    p.add_argument("--horizon", type=int, required=True,
                   help="every prime up to this bound is assigned a family")
    p.add_argument("--direction", choices=("desc", "asc"), default="desc",
                   help="desc: largest prime below double (default); "
                        "asc: smallest prime above double (experimental)")
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("verify", parents=[common],
                       help="check a family identity and exit nonzero on mismatch")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True,
                   help="1: sieve seeds equal the classifier's RPR sequence; "
                        "2: aligned interval accounting nonrpr = k <= h")
    p.add_argument("--count", type=int, required=True,
                   help="theorem 1: number of seeds; theorem 2: checkpoint bound")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("stats", parents=[common],
                       help="win fraction and density report")
    p.add_argument("--primes", type=int, required=True, metavar="K",
                   help="examine the first K primes")
    p.add_argument("--ladder", action="store_true",
                   help="doubling ladder of prefix sizes up to K")
    p.add_argument("--plot", metavar="DIR", default=None,
                   help="also write win_fraction.png and ladder.csv to DIR")
    p.set_defaults(handler=cmd_stats)

    p = sub.add_parser("oeis-check", parents=[common],
                       help="diff a generated sequence against its OEIS b-file")
    p.add_argument("--seq", required=True, metavar="ID",
                   help=f"sequence id, one of: {', '.join(_OEIS_GENERATED)}")
    p.add_argument("--count", type=int, required=True, help="terms to compare")
    p.add_argument("--offline", action="store_true",
                   help="never touch the network; use cache or bundled fixtures")
    p.set_defaults(handler=cmd_oeis_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except (ResourceLimitError, OeisUnavailableError, BFileParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (OutOfRangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
