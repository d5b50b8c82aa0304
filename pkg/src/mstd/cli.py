"""Command-line front end: exact counts, bound reports, forbiddance-graph
inspection, verification sweeps and convergence tables.

Output is one JSON record per line by default; --format csv/table switch the
rendering. Flags can be defaulted through environment variables prefixed
MSTD_ (MSTD_THREADS, MSTD_FORMAT, MSTD_PRECISION_BITS, MSTD_MAX_ORDER,
MSTD_SEED). Parse failures and cap refusals exit nonzero with a message on
stderr; `verify` exits 0 only when every selected check passes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import mpmath
from typing import Optional, Sequence

from . import __version__
from . import enumerate_subsets as enum
from .bounds import build_report, even_upper_ratio
from .fib_index import fib_index_exact
from .forbiddance import build_graph, decompose
from .groups import GroupSpec, groups_up_to
from .verify import DEFAULT_SEED, CHECKS, run_checks

_FAMILIES = ("cyclic", "cyclic-even", "cyclic-odd", "zn-x-z2", "all")


def _env_int(name: str, default: Optional[int]) -> Optional[int]:
    raw = os.environ.get(name)
    return int(raw) if raw is not None else default


def _env_str(name: str, default: str) -> str:
    return os.environ.get(name, default)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--threads",
        type=int,
        default=_env_int("MSTD_THREADS", None),
        help="worker threads for subset scans (default: all cores)",
    )
    parser.add_argument(
        "--format",
        choices=("json", "csv", "table"),
        default=_env_str("MSTD_FORMAT", "json"),
        help="output rendering (default json, one record per line)",
    )
    parser.add_argument(
        "--progress",
        type=float,
        default=None,
        metavar="SECONDS",
        help="progress report interval on stderr (default: off)",
    )


def _emit(records: list[dict], fmt: str) -> None:
    if fmt == "json":
        for rec in records:
            print(json.dumps(rec, sort_keys=True))
        return
    if not records:
        return
    fields = list(records[0].keys())
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields)
        writer.writeheader()
        for rec in records:
            writer.writerow(rec)
        sys.stdout.write(buf.getvalue())
        return
    widths = {
        f: max(len(f), *(len(str(rec.get(f, ""))) for rec in records)) for f in fields
    }
    print("  ".join(f.ljust(widths[f]) for f in fields))
    for rec in records:
        print("  ".join(str(rec.get(f, "")).ljust(widths[f]) for f in fields))


def _parse_elements(raw: Optional[str]) -> tuple[int, ...]:
    if not raw:
        return ()
    return tuple(int(p) for p in raw.split(","))


def cmd_count(args: argparse.Namespace) -> int:
    group = GroupSpec.from_string(args.group)
    result = enum.count_mstd(
        group,
        threads=args.threads,
        cap=args.cap,
        progress_interval=args.progress,
    )
    _emit([result.to_record()], args.format)
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    group = GroupSpec.from_string(args.group)
    exact = None
    if args.exact:
        exact = enum.count_mstd(group, threads=args.threads).mstd_count
    report = build_report(group, precision_bits=args.precision_bits, exact=exact)
    _emit([report.to_record()], args.format)
    return 0


def cmd_forbid(args: argparse.Namespace) -> int:
    group = GroupSpec.from_string(args.group)
    diffs = _parse_elements(args.diffs)
    sums = _parse_elements(args.sums)
    graph = build_graph(group, diffs, sums)
    dec = decompose(graph)
    index = fib_index_exact(graph)
    record = {
        "group": str(group),
        "diffs": ",".join(str(d) for d in sorted(graph.spec.diffs)),
        "sums": ",".join(str(s) for s in sorted(graph.spec.sums)),
        "independent_sets": str(index),
    }
    record.update(dec.to_record())
    record["components"] = json.dumps(record["components"])
    record["looped"] = ",".join(str(v) for v in dec.looped)
    reduced = {min(d, group.neg(d)) for d in graph.spec.diffs}
    if len(reduced) == 1 and len(sums) == 1:
        (d,) = reduced
        m = group.element_order(d)
        if m % 2 == 1 and m > 1:
            n_p, n_l, _ = dec.prism_ladder_profile(m)
            record["prisms"] = n_p
            record["ladders"] = n_l
    if args.oracle:
        oracle = enum.count_avoiding(group, diffs, sums, threads=args.threads)
        record["oracle"] = str(oracle)
        record["oracle_match"] = oracle == index
    if args.edges:
        sys.stderr.write(graph.edge_list_text())
    _emit([record], args.format)
    if args.oracle and not record["oracle_match"]:
        return 1
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    only = args.only.split(",") if args.only else None
    if args.list_checks:
        for name in CHECKS:
            print(name)
        return 0
    results = run_checks(
        only=only,
        max_order=args.max_order,
        threads=args.threads if args.threads else 1,
        seed=args.seed,
    )
    all_ok = True
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        all_ok &= res.passed
        print(f"{status} {res.name}: {res.detail}")
    return 0 if all_ok else 1


def _family_groups(family: str, lo: int, hi: int) -> list[GroupSpec]:
    if family == "cyclic":
        return [GroupSpec((n,)) for n in range(max(lo, 2), hi + 1)]
    if family == "cyclic-even":
        return [GroupSpec((n,)) for n in range(max(lo, 2), hi + 1) if n % 2 == 0]
    if family == "cyclic-odd":
        return [GroupSpec((n,)) for n in range(max(lo, 3), hi + 1) if n % 2 == 1]
    if family == "zn-x-z2":
        return [GroupSpec((n, 2)) for n in range(max(lo, 2), hi + 1)]
    return [g for g in groups_up_to(hi, min_order=max(lo, 2))]


def cmd_table(args: argparse.Namespace) -> int:
    if args.min > args.max:
        raise ValueError("--min must not exceed --max")
    records = []
    for group in _family_groups(args.family, args.min, args.max):
        exact = None
        if group.order <= (args.max_order or enum.COUNT_CAP):
            exact = enum.count_mstd(group, threads=args.threads).mstd_count
        report = build_report(
            group, precision_bits=args.precision_bits, exact=exact
        )
        rec = report.to_record()
        # guaranteed brackets on count/asymptotic; the even case has the
        # sharper closed-form cap on top of upper/asymptotic
        with mpmath.workprec(report.precision_bits):
            asym = mpmath.mpf(rec["asymptotic"])
            low = mpmath.mpf(report.lower.numerator) / report.lower.denominator
            rec["ratio_cap_lower"] = float(low / asym)
            if group.order % 2 == 0:
                rec["ratio_cap_upper"] = float(even_upper_ratio(group))
            else:
                rec["ratio_cap_upper"] = float(mpmath.mpf(report.upper) / asym)
        rec.setdefault("exact", "")
        rec.setdefault("exact_over_asymptotic", "")
        records.append(rec)
    _emit(records, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mstd",
        description="Count and bound more-sums-than-differences sets in "
        "finite abelian groups.",
    )
    parser.add_argument("--version", action="version", version=f"mstd {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="exact MSTD count by full enumeration")
    p_count.add_argument("-g", "--group", required=True, help='factor list, e.g. "12,2"')
    p_count.add_argument(
        "--cap",
        type=int,
        default=enum.COUNT_CAP,
        help=f"largest group order to scan (default {enum.COUNT_CAP})",
    )
    _add_common(p_count)
    p_count.set_defaults(func=cmd_count)

    p_bound = sub.add_parser("bound", help="closed-form bound report")
    p_bound.add_argument("-g", "--group", required=True)
    p_bound.add_argument(
        "--precision-bits",
        type=int,
        default=_env_int("MSTD_PRECISION_BITS", None),
        help="working precision for transcendental terms (default 2|G| bits)",
    )
    p_bound.add_argument(
        "--exact",
        action="store_true",
        help="also run the exhaustive count and attach it",
    )
    _add_common(p_bound)
    p_bound.set_defaults(func=cmd_bound)

    p_forbid = sub.add_parser(
        "forbid", help="forbiddance graph: decomposition and exact index"
    )
    p_forbid.add_argument("-g", "--group", required=True)
    p_forbid.add_argument("-d", "--diffs", help="forbidden differences, e.g. 1 or 1,3")
    p_forbid.add_argument("-s", "--sums", help="forbidden sums")
    p_forbid.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check the index against the exhaustive subset scan",
    )
    p_forbid.add_argument(
        "--edges", action="store_true", help="dump the edge list to stderr"
    )
    _add_common(p_forbid)
    p_forbid.set_defaults(func=cmd_forbid)

    p_verify = sub.add_parser("verify", help="run the verification sweeps")
    p_verify.add_argument(
        "--only", help="comma-separated check names (default: all)"
    )
    p_verify.add_argument(
        "--max-order",
        type=int,
        default=_env_int("MSTD_MAX_ORDER", None),
        help="lower the sweep ceilings to this group order",
    )
    p_verify.add_argument(
        "--seed",
        type=int,
        default=_env_int("MSTD_SEED", DEFAULT_SEED),
        help="seed for the randomized checks",
    )
    p_verify.add_argument(
        "--list-checks", action="store_true", help="list check names and exit"
    )
    _add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser(
        "table", help="bound/convergence table over a group family"
    )
    p_table.add_argument("--family", choices=_FAMILIES, default="cyclic")
    p_table.add_argument("--min", type=int, default=2)
    p_table.add_argument("--max", type=int, required=True)
    p_table.add_argument(
        "--max-order",
        type=int,
        default=_env_int("MSTD_MAX_ORDER", None),
        help="largest order to count exhaustively (default: the scan cap)",
    )
    p_table.add_argument(
        "--precision-bits", type=int, default=_env_int("MSTD_PRECISION_BITS", None)
    )
    _add_common(p_table)
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:  # includes cap refusals
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
