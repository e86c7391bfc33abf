"""Command-line entry point: ``acymatch {analyze,pairs,search,verify-fixtures}``.

Exit codes: 0 success, 1 a fixture or check failed, 2 usage, 3 validation,
4 cap exceeded, 5 I/O.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fixtures, report
from .errors import (
    CapExceededError,
    StructuralError,
    UnsupportedGroupError,
    ValidationError,
)
from .group import GroupSpec, format_set, parse_elements, parse_spec
from .harness import CONJECTURES, DEFAULT_CONJECTURES, scan
from .matching import Mode, build_pair
from .pairs import PairQuery, count_pairs, generate_pairs

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_VALIDATION, EXIT_CAP, EXIT_IO = 0, 1, 2, 3, 4, 5


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"2..4"`` -> (2, 4); ``"3"`` -> (3, 3)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise UsageError(f"cannot parse range {text!r}") from None


def parse_groups(text: str) -> list[GroupSpec]:
    """Comma-separated items, each a cyclic range ``3..11`` or a spec such as ``2x4``."""
    specs = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        if ".." in item:
            lo, hi = parse_range(item)
            specs.extend(GroupSpec((n,)) for n in range(lo, hi + 1))
        else:
            specs.append(parse_spec(item))
    return specs


def _mode(args) -> Mode:
    return Mode.parse(args.mode)


def cmd_analyze(args) -> int:
    spec = parse_spec(args.group)
    A = parse_elements(spec, args.A)
    B = parse_elements(spec, args.B)
    pair = build_pair(spec, A, B)
    rep = report.analyze(pair, _mode(args))
    if args.format == "json":
        text = report.render_json(rep)
    elif args.format == "csv":
        text = report.render_csv(rep)
    else:
        text = report.render_table(rep, args.rows)
    _emit(text, args.out)
    return EXIT_OK


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_pairs(args) -> int:
    spec = parse_spec(args.group)
    lo, hi = parse_range(args.size)
    if lo < 1:
        raise UsageError(f"--size must be at least 1, got {args.size!r}")
    query = PairQuery(
        spec, lo, hi, require_weak=not args.all, limit=args.limit,
        translation_reduce=args.translation_reduce,
    )
    if args.count:
        print(count_pairs(query))
        return EXIT_OK
    for pair in generate_pairs(query):
        print(f"A={format_set(pair.A)}\tB={format_set(pair.B)}")
    return EXIT_OK


def cmd_search(args) -> int:
    specs = parse_groups(args.groups)
    for spec in specs:
        if not spec.is_finite:
            raise UnsupportedGroupError(f"cannot scan infinite group {spec}")
    sizes = parse_range(args.sizes)
    if args.theorem_only:
        conjectures = ["3.5"]
    else:
        conjectures = [c.strip() for c in args.conjectures.split(",") if c.strip()]
        unknown = [c for c in conjectures if c not in CONJECTURES]
        if unknown:
            raise UsageError(f"unknown conjecture ids {unknown}; choose from {sorted(CONJECTURES)}")

    out = None
    if args.out:
        try:
            out = open(args.out, "w", encoding="utf-8", newline="\n")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    try:
        sink = (lambda v: out.write(report.verdict_line(v) + "\n")) if out else None
        summary = scan(
            specs, sizes, _mode(args), conjectures,
            jobs=args.jobs, sink=sink, require_weak=not args.all_pairs,
            subgroup_only=args.theorem_only, timings=args.timings,
        )
    finally:
        if out:
            out.close()
    data = summary.to_dict()
    if summary.mode is Mode.BIJECTION:
        data["watermark"] = report.COMPAT_WATERMARK
    print(json.dumps(data, indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = fixtures.run_fixtures()
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{r.status.upper():<11} {r.name:<{width}}  {r.detail}")
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} fixtures ok")
    return EXIT_OK if not failed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acymatch", description="Acyclic matchings between subsets of abelian groups."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="acyclicity table, filter trace and verdict for one pair")
    p.add_argument("--group", required=True, help='e.g. "14", "2x4", "0" for Z')
    p.add_argument("--A", required=True, help='elements joined by ";" ("1,3,5,7" for rank 1)')
    p.add_argument("--B", required=True)
    p.add_argument("--mode", choices=["strict", "bijection", "bijection-compat"], default="strict")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--rows", type=int, default=None, help="truncate the table to this many rows")
    p.add_argument("--out", help="write to a file instead of standard output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("pairs", help="list pairs (A, B) with A and A+B disjoint")
    p.add_argument("--group", required=True)
    p.add_argument("--size", required=True, help='subset size or range, e.g. "4" or "2..4"')
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--all", action="store_true", help="do not require A and A+B disjoint")
    p.add_argument("--translation-reduce", action="store_true",
                   help="keep only the smallest translate of each A")
    p.add_argument("--count", action="store_true", help="print the number of pairs only")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("search", help="exhaustive conjecture scan")
    p.add_argument("--groups", required=True, help='e.g. "3..11" or "2x4,9"')
    p.add_argument("--sizes", default="2..4")
    p.add_argument("--mode", choices=["strict", "bijection", "bijection-compat"], default="strict")
    p.add_argument("--conjectures", default=",".join(DEFAULT_CONJECTURES),
                   help=f"comma-separated ids from {', '.join(CONJECTURES)}")
    p.add_argument("--theorem-3.5-only", dest="theorem_only", action="store_true",
                   help="only pairs where B with 0 is a subgroup; check the subgroup theorem")
    p.add_argument("--all-pairs", action="store_true",
                   help="also evaluate pairs where A meets A+B")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="line-delimited verdict records")
    p.add_argument("--timings", action="store_true",
                   help="record elapsed times (output is then no longer reproducible)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-fixtures", aliases=["verify-paper"],
                       help="recompute the published reference examples")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, StructuralError, UnsupportedGroupError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
