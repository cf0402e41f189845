"""Command-line front end: heron <enumerate|cycles|verify|catalog>.

Data goes to stdout, diagnostics to stderr. The json and csv formats
are schema-stable and byte-deterministic (catalog timestamps aside);
the table format is for humans and makes no stability promises.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from heronian import catalog as catalog_mod
from heronian import verify as verify_mod
from heronian.core import Triangle, classify, heron_area
from heronian.cycles import find_cycles
from heronian.enumeration import triangles_with_area, triangles_with_perimeter
from heronian.necklace import enumerate_words

CATALOG_ENV_VAR = "HERON_CATALOG"


def _triangle_row(t: Triangle) -> dict:
    return {
        "a": t.a,
        "b": t.b,
        "c": t.c,
        "perimeter": t.perimeter,
        "area": heron_area(t),
        "classification": classify(t).value,
    }


def _print_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _print_csv(rows: list[dict], fieldnames: list[str]) -> None:
    writer = csv.DictWriter(sys.stdout, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def _print_table(rows: list[dict], fieldnames: list[str]) -> None:
    if not rows:
        print("(no results)")
        return
    widths = {
        name: max(len(name), *(len(str(r[name])) for r in rows)) for name in fieldnames
    }
    print("  ".join(name.ljust(widths[name]) for name in fieldnames))
    for r in rows:
        print("  ".join(str(r[name]).ljust(widths[name]) for name in fieldnames))


def cmd_enumerate(args) -> int:
    if args.perimeter is not None:
        triangles = triangles_with_perimeter(args.perimeter)
        query = {"perimeter": args.perimeter}
    else:
        triangles = triangles_with_area(args.area)
        query = {"area": args.area}
    rows = [_triangle_row(t) for t in triangles]
    if args.format == "json":
        _print_json({"query": query, "triangles": rows})
    elif args.format == "csv":
        _print_csv(rows, list(rows[0]) if rows else
                   ["a", "b", "c", "perimeter", "area", "classification"])
    else:
        _print_table(rows, ["a", "b", "c", "perimeter", "area", "classification"])
    return 0


def cmd_cycles(args, parser: argparse.ArgumentParser) -> int:
    if args.concrete:
        if args.p_max is None:
            parser.error("--concrete requires --p-max")
        cycles = [[list(t.sides) for t in c.members] for c in find_cycles(args.n, args.p_max)]
        payload = {"n": args.n, "mode": "concrete", "p_max": args.p_max, "cycles": cycles}
        if args.format == "json":
            _print_json(payload)
        elif args.format == "csv":
            rows = [
                {"cycle": i, "position": j, "a": m[0], "b": m[1], "c": m[2]}
                for i, cyc in enumerate(cycles)
                for j, m in enumerate(cyc)
            ]
            _print_csv(rows, ["cycle", "position", "a", "b", "c"])
        else:
            for i, cyc in enumerate(cycles):
                print(f"cycle {i}: " + " -> ".join(f"({m[0]},{m[1]},{m[2]})" for m in cyc))
            if not cycles:
                print("(no cycles)")
    else:
        words = [w.symbols for w in enumerate_words(args.n)]
        payload = {"n": args.n, "mode": "symbolic", "cycles": words}
        if args.format == "json":
            _print_json(payload)
        elif args.format == "csv":
            _print_csv([{"n": args.n, "word": w} for w in words], ["n", "word"])
        else:
            for w in words:
                print(w)
            if not words:
                print("(no cycles)")
    return 0


_BOUNDED_CLAIMS = ("lemma2", "lemma3", "theorem2", "theorem3", "gersonides", "equable-five")


def _run_claim(claim: str, args) -> verify_mod.TheoremReport:
    if claim == "lemma2":
        return verify_mod.check_lemma2(args.p_max)
    if claim == "lemma3":
        return verify_mod.check_lemma3(args.p_max)
    if claim == "theorem2":
        return verify_mod.check_theorem2(args.n, args.p_max)
    if claim == "theorem3":
        return verify_mod.check_theorem3(args.p_max, args.n_max)
    if claim == "gersonides":
        return verify_mod.check_gersonides(args.exp_max)
    if claim == "equable-five":
        return verify_mod.check_equable_census()
    raise AssertionError(claim)


def cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    if args.claim == "theorem1":
        point = {"x": args.x, "y": args.y, "z": args.z, "n": args.n}
        missing = [k for k, v in point.items() if v is None]
        if missing:
            parser.error("--claim theorem1 requires --x, --y, --z and --n")
        divides = verify_mod.check_theorem1_divisibility(**point)
        verdict = verify_mod.VERDICT_VERIFIED if divides else verify_mod.VERDICT_COUNTEREXAMPLE
        reports = [
            verify_mod.TheoremReport(
                "theorem1", point, verdict, [dict(point, divides=divides)]
            )
        ]
    elif args.claim == "all":
        reports = [_run_claim(c, args) for c in _BOUNDED_CLAIMS]
    else:
        reports = [_run_claim(args.claim, args)]

    if args.format == "json":
        _print_json({"reports": [json.loads(r.to_json()) for r in reports]})
    elif args.format == "csv":
        rows = [
            {"claim": r.claim, "verdict": r.verdict,
             "bounds": json.dumps(r.bounds, sort_keys=True, separators=(",", ":")),
             "witnesses": json.dumps(r.witnesses, sort_keys=True, separators=(",", ":"))}
            for r in reports
        ]
        _print_csv(rows, ["claim", "verdict", "bounds", "witnesses"])
    else:
        for r in reports:
            print(f"{r.claim}: {r.verdict}  bounds={r.bounds}")
            for w in r.witnesses:
                print(f"  {w}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_catalog(args, parser: argparse.ArgumentParser) -> int:
    if args.action == "build":
        if args.p_max is None or args.out is None:
            parser.error("catalog build requires --p-max and --out")
        cat = catalog_mod.build(args.p_max, workers=args.workers)
        try:
            catalog_mod.save(cat, args.out)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
        print(f"wrote {len(cat)} records to {args.out}", file=sys.stderr)
        return 0

    path = args.path or os.environ.get(CATALOG_ENV_VAR)
    if path is None:
        parser.error(f"catalog info requires --in or ${CATALOG_ENV_VAR}")
    try:
        cat = catalog_mod.load(path)
    except (OSError, catalog_mod.CatalogFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    header = {
        "format_version": catalog_mod.FORMAT_VERSION,
        "p_max": cat.p_max,
        "count": len(cat),
        "built_at": cat.built_at,
    }
    if args.format == "json":
        _print_json(header)
    elif args.format == "csv":
        _print_csv([header], list(header))
    else:
        for key, value in header.items():
            print(f"{key}: {value}")
    return 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("table", "json", "csv"), default="table",
        help="output format (default: table)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heron",
        description="Enumerate Heronian triangles, search sociable cycles, "
        "and machine-check the facts the search relies on.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list Heronian triangles")
    group = p_enum.add_mutually_exclusive_group(required=True)
    group.add_argument("--perimeter", type=int, help="exact perimeter to match")
    group.add_argument("--area", type=int, help="exact area to match")
    _add_format(p_enum)

    p_cyc = sub.add_parser("cycles", help="enumerate n-sociable cycles")
    p_cyc.add_argument("--n", type=int, required=True, help="cycle length")
    mode = p_cyc.add_mutually_exclusive_group()
    mode.add_argument("--symbolic", action="store_true",
                      help="print cycle words over U, V, W (default)")
    mode.add_argument("--concrete", action="store_true",
                      help="search concrete triangle cycles (needs --p-max)")
    p_cyc.add_argument("--p-max", type=int, help="perimeter bound for concrete search")
    _add_format(p_cyc)

    p_ver = sub.add_parser("verify", help="machine-check a claim within bounds")
    p_ver.add_argument(
        "--claim", required=True,
        choices=("lemma2", "lemma3", "theorem1", "theorem2", "theorem3",
                 "gersonides", "equable-five", "all"),
    )
    p_ver.add_argument("--p-max", type=int, default=2000, help="perimeter bound (default 2000)")
    p_ver.add_argument("--n-max", type=int, default=8, help="max cycle length (default 8)")
    p_ver.add_argument("--n", type=int, default=2,
                       help="divisibility exponent parameter (default 2)")
    p_ver.add_argument("--exp-max", type=int, default=64,
                       help="exponent bound for the power-difference scan (default 64)")
    p_ver.add_argument("--x", type=int)
    p_ver.add_argument("--y", type=int)
    p_ver.add_argument("--z", type=int)
    _add_format(p_ver)

    p_cat = sub.add_parser("catalog", help="build or inspect a triangle catalog")
    p_cat.add_argument("action", choices=("build", "info"))
    p_cat.add_argument("--p-max", type=int, help="perimeter bound for build")
    p_cat.add_argument("--out", help="output path for build")
    p_cat.add_argument("--in", dest="path",
                       help=f"catalog path for info (default: ${CATALOG_ENV_VAR})")
    p_cat.add_argument("--workers", type=int, default=1,
                       help="parallel build workers (default 1)")
    _add_format(p_cat)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "enumerate":
            return cmd_enumerate(args)
        if args.command == "cycles":
            return cmd_cycles(args, parser)
        if args.command == "verify":
            return cmd_verify(args, parser)
        return cmd_catalog(args, parser)
    except ValueError as exc:
        # precondition violations (n < 1 and the like) are usage errors
        parser.error(str(exc))


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
