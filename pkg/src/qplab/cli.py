"""Command-line front end: enumerate, verify, suite, table, list.

Exit codes: 0 when everything passes, 1 on any failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import closed_forms as cf
from . import harness
from .partitions import (InfiniteUniverseError, Partition, PartitionConstraints,
                         enumerate_partitions, gf_enumerated)
from .qpoly import format_poly

FILTER_KEYS = ("i", "j", "m", "bg", "alt", "c1mod4", "c3mod4", "odd", "parts")


class UsageError(Exception):
    pass


def _env_seed() -> int:
    raw = os.environ.get("QPLAB_SEED")
    if raw is None:
        return harness.DEFAULT_SEED
    try:
        return int(raw, 0)
    except ValueError:
        raise UsageError(f"QPLAB_SEED must be an integer, got {raw!r}") from None


def parse_pairs(items, what: str) -> dict:
    out = {}
    for item in items:
        for chunk in item.split(","):
            key, sep, value = chunk.partition("=")
            key = key.strip()
            if not sep or not key:
                raise UsageError(f"malformed {what} {chunk!r}, expected key=value")
            try:
                out[key] = int(value)
            except ValueError:
                raise UsageError(f"{what} {key} needs an integer value, got {value!r}") from None
    return out


# -- enumerate ---------------------------------------------------------------------

def _constraints(args) -> PartitionConstraints:
    if args.norm is not None and args.max_norm is not None:
        raise UsageError("--norm and --max-norm are mutually exclusive")
    filters = parse_pairs(args.filter or [], "filter")
    for key in filters:
        if key not in FILTER_KEYS:
            raise UsageError(f"unknown filter key {key!r} (choose from {', '.join(FILTER_KEYS)})")
    for name in ("max_part", "max_parts", "norm", "max_norm"):
        v = getattr(args, name)
        if v is not None and v < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be non-negative")
    return PartitionConstraints(max_part=args.max_part, max_parts=args.max_parts,
                                distinct=args.distinct, gollnitz_gap=args.gollnitz_gap,
                                fixed_norm=args.norm, max_norm=args.max_norm,
                                stat_filters=filters)


def cmd_enumerate(args, out) -> int:
    c = _constraints(args)
    if not c.is_finite():
        raise UsageError("infinite universe: give --norm, --max-norm, or bounds that make it finite")
    if args.emit == "gf":
        gf = gf_enumerated(c, args.weight)
        if args.output == "json":
            print(json.dumps({"gf": format_poly(gf), "weight": args.weight}), file=out)
        else:
            print(format_poly(gf), file=out)
        return 0
    parts = list(enumerate_partitions(c))
    if args.emit == "count":
        print(json.dumps({"count": len(parts)}) if args.output == "json" else len(parts), file=out)
        return 0
    if args.output == "json":
        print(json.dumps({"partitions": [list(p.parts) for p in parts]}), file=out)
    else:
        for p in parts:
            print(p, file=out)
    return 0


# -- verify / suite ------------------------------------------------------------------

def _mode(args) -> harness.Mode | None:
    if args.mode is None:
        if args.cutoff is not None or args.points is not None or args.seed is not None:
            raise UsageError("--cutoff, --points and --seed need an explicit --mode")
        return None
    if args.mode != harness.TRUNCATED and args.cutoff is not None:
        raise UsageError("--cutoff only applies to --mode truncated")
    if args.mode != harness.RATIONAL and (args.points is not None or args.seed is not None):
        raise UsageError("--points and --seed only apply to --mode rational")
    if args.mode == harness.TRUNCATED:
        return harness.Mode(harness.TRUNCATED, args.cutoff)
    if args.mode == harness.RATIONAL:
        if args.points is not None and args.points < 1:
            raise UsageError("--points must be positive")
        seed = args.seed if args.seed is not None else _env_seed()
        return harness.Mode(harness.RATIONAL, points=args.points or harness.DEFAULT_POINTS, seed=seed)
    return harness.Mode(harness.EXACT)


def _params_text(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def _report_text(r: harness.VerificationReport) -> list[str]:
    head = f"{r.instance.id} {_params_text(r.instance.param_dict)}".rstrip()
    lines = [f"{head} [{r.mode}]: {r.status}" if r.mode else f"{head}: {r.status}"]
    if r.error:
        lines.append(f"  error: {r.error}")
        return lines
    lines.append(f"  lhs: {r.lhs}")
    lines.append(f"  rhs: {r.rhs}")
    for chk in r.checks:
        lines.append(f"  check ({chk['kind']}) {chk['check']}: {chk['status']}")
    if r.first_discrepancy:
        d = r.first_discrepancy
        lines.append(f"  first discrepancy in '{d['check']}' at {d['monomial']}: lhs {d['lhs']}, rhs {d['rhs']}")
    return lines


def cmd_verify(args, out) -> int:
    if args.id not in harness.REGISTRY:
        raise UsageError(f"unknown identity {args.id!r}; run 'qplab list'")
    params = parse_pairs(args.param or [], "param")
    inst = harness.IdentityInstance.make(args.id, _mode(args), **params)
    report = harness.verify(inst)
    if args.output == "json":
        print(json.dumps(report.to_json(), indent=2), file=out)
    else:
        print("\n".join(_report_text(report)), file=out)
    return {"Pass": 0, "Fail": 1}.get(report.status, 2)


def cmd_suite(args, out) -> int:
    if args.jobs is not None and args.jobs < 1:
        raise UsageError("--jobs must be positive")
    result = harness.run_suite(args.name, args.jobs or 1)
    payload = {"suite": result.name, "summary": result.summary,
               "reports": [r.to_json() for r in result.reports]}
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1)
    if args.output == "json":
        print(json.dumps(payload), file=out)
    else:
        for r in result.reports:
            if r.status != "Pass":
                print("\n".join(_report_text(r)), file=out)
        s = result.summary
        print(f"suite {result.name}: {s['pass']} pass, {s['fail']} fail, {s['error']} error", file=out)
    return 0 if result.summary["fail"] == result.summary["error"] == 0 else 1


def cmd_list(args, out) -> int:
    rows = harness.list_identities()
    if args.output == "json":
        print(json.dumps(rows, indent=1), file=out)
        return 0
    for row in rows:
        sig = ", ".join(row["params"] + [f"[{k}]" for k in row["optional"]])
        print(f"{row['id']:<14} ({sig}) modes={'|'.join(row['modes'])}  {row['title']}", file=out)
    return 0


# -- tables ------------------------------------------------------------------------

def _plist(text: str) -> list[Partition]:
    return [Partition.parse(f"({p})") for p in text.strip("()").split("),(")]


# Reference lists as printed alongside the original statements. The enumeration
# is authoritative; these are compared as sets and any difference is flagged.
TABLE_REFERENCE = {
    "table2": [
        ("p(1,1,14)", dict(distinct=True, fixed_norm=14, stat_filters={"i": 1, "j": 1}),
         _plist("(13,1),(11,3),(10,3,1),(9,5),(9,3,2),(8,5,1),(7,5,2),(7,4,2,1),(6,5,3),(6,4,3,1)")),
        ("p'(1,1,14)", dict(distinct=True, fixed_norm=14, stat_filters={"c1mod4": 1, "c3mod4": 1}),
         _plist("(11,2,1),(10,3,1),(9,3,2),(8,3,2,1),(7,6,1),(7,5,2),(7,4,2,1),(6,5,3),(6,4,3,1),(5,4,3,2)")),
    ],
    "table6": [
        ("A_3(10,2)", dict(max_parts=3, fixed_norm=10, stat_filters={"odd": 2}),
         _plist("(9,1),(8,1,1),(7,3),(7,2,1),(6,3,1),(5,5),(5,4,1),(5,3,2),(4,3,3)")),
        ("B_3(10,2)", dict(max_part=3, fixed_norm=10, stat_filters={"alt": 2}),
         _plist("(3,3,3,1),(3,3,2,1,1),(3,2,2,2,1),(3,2,2,1,1,1),(3,2,1,1,1,1,1),(3,1,1,1,1,1,1,1),"
                "(2,2,2,2,2),(2,2,2,1,1,1,1),(2,1,1,1,1,1,1,1,1)")),
    ],
    "table7": [
        ("A_{5,3}(10,2)", dict(max_part=5, max_parts=3, fixed_norm=10, stat_filters={"odd": 2}),
         _plist("(5,5),(5,4,1),(5,3,2),(4,3,3)")),
        ("B_{3,5}(10,2)", dict(max_part=3, max_parts=5, fixed_norm=10, stat_filters={"alt": 2}),
         _plist("(3,3,3,1),(3,3,2,1,1),(3,2,2,2,1),(2,2,2,2,2)")),
    ],
}

TABLE8 = [
    ((7, 0, 1, 2), "q^9 + q^11 + q^13 + q^15", _plist("(4,3,2),(6,3,2),(6,5,2),(6,5,4)")),
    ((7, 1, 0, 1), "q^5 + q^7 + 2*q^9 + q^11 + q^13", _plist("(3,2),(5,2),(5,4),(7,2),(7,4),(7,6)")),
    ((6, 2, 0, 1), "q^6 + q^8 + q^10 + q^12", _plist("(3,2,1),(5,2,1),(5,4,1),(5,4,3)")),
]


def table_rows(name: str) -> list[dict]:
    if name == "table8":
        rows = []
        for (N, i, j, m), ref_poly, ref_parts in TABLE8:
            c = PartitionConstraints(distinct=True, max_part=N, stat_filters={"i": i, "j": j, "m": m})
            parts = list(enumerate_partitions(c))
            closed = format_poly(cf.p_tilde(N, i, j, m))
            enum = format_poly(gf_enumerated(c))
            rows.append({"label": f"P~_{N}({i},{j},{m},q)", "closed": closed, "enumerated": enum,
                         "reference": ref_poly, "partitions": [str(p) for p in parts],
                         "ok": closed == enum == ref_poly and set(parts) == set(ref_parts)})
        return rows
    rows = []
    for label, kw, ref in TABLE_REFERENCE[name]:
        parts = list(enumerate_partitions(PartitionConstraints(**kw)))
        rows.append({"label": label, "count": len(parts), "partitions": [str(p) for p in parts],
                     "reference_count": len(ref), "ok": set(parts) == set(ref)})
    return rows


def cmd_table(args, out) -> int:
    rows = table_rows(args.name)
    if args.output == "json":
        print(json.dumps({"table": args.name, "rows": rows}, indent=1), file=out)
    else:
        for row in rows:
            flag = "" if row["ok"] else "  MISMATCH with reference data"
            if "closed" in row:
                print(f"{row['label']} = {row['closed']}{flag}", file=out)
                if row["closed"] != row["enumerated"]:
                    print(f"  enumeration gives {row['enumerated']}", file=out)
            else:
                print(f"{row['label']} = {row['count']}{flag}", file=out)
            print("  " + ", ".join(row["partitions"]), file=out)
    return 0 if all(r["ok"] for r in rows) else 1


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="qplab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    en = sub.add_parser("enumerate", parents=[common], help="list, count or sum over partitions")
    en.add_argument("--max-part", type=int)
    en.add_argument("--max-parts", type=int)
    en.add_argument("--norm", type=int)
    en.add_argument("--max-norm", type=int)
    en.add_argument("--distinct", action="store_true")
    en.add_argument("--gollnitz-gap", action="store_true")
    en.add_argument("--filter", action="append", metavar="KEY=V[,KEY=V]")
    en.add_argument("--emit", choices=("list", "count", "gf"), default="list")
    en.add_argument("--weight", choices=("q", "qtz", "bg", "alt", "boulet"), default="q")
    en.set_defaults(func=cmd_enumerate)

    ve = sub.add_parser("verify", parents=[common], help="verify one identity instance")
    ve.add_argument("--id", required=True)
    ve.add_argument("--param", action="append", metavar="K=V")
    ve.add_argument("--mode", choices=(harness.EXACT, harness.TRUNCATED, harness.RATIONAL))
    ve.add_argument("--cutoff", type=int)
    ve.add_argument("--points", type=int)
    ve.add_argument("--seed", type=int)
    ve.set_defaults(func=cmd_verify)

    su = sub.add_parser("suite", parents=[common], help="run a named suite")
    su.add_argument("--name", choices=tuple(harness.SUITES), default="smoke")
    su.add_argument("--report", metavar="PATH")
    su.add_argument("--jobs", type=int)
    su.set_defaults(func=cmd_suite)

    ta = sub.add_parser("table", parents=[common], help="reproduce a reference table")
    ta.add_argument("name", choices=("table2", "table6", "table7", "table8"))
    ta.set_defaults(func=cmd_table)

    li = sub.add_parser("list", parents=[common], help="list registered identities")
    li.set_defaults(func=cmd_list)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, out)
    except (UsageError, InfiniteUniverseError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"qplab: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
