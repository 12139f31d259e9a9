"""``dominion`` command line: compute, enumerate and verify.

Exit codes: 0 success, 1 a proven formula failed, 2 parse error, 3 capacity,
4 materialization cap, 5 a conjectured formula disagreed with the engine.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import harness
from .classify import census_of, classify
from .closed_forms import Status
from .engine import dominion, dominating_sets_of_size
from .errors import CapacityError, GraphParseError, InvalidFamilyError
from .families import parse_family
from .formats import parse_edge_list, parse_graph6
from .graph import Graph, members

SCHEMA_VERSION = "1"
MATERIALIZE_CAP = 10**6

EXIT_OK = 0
EXIT_PROVEN_MISMATCH = 1
EXIT_PARSE = 2
EXIT_CAPACITY = 3
EXIT_MATERIALIZE = 4
EXIT_CONJECTURE = 5


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load_graph(args) -> tuple[dict, Graph]:
    try:
        if args.graph6 is not None:
            return {"graph6": args.graph6}, parse_graph6(args.graph6)
        if args.edges is not None:
            try:
                with open(args.edges) as fh:
                    text = fh.read()
            except OSError as exc:
                raise CliError(f"cannot read {args.edges}: {exc}", EXIT_PARSE) from None
            return {"edges": args.edges}, parse_edge_list(text)
        spec = parse_family(args.family)
        return {"family": str(spec)}, spec.build()
    except (GraphParseError, InvalidFamilyError) as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    except CapacityError as exc:
        raise CliError(str(exc), EXIT_CAPACITY) from None


def _checked_graph(args):
    source, g = _load_graph(args)
    cap = harness.search_cap()
    if g.n > cap:
        raise CliError(f"graph has {g.n} vertices; search cap is {cap} (set DOMINION_MAX_N)", EXIT_CAPACITY)
    return source, g


def _document(source, **fields) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "indexing": "0-based", "input": source}
    doc.update(fields)
    return doc


def cmd_compute(args) -> tuple[dict, int]:
    source, g = _checked_graph(args)
    report = dominion(g)
    return _document(source, n=g.n, gamma=report.gamma, zeta=str(report.zeta), status="COMPUTED"), EXIT_OK


def cmd_enumerate(args) -> tuple[dict, int]:
    source, g = _checked_graph(args)
    report = dominion(g)
    if report.zeta > MATERIALIZE_CAP and not args.force:
        raise CliError(
            f"zeta = {report.zeta} exceeds the materialization cap {MATERIALIZE_CAP}; pass --force",
            EXIT_MATERIALIZE,
        )
    sets = list(dominating_sets_of_size(g, report.gamma))
    doc = _document(
        source,
        n=g.n,
        gamma=report.gamma,
        zeta=str(report.zeta),
        status="COMPUTED",
        sets=[members(s) for s in sets],
    )
    if args.classify:
        doc["classified"] = [{"set": members(s), "flags": classify(g, s).as_dict()} for s in sets]
        doc["census"] = census_of(g, sets).as_dict()
    return doc, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    threads = args.threads or os.cpu_count() or 1
    if args.suite == "families":
        max_n = args.max_n if args.max_n is not None else 18
        records = harness.verify_families(max_n, args.engine, args.budget_ms, threads)
        summary = f"{sum(r.match for r in records)}/{len(records)} records match"
        status = Status.PROVEN.value
    else:
        max_n = args.max_n if args.max_n is not None else 22
        records = harness.verify_cycle_conjecture(max_n, args.budget_ms, args.engine, threads)
        summary = harness.conjecture_summary(records, max_n)
        status = Status.CONJECTURED.value
    code = harness.exit_status(records)
    outcomes = {}
    for r in records:
        outcomes[r.outcome] = outcomes.get(r.outcome, 0) + 1
    doc = _document(
        {"suite": args.suite, "max_n": max_n, "engine": args.engine},
        gamma=None,
        zeta=None,
        status=status,
        summary=summary,
        outcomes=outcomes,
        records=[r.to_json() for r in records],
    )
    return doc, code


def _render_text(doc: dict) -> str:
    lines = [f"input: {', '.join(f'{k}={v}' for k, v in doc['input'].items())}"]
    if doc.get("gamma") is not None:
        lines.append(f"n      {doc['n']}")
        lines.append(f"gamma  {doc['gamma']}")
        lines.append(f"zeta   {doc['zeta']}")
        lines.append(f"status {doc['status']}")
    if "classified" in doc:
        for item in doc["classified"]:
            flags = [k for k, v in item["flags"].items() if v] or ["-"]
            lines.append(f"  {item['set']}  {' '.join(flags)}")
        lines.append("census: " + " ".join(f"{k}={v}" for k, v in doc["census"].items()))
    elif "sets" in doc:
        lines += [f"  {s}" for s in doc["sets"]]
    if "records" in doc:
        header = f"{'family':<28} {'status':<12} {'gamma f/e':<10} {'zeta formula':>14} {'zeta engine':>14}  outcome"
        lines.append(header)
        for r in doc["records"]:
            fam = r["family"] if len(r["family"]) <= 28 else r["family"][:25] + "..."
            gammas = f"{r['formula_gamma']}/{r['engine_gamma']}"
            lines.append(
                f"{fam:<28} {r['status']:<12} {gammas:<10} {r['formula_zeta']:>14} "
                f"{str(r['engine_zeta']):>14}  {r['outcome']}"
            )
        lines.append(f"summary: {doc['summary']}")
    return "\n".join(lines)


def _add_graph_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", metavar="S", help="graph in graph6 encoding")
    src.add_argument("--edges", metavar="FILE", help="edge-list file ('n <count>' then 'u v' lines)")
    src.add_argument(
        "--family",
        metavar="SPEC",
        help="path:N, cycle:N, complete:N, star:N, sun:N, empty:N, kpartite:M1,M2,..., join:<spec>+<spec>",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dominion", description="Count minimum dominating sets of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="domination number and dominion of one graph")
    _add_graph_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("enumerate", help="list every minimum dominating set")
    _add_graph_source(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--classify", action="store_true", help="add per-set flags and a census")
    p.add_argument("--force", action="store_true", help=f"list even when zeta > {MATERIALIZE_CAP}")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check closed forms against the exact engines")
    p.add_argument("--suite", choices=("families", "conjecture"), required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--budget-ms", type=float, default=None, help="time budget per instance")
    p.add_argument("--threads", type=int, default=None, help="worker processes (default: CPU count)")
    p.add_argument("--engine", choices=("search", "oracle"), default="search")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, code = args.func(args)
    except CliError as exc:
        print(f"dominion: {exc}", file=sys.stderr)
        return exc.code
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(_render_text(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
