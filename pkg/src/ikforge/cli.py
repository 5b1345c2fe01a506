"""Command-line entry point: ``ikforge <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .canon import canonical_form
from .catalog import NAMES, named
from .enumeration import ProfilePair, generate
from .formats import FormatError, graph6_decode, graph6_encode, graph_to_record, write_jsonl
from .graph import GraphError, MultiGraph, bipartition
from .moves import family_closure
from .pipeline import SECTIONS, Config, run
from .planarity import DEFAULT_BUDGET, is_k33, is_planar
from .reduction import Verdict, elimination_rule, reduce


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--out", type=Path, help="directory for reports, certificates and graph lists")
    p.add_argument("--threads", type=int, help="worker processes (default: $IKFORGE_THREADS or 1)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="minor-search expansion cap")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="ikforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification checks")
    v.add_argument("what", choices=("all",) + SECTIONS)

    e = sub.add_parser("enumerate", parents=[common], help="list candidates of one profile pair as graph6")
    e.add_argument("--profile", nargs=2, required=True, metavar=("A=n5,n4,n3", "B=n5,n4,n3"))

    c = sub.add_parser("closure", parents=[common], help="cousin family of a graph")
    c.add_argument("--seed", required=True, help="catalog name or graph6 string")

    r = sub.add_parser("reduce", parents=[common], help="reduce a graph at a vertex pair")
    r.add_argument("--graph", required=True, help="graph6 string")
    r.add_argument("--pair", required=True, help="two vertices, e.g. 0,1")

    k = sub.add_parser("catalog", parents=[common], help="show a named graph")
    k.add_argument("name", choices=NAMES)
    return parser


def _parse_profile(args: list[str]) -> ProfilePair:
    parts = {}
    for item in args:
        key, _, val = item.partition("=")
        if key.upper() not in ("A", "B") or not val:
            raise argparse.ArgumentTypeError(f"bad profile {item!r}; expected A=n5,n4,n3")
        parts[key.upper()] = val
    if set(parts) != {"A", "B"}:
        raise argparse.ArgumentTypeError("need both A= and B= profiles")
    return ProfilePair.parse(parts["A"], parts["B"])


def _seed(text: str) -> MultiGraph:
    if text.lower() in NAMES:
        return named(text.lower()).graph
    return graph6_decode(text)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_verify(args) -> int:
    cfg = Config.from_env(threads=args.threads, budget=args.budget, out=args.out)
    sections = list(SECTIONS) if args.what == "all" else [args.what]
    report = run(sections, cfg)
    lines = []
    for name, sec in report["sections"].items():
        lines.append(f"[{sec['status']}] {name} ({report['timings'][name]:.1f}s)")
        for chk in sec["checks"]:
            lines.append(f"    [{chk['status']}] {chk['check']}")
    lines.append(f"overall: {report['status']}")
    _emit(args, report, lines)
    return 0 if report["status"] == "PASS" else 1


def cmd_enumerate(args) -> int:
    pair = _parse_profile(args.profile)
    graphs = list(generate(pair))
    codes = [graph6_encode(g.graph) for g in graphs]
    if args.out:
        write_jsonl(args.out / f"candidates_{pair.a}_{pair.b}.jsonl".replace(",", "-"),
                    (graph_to_record(g.graph, profile=str(pair)) for g in graphs))
    _emit(args, {"profile": str(pair), "count": len(codes), "graphs": codes}, codes)
    return 0


def cmd_closure(args) -> int:
    fam = family_closure(_seed(args.seed))
    graphs = fam.graphs()
    if args.out:
        write_jsonl(args.out / "closure.jsonl", (graph_to_record(g) for g in graphs))
    payload = {
        "seed": args.seed,
        "members": len(graphs),
        "bipartite": sum(bipartition(g) is not None for g in graphs),
        "simplified_moves": fam.simplified_moves,
        "graphs": [graph6_encode(g) for g in graphs],
    }
    _emit(args, payload, [f"# {len(graphs)} members"] + payload["graphs"])
    return 0


def cmd_reduce(args) -> int:
    g = graph6_decode(args.graph)
    try:
        a, b = (int(x) for x in args.pair.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad pair {args.pair!r}") from None
    res = reduce(g, a, b)
    rule = elimination_rule(res.reduced)
    payload = {
        "graph6": args.graph,
        "pair": [a, b],
        "edge_count": res.edge_count,
        "reduced": {"order": res.reduced.order, "edges": [list(e) for e in res.reduced.edges()]},
        "count_equation": res.breakdown.as_dict(),
        "is_k33": is_k33(res.reduced),
        "planar": is_planar(res.reduced),
        "verdict": (Verdict.ELIMINATES if rule else Verdict.FAILS).value,
        "rule": rule,
        "trace": [list(s) for s in res.trace],
    }
    lines = [
        f"edge_count {res.edge_count}",
        f"predicted {res.breakdown.predicted} ({json.dumps(res.breakdown.as_dict())})",
        f"verdict {payload['verdict']}" + (f" ({rule})" if rule else ""),
    ]
    _emit(args, payload, lines)
    return 0


def cmd_catalog(args) -> int:
    entry = named(args.name)
    g = entry.graph
    payload = {
        "name": entry.name,
        "order": g.order,
        "edges": g.edge_count,
        "graph6": graph6_encode(g),
        "canonical": canonical_form(g).hex(),
        "bipartite": bipartition(g) is not None,
        "provenance": entry.provenance,
    }
    _emit(args, payload, [payload["graph6"], f"vertices {g.order}", f"edges {g.edge_count}"])
    return 0


COMMANDS = {
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "closure": cmd_closure,
    "reduce": cmd_reduce,
    "catalog": cmd_catalog,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (argparse.ArgumentTypeError, GraphError, FormatError) as exc:
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
