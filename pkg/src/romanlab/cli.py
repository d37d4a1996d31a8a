"""romanlab command line.

Graphs come in as graph6 lines on stdin (or ``--input FILE``), or from
``--gen FAMILY PARAMS...``; ``romanlab gen`` prints graph6 so commands
can be piped together. Results are JSON with sorted keys, one document
per input graph.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from . import catalog
from .classify import (
    class_signature,
    edge_addition_delta,
    edge_removal_delta,
    is_k_cvr,
    k_cvr_profile,
    venn_region,
    vertex_effect,
)
from .constructions import f_h, region_example, spider, u_tree
from .graph import (
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    cycle,
    double_star,
    empty_graph,
    parse_graph6,
    path,
    star,
    to_graph6,
)
from .rdgraph import PREDICATES, GammaRGraph, build_rdgraph, parse_type
from .solver import BudgetError, enumerate_min, gamma_r
from .verify import SUITES, run_suite

SCHEMA = "romanlab/1"

# default per-command vertex budgets; --budget overrides
BUDGETS = {"solve": 62, "enumerate": 48, "classify": 32, "critical": 24, "rdgraph": 40}

FAMILIES: dict[str, Callable[..., Graph]] = {
    "empty": empty_graph,
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "double_star": double_star,
    "region_example": region_example,
    "u_tree": u_tree,
    "spider": spider,
}


def generate(family: str, params: list[str]) -> list[Graph]:
    """Graphs named by a family and its parameters."""
    if family == "f_h":
        if len(params) != 1:
            raise GraphError("f_h takes one graph6 argument (the graph H)")
        return [f_h(parse_graph6(params[0]))]
    if family in ("graphs", "trees"):
        if len(params) != 1:
            raise GraphError(f"{family} takes one argument n")
        n = int(params[0])
        return list(catalog.graphs(n) if family == "graphs" else catalog.trees(n))
    if family not in FAMILIES:
        known = sorted([*FAMILIES, "f_h", "graphs", "trees"])
        raise GraphError(f"unknown family {family!r}; known: {', '.join(known)}")
    try:
        args = [int(p) for p in params]
    except ValueError:
        raise GraphError(f"parameters of {family} must be integers, got {params}") from None
    try:
        return [FAMILIES[family](*args)]
    except TypeError:
        raise GraphError(f"wrong number of parameters for {family}: {params}") from None


def _read_graphs(args) -> list[Graph]:
    if args.gen:
        return generate(args.gen[0], args.gen[1:])
    stream = open(args.input) if args.input else sys.stdin
    try:
        lines = [line.strip() for line in stream if line.strip()]
    finally:
        if args.input:
            stream.close()
    if not lines:
        raise GraphError("no graph6 input")
    return [parse_graph6(line) for line in lines]


def _check_budget(g: Graph, args) -> None:
    limit = args.budget if args.budget is not None else BUDGETS[args.command]
    if g.n > limit:
        raise BudgetError(f"{args.command}: graph has n={g.n} vertices, budget is {limit} (raise with --budget)")


def _report(command: str, g: Graph, result: dict) -> dict:
    return {"schema": SCHEMA, "command": command, "graph6": to_graph6(g), "result": result}


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True)


# -- per-graph commands --------------------------------------------------------

def _solve(g: Graph, args) -> dict:
    w, f = gamma_r(g)
    return {"gamma_r": w, "witness": str(f)}


def _enumerate(g: Graph, args) -> dict:
    ms = enumerate_min(g)
    return {"gamma_r": ms.gamma_r, "count": ms.count, "functions": ms.labels()}


def _classify(g: Graph, args) -> dict:
    what = args.what
    if what == "vertices":
        effects = [vertex_effect(g, v) for v in range(g.n)]
        parts = {k: [v for v, e in enumerate(effects) if e.kind == k] for k in ("minus", "equal", "plus")}
        return {**parts, "deltas": [e.delta for e in effects]}
    if what == "edges":
        return {
            "removal": [{"edge": list(e), "delta": edge_removal_delta(g, e)} for e in g.edges()],
            "addition": [{"edge": list(e), "delta": edge_addition_delta(g, e)} for e in g.non_edges()],
        }
    if what == "signature":
        return class_signature(g).as_dict()
    return {"region": venn_region(g).label}


def _critical(g: Graph, args) -> dict:
    if args.kmax is not None:
        return {"kmax": args.kmax, "profile": k_cvr_profile(g, args.kmax)}
    return {"k": args.k, "k_cvr": is_k_cvr(g, args.k)}


def _edge_label(names) -> str:
    return ",".join(p for p in PREDICATES if p in names)


def rdgraph_json(rd: GammaRGraph) -> dict:
    labels = [str(f) for f in rd.functions]
    return {
        "type": rd.type.name,
        "vertices": labels,
        "edges": [
            {"u": labels[i], "v": labels[j], "predicates": [p for p in PREDICATES if p in names]}
            for (i, j), names in sorted(rd.edges.items())
        ],
    }


def rdgraph_dot(rd: GammaRGraph) -> str:
    labels = [str(f) for f in rd.functions]
    lines = [f'graph "{rd.type.name}" {{']
    lines += [f'  "{s}";' for s in labels]
    for (i, j), names in sorted(rd.edges.items()):
        lines.append(f'  "{labels[i]}" -- "{labels[j]}" [label="{_edge_label(names)}"];')
    lines.append("}")
    return "\n".join(lines)


def _rdgraph(g: Graph, args):
    rd = build_rdgraph(g, args.adj_type)
    if args.format == "dot":
        return rdgraph_dot(rd)
    return rdgraph_json(rd)


PER_GRAPH = {
    "solve": _solve,
    "enumerate": _enumerate,
    "classify": _classify,
    "critical": _critical,
    "rdgraph": _rdgraph,
}


def _per_graph(args, out) -> int:
    if args.command == "rdgraph":
        args.adj_type = parse_type(args.type)
    if args.command == "critical" and args.k is None and args.kmax is None:
        raise GraphError("critical needs --k or --kmax")
    for g in _read_graphs(args):
        _check_budget(g, args)
        payload = PER_GRAPH[args.command](g, args)
        if isinstance(payload, str):
            print(payload, file=out)
        elif getattr(args, "text", False):
            print(_text(args.command, payload), file=out)
        else:
            print(_dump(_report(args.command, g, payload)), file=out)
    return 0


def _text(command: str, payload: dict) -> str:
    if command == "classify" and "region" in payload:
        return payload["region"]
    if command == "solve":
        return f"{payload['gamma_r']} {payload['witness']}"
    if command == "enumerate":
        return "\n".join(payload["functions"])
    return _dump(payload)


# -- gen / verify --------------------------------------------------------------

def _gen(args, out) -> int:
    for g in generate(args.family, args.params):
        print(to_graph6(g), file=out)
    return 0


def _verify(args, out) -> int:
    results = run_suite(args.suite, jobs=args.jobs, seed=args.seed)
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{r.name:<{width}}  {'pass' if r.passed else 'FAIL'}  {r.detail}", file=out)
    failed = sum(not r.passed for r in results)
    print(f"{args.suite}: {len(results) - failed}/{len(results)} checks passed", file=out)
    return 1 if failed else 0


def _default_jobs() -> int:
    raw = os.environ.get("ROMANLAB_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="romanlab", description="Exact Roman domination toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("--input", help="file of graph6 lines (default: stdin)")
        p.add_argument("--gen", nargs="+", metavar="ARG", help="generate the input: FAMILY PARAMS...")
        p.add_argument("--budget", type=int, help="maximum number of vertices accepted")

    p = sub.add_parser("solve", help="gamma_R and one minimum Roman dominating function")
    graph_input(p)
    p.add_argument("--text", action="store_true", help="plain text instead of JSON")

    p = sub.add_parser("enumerate", help="all minimum Roman dominating functions")
    graph_input(p)
    p.add_argument("--text", action="store_true")

    p = sub.add_parser("classify", help="mutation effects, class signature or Venn region")
    p.add_argument("what", choices=["vertices", "edges", "signature", "region"])
    graph_input(p)
    p.add_argument("--text", action="store_true")

    p = sub.add_parser("critical", help="k-criticality under vertex removal")
    graph_input(p)
    p.add_argument("--k", type=int)
    p.add_argument("--kmax", type=int, help="report the profile for k = 1..KMAX")

    p = sub.add_parser("rdgraph", help="gamma_R-graph for an adjacency type")
    graph_input(p)
    p.add_argument("--type", required=True, help="adjacency type, e.g. 1a, 1a3, 1234")
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = sub.add_parser("gen", help="print graph6 for a named family")
    p.add_argument("family")
    p.add_argument("params", nargs="*")

    p = sub.add_parser("verify", help="run a named check suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes (env ROMANLAB_JOBS)")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            return _gen(args, out)
        if args.command == "verify":
            return _verify(args, out)
        return _per_graph(args, out)
    except (GraphError, OSError, ValueError) as exc:
        print(f"romanlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
