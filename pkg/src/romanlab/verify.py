"""Named check suites shared by the CLI and the test-suite.

A suite is a list of ``Task``s; each task is a module-level function plus
arguments, so suites can be fanned out to worker processes and still be
reported in a fixed order.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import catalog, oracles
from .classify import class_signature, is_k_cvr, venn_region, vertex_partition
from .constructions import region_example, u_tree
from .graph import Graph, cartesian_product, cycle, disjoint_union, path
from .iso import is_isomorphic
from .rdgraph import all_types, build_rdgraph, everytree_graph, fh_realizability_check
from .solver import brute_force_min, enumerate_min

SUITES = ("oracle-paths", "oracle-cycles", "claim-examples", "trees", "fh", "cart", "small-graph-oracle")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class Task:
    name: str
    fn: Callable[..., tuple[bool, str]]
    args: tuple = ()


def _run(task: Task) -> CheckResult:
    try:
        ok, detail = task.fn(*task.args)
    except Exception as exc:  # a crashing check is a failing check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(task.name, bool(ok), detail)


def _family_row(kind: str, n: int) -> tuple[bool, str]:
    if kind == "path":
        g = path(n)
        gamma, count, funcs = oracles.gamma_r_path, oracles.count_path, oracles.path_functions
        classes, kcvr, shape = oracles.path_vertex_classes, oracles.path_kcvr, oracles.rdgraph_1a_shape_path
        limits = (21, 20, 12, 14)
    else:
        g = cycle(n)
        gamma, count, funcs = oracles.gamma_r_cycle, oracles.count_cycle, oracles.cycle_functions
        classes, kcvr, shape = oracles.cycle_vertex_classes, oracles.cycle_kcvr, oracles.rdgraph_1a_shape_cycle
        limits = (18, 20, 12, 14)
    bad = []
    ms = enumerate_min(g)
    if ms.gamma_r != gamma(n):
        bad.append(f"gamma_r {ms.gamma_r} != {gamma(n)}")
    if n <= limits[0]:
        if ms.count != count(n):
            bad.append(f"count {ms.count} != {count(n)}")
        if ms.functions != funcs(n).functions:
            bad.append("function list differs from pattern expansion")
    if n <= limits[1] and vertex_partition(g) != classes(n):
        bad.append("vertex partition differs")
    if n <= limits[2]:
        for s in range(1, n):
            if is_k_cvr(g, s) != kcvr(n, s):
                bad.append(f"k-cvr differs at s={s}")
    if n <= limits[3] and not is_isomorphic(build_rdgraph(g, "1a").as_graph(), shape(n).to_graph()):
        bad.append("1a gamma_R-graph shape differs")
    return not bad, "; ".join(bad) or f"gamma_R={ms.gamma_r} count={ms.count}"


def _region_row(i: int) -> tuple[bool, str]:
    got = venn_region(region_example(i)).label
    return got == f"R{i}", f"witness lands in {got}"


def _distinct_signatures() -> tuple[bool, str]:
    keys = [class_signature(region_example(i)).key() for i in range(1, 12)]
    distinct = len(set(keys))
    return distinct == 11, f"{distinct} distinct signatures among 11 witnesses"


def _trees_regions(nmax: int) -> tuple[bool, str]:
    forbidden = {"R3", "R4", "R8", "R9", "R11"}
    hit: set[str] = set()
    bad = []
    for n in range(3, nmax + 1):
        for t in catalog.trees(n):
            label = venn_region(t).label
            hit.add(label)
            if label in forbidden:
                bad.append(f"tree n={n} in {label}")
    hit.add(venn_region(u_tree(1)).label)
    missing = {"R1", "R2", "R5", "R6", "R7", "R10"} - hit
    if missing:
        bad.append(f"regions not hit: {sorted(missing)}")
    return not bad, "; ".join(bad) or f"regions hit: {sorted(hit)}"


def _trees_cea(nmax: int) -> tuple[bool, str]:
    found = [t for n in range(3, nmax + 1) for t in catalog.trees(n) if class_signature(t).cea]
    expected = [u_tree(1), u_tree(2)]
    ok = len(found) == 2 and all(any(is_isomorphic(t, u) for t in found) for u in expected)
    return ok, f"{len(found)} CEA trees found"


def _everytree_row(t: Graph) -> tuple[bool, str]:
    res = everytree_graph(t)
    rd = build_rdgraph(res.graph, "2").as_graph()
    return is_isomorphic(rd, t), f"G has {res.graph.n} vertices"


def _fh_row(h: Graph) -> tuple[bool, str]:
    rep = fh_realizability_check(h)
    return rep.passed, f"count={rep.count} 1:{rep.type1_ok} 1a:{rep.type1a_ok} 1n:{rep.type1n_ok}"


def _cart_row(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    g1 = _random_graph(rng, rng.randint(1, 6))
    g2 = _random_graph(rng, rng.randint(1, 6))
    types = rng.sample(all_types(), 5)
    union = disjoint_union(g1, g2)
    bad = []
    for t in types:
        lhs = build_rdgraph(union, t).as_graph()
        rhs = cartesian_product(build_rdgraph(g1, t).as_graph(), build_rdgraph(g2, t).as_graph(), max_n=None)
        if not is_isomorphic(lhs, rhs):
            bad.append(t.name)
    return not bad, f"types {[t.name for t in types]}" + (f" failed {bad}" if bad else "")


def _oracle_row(graphs: tuple[Graph, ...], label: str) -> tuple[bool, str]:
    bad = sum(1 for g in graphs if enumerate_min(g).functions != brute_force_min(g).functions)
    return bad == 0, f"{len(graphs)} graphs ({label}), {bad} mismatches"


def _random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def suite_tasks(name: str, seed: int = 0) -> list[Task]:
    if name == "oracle-paths":
        return [Task(f"P{n}", _family_row, ("path", n)) for n in range(1, 31)]
    if name == "oracle-cycles":
        return [Task(f"C{n}", _family_row, ("cycle", n)) for n in range(3, 25)]
    if name == "claim-examples":
        tasks = [Task(f"region_example({i}) in R{i}", _region_row, (i,)) for i in range(1, 12)]
        return tasks + [Task("witness signatures distinct", _distinct_signatures)]
    if name == "trees":
        tasks = [Task("tree regions n=3..10", _trees_regions, (10,)), Task("CEA trees are U1, U2", _trees_cea, (10,))]
        tasks += [
            Task(f"everytree n={t.n} #{k}", _everytree_row, (t,))
            for n in range(1, 6)
            for k, t in enumerate(catalog.trees(n))
        ]
        return tasks
    if name == "fh":
        return [
            Task(f"F_H n={h.n} #{k}", _fh_row, (h,))
            for n in range(1, 6)
            for k, h in enumerate(catalog.graphs(n))
        ]
    if name == "cart":
        rng = random.Random(seed)
        return [Task(f"pair {i}", _cart_row, (rng.randrange(1 << 30),)) for i in range(50)]
    if name == "small-graph-oracle":
        tasks = [Task(f"labelled n={n}", _oracle_row, (tuple(catalog.labeled_graphs(n)), "all")) for n in range(6)]
        rng = random.Random(seed)
        randoms = tuple(_random_graph(rng, rng.randint(6, 10)) for _ in range(500))
        for i in range(0, 500, 50):
            tasks.append(Task(f"random {i}..{i + 49}", _oracle_row, (randoms[i:i + 50], "n in 6..10")))
        return tasks
    raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


def run_suite(name: str, jobs: int = 1, seed: int = 0) -> list[CheckResult]:
    tasks = suite_tasks(name, seed)
    if jobs <= 1:
        return [_run(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run, tasks))
