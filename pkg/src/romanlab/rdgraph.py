"""gamma_R-graphs: reconfiguration graphs on the set of gamma_R-functions.

Two gamma_R-functions are joined when one elementary move turns one into
the other. The base moves are

    1   swap a 2 and a 0 (1a: the two vertices adjacent, 1n: not adjacent)
    2   swap a 2 and a 1
    3   two adjacent 1's become a 2 and a 0
    4   a triangle labelled 1, 1, 0 becomes 0, 0, 2

and an adjacency type is a disjunction of at most one 1-variant with any
subset of {2, 3, 4}, giving 31 types.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .graph import MAX_N, Graph, GraphError, SizeError, complement, complete, is_tree, iter_bits, to_mask
from .constructions import f_h
from .iso import find_isomorphism
from .solver import MinSet, RDFunction, enumerate_min

PREDICATES = ("1", "1a", "1n", "2", "3", "4")
ONE_VARIANTS = ("none", "1", "1a", "1n")


class TypeParseError(GraphError):
    pass


@dataclass(frozen=True)
class AdjacencyType:
    one_variant: str = "none"
    p2: bool = False
    p3: bool = False
    p4: bool = False

    def __post_init__(self) -> None:
        if self.one_variant not in ONE_VARIANTS:
            raise TypeParseError(f"unknown 1-variant {self.one_variant!r}")
        if self.one_variant == "none" and not (self.p2 or self.p3 or self.p4):
            raise TypeParseError("an adjacency type needs at least one predicate")

    @property
    def predicates(self) -> frozenset[str]:
        out = set() if self.one_variant == "none" else {self.one_variant}
        out |= {p for p, on in (("2", self.p2), ("3", self.p3), ("4", self.p4)) if on}
        return frozenset(out)

    @property
    def name(self) -> str:
        head = "" if self.one_variant == "none" else self.one_variant
        return head + "".join(p for p, on in (("2", self.p2), ("3", self.p3), ("4", self.p4)) if on)

    def __str__(self) -> str:
        return self.name


_TOKEN = re.compile(r"1[an]?|[234]")


def parse_type(name: str) -> AdjacencyType:
    text = name.strip()
    if not text:
        raise TypeParseError("empty adjacency type")
    tokens = []
    pos = 0
    for m in _TOKEN.finditer(text):
        if m.start() != pos:
            raise TypeParseError(f"unknown token at position {pos} in {name!r}")
        tokens.append(m.group())
        pos = m.end()
    if pos != len(text):
        raise TypeParseError(f"unknown token at position {pos} in {name!r}")
    if len(set(tokens)) != len(tokens):
        raise TypeParseError(f"repeated predicate in {name!r}")
    ones = [t for t in tokens if t.startswith("1")]
    if len(ones) > 1:
        raise TypeParseError(f"at most one of 1, 1a, 1n allowed in {name!r}")
    return AdjacencyType(
        one_variant=ones[0] if ones else "none",
        p2="2" in tokens,
        p3="3" in tokens,
        p4="4" in tokens,
    )


def all_types() -> list[AdjacencyType]:
    """The 31 adjacency types, ordered by canonical name length then name."""
    out = []
    for one, p2, p3, p4 in product(ONE_VARIANTS, (False, True), (False, True), (False, True)):
        if one == "none" and not (p2 or p3 or p4):
            continue
        out.append(AdjacencyType(one, p2, p3, p4))
    return sorted(out, key=lambda t: (len(t.predicates), t.name))


# -- base predicates ------------------------------------------------------------

def _diff(f: RDFunction, g: RDFunction) -> list[int]:
    return [v for v, (a, b) in enumerate(zip(f.labels, g.labels)) if a != b]


def _swap(f: RDFunction, g: RDFunction, hi: int, lo: int) -> tuple[int, int] | None:
    """(u, v) if f, g differ exactly at u, v with f=(hi, lo) and g=(lo, hi) there."""
    d = _diff(f, g)
    if len(d) != 2:
        return None
    for u, v in (d, d[::-1]):
        if f[u] == hi and f[v] == lo and g[u] == lo and g[v] == hi:
            return u, v
    return None


def _p1_pair(f, g):
    return _swap(f, g, 2, 0) or _swap(g, f, 2, 0)


def p1(graph: Graph, f: RDFunction, g: RDFunction) -> bool:
    return _p1_pair(f, g) is not None


def p1a(graph: Graph, f: RDFunction, g: RDFunction) -> bool:
    uv = _p1_pair(f, g)
    return uv is not None and graph.has_edge(*uv)


def p1n(graph: Graph, f: RDFunction, g: RDFunction) -> bool:
    uv = _p1_pair(f, g)
    return uv is not None and not graph.has_edge(*uv)


def p2(graph: Graph, f: RDFunction, g: RDFunction) -> bool:
    # no adjacency condition between the swapped vertices
    return (_swap(f, g, 2, 1) or _swap(g, f, 2, 1)) is not None


def _p3_dir(graph, f, g) -> bool:
    d = _diff(f, g)
    if len(d) != 2:
        return False
    u, v = d
    return f[u] == f[v] == 1 and {g[u], g[v]} == {0, 2} and graph.has_edge(u, v)


def p3(graph: Graph, f: RDFunction, g: RDFunction) -> bool:
    return _p3_dir(graph, f, g) or _p3_dir(graph, g, f)


def _p4_dir(graph, f, g) -> bool:
    d = _diff(f, g)
    if len(d) != 3:
        return False
    ones = [x for x in d if f[x] == 1 and g[x] == 0]
    tops = [x for x in d if f[x] == 0 and g[x] == 2]
    if len(ones) != 2 or len(tops) != 1:
        return False
    u, v = ones
    w = tops[0]
    return graph.has_edge(u, v) and graph.has_edge(v, w) and graph.has_edge(u, w)


def p4(graph: Graph, f: RDFunction, g: RDFunction) -> bool:
    return _p4_dir(graph, f, g) or _p4_dir(graph, g, f)


_PRED_FUNCS = {"1": p1, "1a": p1a, "1n": p1n, "2": p2, "3": p3, "4": p4}


def fired(graph: Graph, f: RDFunction, g: RDFunction) -> frozenset[str]:
    """Names of the base predicates holding for the unordered pair {f, g}."""
    return frozenset(name for name, fn in _PRED_FUNCS.items() if fn(graph, f, g))


def check_members(ms: MinSet, *fs: RDFunction) -> None:
    for f in fs:
        if f not in ms:
            raise GraphError(f"{f} is not a gamma_R-function of the graph")


# -- gamma_R-graph --------------------------------------------------------------

@dataclass(frozen=True)
class GammaRGraph:
    base: Graph
    type: AdjacencyType
    minset: MinSet
    edges: dict[tuple[int, int], frozenset[str]]  # (i, j), i < j -> firing predicates

    @property
    def functions(self) -> tuple[RDFunction, ...]:
        return self.minset.functions

    @property
    def order(self) -> int:
        return len(self.minset.functions)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def as_graph(self) -> Graph:
        adj = [0] * self.order
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return Graph(self.order, tuple(adj))


@lru_cache(maxsize=1 << 12)
def predicate_edges(g: Graph) -> dict[tuple[int, int], frozenset[str]]:
    """All function pairs on which at least one base predicate fires."""
    funcs = enumerate_min(g).functions
    out = {}
    for i, j in combinations(range(len(funcs)), 2):
        f, h = funcs[i], funcs[j]
        # every base move changes 2 or 3 labels
        if not 2 <= sum(a != b for a, b in zip(f.labels, h.labels)) <= 3:
            continue
        names = fired(g, f, h)
        if names:
            out[(i, j)] = names
    return out


def build_rdgraph(g: Graph, t: AdjacencyType | str) -> GammaRGraph:
    if isinstance(t, str):
        t = parse_type(t)
    want = t.predicates
    edges = {e: names & want for e, names in predicate_edges(g).items() if names & want}
    return GammaRGraph(g, t, enumerate_min(g), edges)


# -- constructions realising prescribed gamma_R-graphs ---------------------------

@dataclass(frozen=True)
class EverytreeResult:
    graph: Graph
    functions: tuple[RDFunction, ...]  # functions[i] corresponds to tree vertex i


def everytree_graph(tree: Graph, max_n: int = MAX_N) -> EverytreeResult:
    """A graph whose type-2 gamma_R-graph is isomorphic to ``tree``.

    Inductive: drop the highest-indexed leaf v (neighbour p), build for the
    smaller tree, hang three leaves on every 2-vertex of p's function, join
    a new vertex x to all of them and glue a K_{2,3} at x.
    """
    if not is_tree(tree):
        raise GraphError("everytree_graph needs a tree")
    n = tree.n
    if n == 1:
        return EverytreeResult(Graph(1, (0,)), (RDFunction((1,)),))
    if n == 2:
        # K_{2,3}: 0, 1 the degree-3 side
        k23 = Graph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
        return EverytreeResult(k23, (RDFunction((2, 1, 0, 0, 0)), RDFunction((1, 2, 0, 0, 0))))
    leaf = max(v for v in range(n) if tree.adj[v].bit_count() == 1)
    parent = next(iter_bits(tree.adj[leaf]))
    keep = [v for v in range(n) if v != leaf]
    index = {v: i for i, v in enumerate(keep)}
    smaller = Graph(n - 1, tuple(to_mask(index[u] for u in iter_bits(tree.adj[v]) if u != leaf) for v in keep))
    sub = everytree_graph(smaller, max_n)
    g0, fs = sub.graph, sub.functions
    f_p = fs[index[parent]]
    twos = sorted(f_p.v2)
    size = g0.n + 3 * len(twos) + 5
    if size > max_n:
        raise SizeError(f"everytree construction needs {size} vertices, limit is {max_n}")
    edges = list(g0.edges())
    nxt = g0.n
    leaves = []
    for u in twos:
        for _ in range(3):
            edges.append((u, nxt))
            leaves.append(nxt)
            nxt += 1
    x, w = nxt, nxt + 1
    mids = [nxt + 2, nxt + 3, nxt + 4]
    edges += [(x, a) for a in leaves]
    edges += [(x, c) for c in mids] + [(w, c) for c in mids]
    g = Graph.from_edges(size, edges)
    pad = (0,) * len(leaves)
    out = [None] * n
    for v in keep:
        out[v] = RDFunction(fs[index[v]].labels + pad + (2, 1, 0, 0, 0))
    out[leaf] = RDFunction(f_p.labels + pad + (1, 2, 0, 0, 0))
    return EverytreeResult(g, tuple(out))


@dataclass(frozen=True)
class FHReport:
    passed: bool
    count_ok: bool
    type1_ok: bool
    type1a_ok: bool
    type1n_ok: bool
    gamma_r: int
    count: int
    witness_1a: list[int] | None  # H vertex -> gamma_R-graph vertex, when found


def fh_realizability_check(h: Graph) -> FHReport:
    fg = f_h(h)
    ms = enumerate_min(fg)
    count_ok = ms.count == h.n
    g1 = build_rdgraph(fg, "1").as_graph()
    g1a = build_rdgraph(fg, "1a").as_graph()
    g1n = build_rdgraph(fg, "1n").as_graph()
    iso1 = find_isomorphism(g1, complete(h.n)) if count_ok else None
    iso1a = find_isomorphism(h, g1a) if count_ok else None
    iso1n = find_isomorphism(g1n, complement(h)) if count_ok else None
    ok = count_ok and None not in (iso1, iso1a, iso1n)
    return FHReport(ok, count_ok, iso1 is not None, iso1a is not None, iso1n is not None,
                    ms.gamma_r, ms.count, iso1a)


def max_v2(ms: MinSet) -> int:
    return max((len(f.v2) for f in ms.functions), default=0)

