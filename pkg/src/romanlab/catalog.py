"""Exhaustive small-graph catalogs: labelled, unlabelled, trees."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph import Graph
from .iso import canonical_form


def labeled_graphs(n: int):
    """All 2^(n choose 2) labelled graphs on n vertices."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        for k, (u, v) in enumerate(pairs):
            if bits >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def _extend(g: Graph, nbrs: int) -> Graph:
    adj = list(g.adj)
    for u in range(g.n):
        if nbrs >> u & 1:
            adj[u] |= 1 << g.n
    adj.append(nbrs)
    return Graph(g.n + 1, tuple(adj))


@lru_cache(maxsize=None)
def graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class on n vertices."""
    if n == 0:
        return (Graph(0, ()),)
    seen: dict[bytes, Graph] = {}
    for g in graphs(n - 1):
        for nbrs in range(1 << g.n):
            h = _extend(g, nbrs)
            code = canonical_form(h).code
            if code not in seen:
                seen[code] = h
    return tuple(seen[c] for c in sorted(seen))


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of trees on n vertices."""
    if n <= 0:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[bytes, Graph] = {}
    for t in trees(n - 1):
        for v in range(t.n):
            h = _extend(t, 1 << v)
            code = canonical_form(h).code
            if code not in seen:
                seen[code] = h
    return tuple(seen[c] for c in sorted(seen))


def graphs_upto(n: int):
    for k in range(n + 1):
        yield from graphs(k)
