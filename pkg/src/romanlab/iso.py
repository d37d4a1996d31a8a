"""Exact canonical labelling by colour refinement plus individualisation.

Disconnected graphs are canonised component by component; connected graphs
whose complement is disconnected go through the complement. What remains is
searched with the usual individualisation-refinement tree, pruned by
automorphisms discovered at equal leaves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complement, component_masks, induced, iter_bits


@dataclass(frozen=True)
class CanonicalForm:
    perm: tuple[int, ...]  # perm[v] = canonical position of vertex v
    code: bytes


def _refine(adj: tuple[int, ...], colors: list[int]) -> list[int]:
    n = len(adj)
    ncells = len(set(colors))
    nbrs = [list(iter_bits(row)) for row in adj]
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)]
        keys = sorted(set(sig))
        if len(keys) == ncells:
            index = {k: i for i, k in enumerate(keys)}
            return [index[s] for s in sig]
        index = {k: i for i, k in enumerate(keys)}
        colors = [index[s] for s in sig]
        ncells = len(keys)


def _individualize(colors: list[int], v: int) -> list[int]:
    return [2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]


class _Search:
    def __init__(self, adj: tuple[int, ...]) -> None:
        self.adj = adj
        self.n = len(adj)
        self.best: tuple | None = None
        self.best_order: list[int] | None = None
        self.leaves: dict[tuple, list[int]] = {}
        self.auts: list[tuple[int, ...]] = []

    def leaf(self, colors: list[int]) -> None:
        order = [0] * self.n  # order[pos] = vertex
        for v, c in enumerate(colors):
            order[c] = v
        code = tuple(
            sum(1 << colors[u] for u in iter_bits(self.adj[v])) for v in order
        )
        seen = self.leaves.get(code)
        if seen is not None:
            # both orders produce the same labelled graph
            aut = [0] * self.n
            for a, b in zip(order, seen):
                aut[a] = b
            self.auts.append(tuple(aut))
            return
        self.leaves[code] = order
        if self.best is None or code > self.best:
            self.best, self.best_order = code, order

    def orbit_rep(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for aut in self.auts:
            if all(aut[p] == p for p in prefix):
                for v, w in enumerate(aut):
                    a, b = find(v), find(w)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def run(self, colors: list[int], prefix: list[int]) -> None:
        colors = _refine(self.adj, colors)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            self.leaf(colors)
            return
        cell = [v for v in range(self.n) if colors[v] == target]
        done: list[int] = []
        for v in cell:
            if done:
                rep = self.orbit_rep(prefix)
                if any(rep[v] == rep[t] for t in done):
                    continue
            done.append(v)
            self.run(_individualize(colors, v), prefix + [v])


def _canon(g: Graph) -> tuple[tuple, list[int]]:
    """Return (code, order) where order lists vertices in canonical position."""
    n = g.n
    if n <= 1:
        return ("G", n, (0,) * n), list(range(n))
    comps = component_masks(g)
    if len(comps) > 1:
        parts = []
        for mask in comps:
            verts = list(iter_bits(mask))
            code, order = _canon(induced(g, verts))
            parts.append((code, [verts[i] for i in order]))
        parts.sort(key=lambda p: p[0])
        return ("D", tuple(p[0] for p in parts)), [v for p in parts for v in p[1]]
    co = complement(g)
    if len(component_masks(co)) > 1:
        code, order = _canon(co)
        return ("C", code), order
    search = _Search(g.adj)
    search.run([0] * n, [])
    assert search.best is not None and search.best_order is not None
    return ("G", n, search.best), search.best_order


def canonical_form(g: Graph) -> CanonicalForm:
    code, order = _canon(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return CanonicalForm(tuple(perm), repr(code).encode())


def invariant_key(g: Graph) -> tuple:
    return g.n, g.m, tuple(sorted(g.degrees()))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if invariant_key(g1) != invariant_key(g2):
        return False
    return canonical_form(g1).code == canonical_form(g2).code


def find_isomorphism(g1: Graph, g2: Graph) -> list[int] | None:
    """A vertex map ``g1 -> g2`` preserving adjacency, or None."""
    if invariant_key(g1) != invariant_key(g2):
        return None
    c1, c2 = canonical_form(g1), canonical_form(g2)
    if c1.code != c2.code:
        return None
    inv2 = [0] * g2.n
    for v, pos in enumerate(c2.perm):
        inv2[pos] = v
    return [inv2[c1.perm[v]] for v in range(g1.n)]
