"""Simple undirected graphs with bitmask adjacency.

Vertices are ``0..n-1``; ``adj[v]`` is an int whose bit ``u`` is set iff
``uv`` is an edge. Graphs are immutable and hashable, so solver results can
be memoised on them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_N = 62
INF = float("inf")


class GraphError(ValueError):
    """Invalid argument to a graph operation."""


class SizeError(GraphError):
    """Graph larger than an operation supports."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour index >= n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), name)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def closed(self, v: int) -> int:
        """Closed neighbourhood N[v] as a bitmask."""
        return self.adj[v] | 1 << v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.adj[u] >> v & 1]

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"


# -- graph6 -----------------------------------------------------------------

class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"graph6 byte {offset}: {message}")
        self.offset = offset


_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (short form, ``n <= 62``)."""
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        base = len(_HEADER)
    if not s:
        raise Graph6Error("empty input", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside 63..126", base + i)
    n = ord(s[0]) - 63
    if n > MAX_N:
        raise Graph6Error(f"long-form size prefix unsupported (n > {MAX_N})", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, got {len(s) - 1}", base + min(len(s), 1 + nbytes))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbytes:
        pad = 6 * nbytes - nbits
        if (ord(s[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", base + len(s) - 1)
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    if g.n > MAX_N:
        raise SizeError(f"graph6 short form supports n <= {MAX_N}, got n={g.n}")
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


# -- standard families --------------------------------------------------------

def _need(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message)


def empty_graph(n: int) -> Graph:
    _need(n >= 0, "n must be >= 0")
    return Graph(n, (0,) * n, f"E{n}")


def path(n: int) -> Graph:
    """P_n on x_0..x_{n-1} in walk order."""
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    """C_n on x_0..x_{n-1} in walk order, closing edge x_{n-1}x_0."""
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def star(n: int) -> Graph:
    """K_{1,n}: centre 0, leaves 1..n."""
    _need(n >= 1, "star needs n >= 1")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)], f"K1,{n}")


def complete(n: int) -> Graph:
    _need(n >= 1, "complete needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: part A = 0..m-1, part B = m..m+n-1."""
    _need(m >= 1 and n >= 1, "complete_bipartite needs m, n >= 1")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)], f"K{m},{n}")


def double_star(p: int, q: int) -> Graph:
    """S_{p,q}: centres 0 and 1, then p leaves of 0, then q leaves of 1."""
    _need(p >= 2 and q >= 2, "double_star needs p, q >= 2")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + i) for i in range(q)]
    return Graph.from_edges(2 + p + q, edges, f"S{p},{q}")


# -- operations -----------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Vertices of ``g2`` are shifted by ``g1.n``."""
    return Graph(g1.n + g2.n, g1.adj + tuple(row << g1.n for row in g2.adj))


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices``, renumbered in increasing order."""
    keep = sorted(set(vertices))
    for v in keep:
        _need(0 <= v < g.n, f"vertex {v} not in graph")
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(to_mask(index[u] for u in iter_bits(g.adj[v]) if u in index))
    return Graph(len(keep), tuple(adj))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G - S`` and the old->new index map of the survivors."""
    drop = set(vertices)
    for v in drop:
        _need(0 <= v < g.n, f"vertex {v} not in graph")
    keep = [v for v in range(g.n) if v not in drop]
    return induced(g, keep), {v: i for i, v in enumerate(keep)}


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        _need(0 <= u < g.n and 0 <= v < g.n and adj[u] >> v & 1 == 1, f"edge {u}-{v} not present")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        _need(u != v and 0 <= u < g.n and 0 <= v < g.n, f"bad pair {u}-{v}")
        _need(adj[u] >> v & 1 == 0, f"edge {u}-{v} already present")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def subdivide_edge(g: Graph, edge: tuple[int, int], k: int = 1) -> Graph:
    """Replace ``uv`` by a path through ``k`` new vertices ``n..n+k-1`` (from u to v)."""
    u, v = edge
    _need(k >= 1, "subdivision count must be >= 1")
    _need(g.has_edge(u, v), f"edge {u}-{v} not present")
    edges = [e for e in g.edges() if set(e) != {u, v}]
    chain = [u] + list(range(g.n, g.n + k)) + [v]
    edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(g.n + k, edges)


def cartesian_product(g1: Graph, g2: Graph, max_n: int | None = MAX_N) -> Graph:
    """G1 □ G2 with vertex (i, j) at index ``i * g2.n + j``.

    Pass ``max_n=None`` to lift the size cap (used for large gamma_R-graphs).
    """
    n = g1.n * g2.n
    if max_n is not None and n > max_n:
        raise SizeError(f"product has {n} vertices, limit is {max_n}")
    n2 = g2.n
    adj = []
    for i in range(g1.n):
        for j in range(n2):
            row = g2.adj[j] << (i * n2)
            for k in iter_bits(g1.adj[i]):
                row |= 1 << (k * n2 + j)
            adj.append(row)
    return Graph(n, tuple(adj))


# -- structural queries ---------------------------------------------------------

def degree(g: Graph, v: int) -> int:
    return g.adj[v].bit_count()


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def min_degree(g: Graph) -> int:
    return min(g.degrees(), default=0)


def dist(g: Graph, u: int, v: int) -> float:
    """BFS distance; ``INF`` when u and v lie in different components."""
    if u == v:
        return 0
    seen = 1 << u
    frontier = 1 << u
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= g.adj[w]
        frontier = nxt & ~seen
        if frontier >> v & 1:
            return d
        seen |= frontier
    return INF


def component_masks(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        queue = deque([s])
        while queue:
            w = queue.popleft()
            new = g.adj[w] & ~comp
            comp |= new
            queue.extend(iter_bits(new))
        seen |= comp
        comps.append(comp)
    return comps


def components(g: Graph) -> list[list[int]]:
    return [list(iter_bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(component_masks(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.m == g.n - 1


def has_triangle(g: Graph) -> bool:
    return any(g.adj[u] & g.adj[v] for u, v in g.edges())


def is_star(g: Graph) -> bool:
    """K_{1,r} with r >= 1 (so K_2 counts, K_1 does not)."""
    return is_tree(g) and g.n >= 2 and max_degree(g) == g.n - 1


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        adj[perm[v]] = to_mask(perm[u] for u in iter_bits(g.adj[v]))
    return Graph(g.n, tuple(adj))
