"""Named graphs used as witnesses and gadgets.

Vertex orders are fixed here because function enumeration order (and hence
gamma_R-graph vertex ids) depends on them.
"""

from __future__ import annotations

from .graph import (
    Graph,
    GraphError,
    MAX_N,
    SizeError,
    complete,
    cycle,
    disjoint_union,
    double_star,
    star,
    subdivide_edge,
)


def k4_apex(j: int) -> Graph:
    """K4 on 0..3 plus a vertex 4 joined to K4 vertices 0..j-1 through
    subdivision vertices 5..4+j (one per apex edge, in order)."""
    if not 1 <= j <= 4:
        raise GraphError("k4_apex needs 1 <= j <= 4")
    edges = [(i, k) for i in range(4) for k in range(i + 1, 4)]
    for i in range(j):
        edges += [(4, 5 + i), (5 + i, i)]
    return Graph.from_edges(5 + j, edges, f"K4-apex{j}")


def u_tree(i: int) -> Graph:
    """P5 (0..4) and P_{3+i} (5..) joined between their central vertices."""
    if i not in (1, 2):
        raise GraphError("u_tree index must be 1 or 2")
    m = 3 + i
    edges = [(k, k + 1) for k in range(4)]
    edges += [(5 + k, 6 + k) for k in range(m - 1)]
    edges.append((2, 5 + (m - 1) // 2))
    return Graph.from_edges(5 + m, edges, f"U{i}")


def region_example(i: int) -> Graph:
    """Canonical witness graph for Venn region R_i."""
    if i == 1:
        g = double_star(3, 3)
    elif i == 2:
        g = subdivide_edge(double_star(2, 2), (0, 1), 1)
    elif i == 3:
        g = k4_apex(3)
    elif i == 4:
        g = cycle(6)
    elif i == 5:
        g = star(2)
    elif i == 6:
        g = star(3)
    elif i == 7:
        g = double_star(2, 2)
    elif i == 8:
        g = cycle(7)
    elif i == 9:
        g = cycle(4)
    elif i == 10:
        g = u_tree(2)
    elif i == 11:
        g = disjoint_union(complete(1), star(2))
    else:
        raise GraphError("region index must be in 1..11")
    return Graph(g.n, g.adj, f"R{i}-witness")


def spider(n: int) -> Graph:
    """K_{1,n} with every edge but one subdivided twice.

    Centre 0, unsubdivided leaf 1, then each leg as three vertices in
    order away from the centre.
    """
    if n < 2:
        raise GraphError("spider needs n >= 2")
    edges = [(0, 1)]
    nxt = 2
    for _ in range(n - 1):
        a, b, c = nxt, nxt + 1, nxt + 2
        edges += [(0, a), (a, b), (b, c)]
        nxt += 3
    return Graph.from_edges(nxt, edges, f"T{n}")


def f_h(h: Graph) -> Graph:
    """Gadget whose 1a-gamma_R-graph is isomorphic to ``h``.

    H keeps indices 0..k-1; the K_{1,3} centre is k with leaves k+1..k+3;
    the two K_2's are (k+4, k+5) and (k+6, k+7). Every H vertex is joined
    to the centre and to all four K_2 vertices.
    """
    k = h.n
    if k < 1:
        raise GraphError("f_h needs |V(H)| >= 1")
    if k + 8 > MAX_N:
        raise SizeError(f"f_h would have {k + 8} vertices, limit is {MAX_N}")
    edges = list(h.edges())
    c = k
    edges += [(c, c + 1), (c, c + 2), (c, c + 3), (k + 4, k + 5), (k + 6, k + 7)]
    for v in range(k):
        edges.append((v, c))
        edges += [(v, k + 4 + t) for t in range(4)]
    return Graph.from_edges(k + 8, edges, "F_H")


def named_construction(kind: str, *params) -> Graph:
    if kind == "region_example":
        return region_example(*params)
    if kind == "u_tree":
        return u_tree(*params)
    if kind in ("spider_T", "spider"):
        return spider(*params)
    if kind == "f_h":
        return f_h(*params)
    raise GraphError(f"unknown construction {kind!r}")

