"""Closed-form answers for paths and cycles.

Everything here is arithmetic or explicit pattern expansion; nothing calls
the solver. Tests compare these against the search.

Label sequences are built from the block ``020`` repeated k times, written
``B(k)`` below.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .graph import Graph, GraphError, cycle, disjoint_union, empty_graph, path
from .solver import MinSet, RDFunction


def _check_path(n: int) -> None:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")


def _check_cycle(n: int) -> None:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")


def _block(k: int) -> tuple[int, ...]:
    return (0, 2, 0) * k


def gamma_r_path(n: int) -> int:
    _check_path(n)
    return ceil(2 * n / 3)


def gamma_r_cycle(n: int) -> int:
    _check_cycle(n)
    return ceil(2 * n / 3)


def count_path(n: int) -> int:
    _check_path(n)
    r = n % 3
    if r == 0:
        return 1
    if r == 1:
        return (n + 2) // 3
    return (n + 4) * (n + 7) // 18


def count_cycle(n: int) -> int:
    _check_cycle(n)
    r = n % 3
    if r == 0:
        return 3
    if r == 1:
        return n
    return n * (n + 7) // 6


def _finish(g: Graph, seqs: set[tuple[int, ...]], expected: int) -> MinSet:
    if len(seqs) != expected:
        raise AssertionError(f"pattern expansion gave {len(seqs)} functions, closed form says {expected}")
    weights = {sum(s) for s in seqs}
    if len(weights) != 1:
        raise AssertionError(f"patterns disagree on weight: {sorted(weights)}")
    funcs = tuple(sorted(RDFunction(s) for s in seqs))
    return MinSet(g, weights.pop(), funcs)


def path_functions(n: int) -> MinSet:
    """All gamma_R-functions of P_n from the three residue-class patterns."""
    _check_path(n)
    q, r = divmod(n, 3)
    seqs: set[tuple[int, ...]] = set()
    if r == 0:
        seqs.add(_block(q))
    elif r == 1:
        for p in range(q + 1):
            seqs.add(_block(p) + (1,) + _block(q - p))
    else:
        for s in range(q + 1):
            for p in range(q + 1 - s):
                seqs.add(_block(s) + (1,) + _block(p) + (1,) + _block(q - s - p))
        seqs.add((2, 0) + _block(q))
        for k in range(q + 1):
            seqs.add(_block(k) + (0, 2) + _block(q - k))
    return _finish(path(n), seqs, count_path(n))


def _rotations(seq: tuple[int, ...]):
    """Labelings f with (f(x_k), ..., f(x_{k+n-1})) = seq, for every start k."""
    n = len(seq)
    for k in range(n):
        labels = [0] * n
        for i, x in enumerate(seq):
            labels[(k + i) % n] = x
        yield tuple(labels)


def cycle_functions(n: int) -> MinSet:
    """All gamma_R-functions of C_n: every rotation of each pattern."""
    _check_cycle(n)
    q, r = divmod(n, 3)
    patterns: list[tuple[int, ...]] = []
    if r == 0:
        patterns.append(_block(q))
    elif r == 1:
        patterns.append((1,) + _block(q))
    else:
        patterns.append(_block(q) + (0, 2))
        for a in range(q + 1):
            patterns.append((1,) + _block(a) + (1,) + _block(q - a))
    seqs = {rot for p in patterns for rot in _rotations(p)}
    return _finish(cycle(n), seqs, count_cycle(n))


def _partition(n: int, minus: set[int]) -> tuple[frozenset, frozenset, frozenset]:
    return frozenset(minus), frozenset(set(range(n)) - minus), frozenset()


def path_vertex_classes(n: int) -> tuple[frozenset, frozenset, frozenset]:
    """(V^-, V^=, V^+) of P_n by residue of the vertex index."""
    _check_path(n)
    r = n % 3
    if r == 0:
        minus: set[int] = set()
    elif r == 1:
        minus = {v for v in range(n) if v % 3 == 0}
    else:
        minus = {v for v in range(n) if v % 3 != 2}
    return _partition(n, minus)


def cycle_vertex_classes(n: int) -> tuple[frozenset, frozenset, frozenset]:
    _check_cycle(n)
    return _partition(n, set() if n % 3 == 0 else set(range(n)))


def _check_s(n: int, s: int) -> None:
    if not 1 <= s < n:
        raise GraphError(f"need 1 <= s < n, got s={s}, n={n}")


def path_kcvr(n: int, s: int) -> bool:
    _check_path(n)
    _check_s(n, s)
    return s >= n // 3 + 1


def cycle_kcvr(n: int, s: int) -> bool:
    _check_cycle(n)
    _check_s(n, s)
    return n % 3 != 0 or s >= n // 3 + 1


@dataclass(frozen=True)
class ShapeDescriptor:
    """Isolated vertices plus at most one path or cycle component."""

    isolated_count: int
    connected_part: str = "none"  # "none", "path" or "cycle"
    length: int = 0  # vertex count of the connected part

    def to_graph(self) -> Graph:
        g = empty_graph(self.isolated_count)
        if self.connected_part == "path":
            g = disjoint_union(g, path(self.length))
        elif self.connected_part == "cycle":
            g = disjoint_union(g, cycle(self.length))
        return g


def rdgraph_1a_shape_path(n: int) -> ShapeDescriptor:
    _check_path(n)
    if n % 3 != 2:
        return ShapeDescriptor(count_path(n))
    return ShapeDescriptor((n + 1) * (n + 4) // 18, "path", n // 3 + 2)


def rdgraph_1a_shape_cycle(n: int) -> ShapeDescriptor:
    _check_cycle(n)
    if n == 3:
        # C3 = K3: the three single-2 functions are pairwise 1a-adjacent
        return ShapeDescriptor(0, "cycle", 3)
    r = n % 3
    if r == 0:
        return ShapeDescriptor(3)
    if r == 1:
        return ShapeDescriptor(n)
    return ShapeDescriptor(n * (n + 1) // 6, "cycle", n)


def ceil23_identity(a: int, b: int) -> tuple[bool, bool]:
    """(inequality holds, equality predicted by the residue condition)."""
    if a < 0 or b < 0:
        raise GraphError("a and b must be nonnegative")
    if a > b:
        raise GraphError(f"need a <= b, got a={a}, b={b}")
    holds = ceil(2 * a / 3) + ceil(2 * (b - a) / 3) >= ceil(2 * b / 3)
    equality = any(
        a % 3 == p and b % 3 == q
        for p in range(3)
        for q in range(p, 3)
    )
    return holds, equality
