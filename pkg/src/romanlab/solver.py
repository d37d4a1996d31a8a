"""Exact Roman domination.

A minimum-weight Roman dominating function is determined by its 2-labelled
set ``D``: label ``D`` with 2, ``N[D] - D`` with 0 and everything else with
1, for weight ``w(D) = 2|D| + n - |N[D]|``. The solver searches over ``D``
by branch and bound and collects every ``D`` attaining the minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, GraphError, iter_bits, to_mask

BRUTE_FORCE_MAX_N = 13


class BudgetError(GraphError):
    """Instance exceeds a configured size budget."""


@dataclass(frozen=True, order=True)
class RDFunction:
    labels: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> RDFunction:
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_twos(cls, g: Graph, twos: int) -> RDFunction:
        dom = twos
        for v in iter_bits(twos):
            dom |= g.adj[v]
        return cls(tuple(2 if twos >> v & 1 else 0 if dom >> v & 1 else 1 for v in range(g.n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def weight(self) -> int:
        return sum(self.labels)

    def level(self, i: int) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == i)

    def level_mask(self, i: int) -> int:
        return to_mask(v for v, x in enumerate(self.labels) if x == i)

    @property
    def v0(self) -> frozenset[int]:
        return self.level(0)

    @property
    def v1(self) -> frozenset[int]:
        return self.level(1)

    @property
    def v2(self) -> frozenset[int]:
        return self.level(2)

    def __str__(self) -> str:
        return "".join(map(str, self.labels))

    def __getitem__(self, v: int) -> int:
        return self.labels[v]


@dataclass(frozen=True)
class MinSet:
    graph: Graph
    gamma_r: int
    functions: tuple[RDFunction, ...]

    @property
    def count(self) -> int:
        return len(self.functions)

    def __contains__(self, f: RDFunction) -> bool:
        return f in self._index

    @property
    def _index(self) -> frozenset[RDFunction]:
        return frozenset(self.functions)

    def labels(self) -> list[str]:
        return [str(f) for f in self.functions]


def is_rdf(g: Graph, f: RDFunction | Sequence[int]) -> bool:
    labels = f.labels if isinstance(f, RDFunction) else tuple(f)
    if len(labels) != g.n:
        raise GraphError(f"labelling has length {len(labels)}, graph has {g.n} vertices")
    twos = to_mask(v for v, x in enumerate(labels) if x == 2)
    return all(x != 0 or g.adj[v] & twos for v, x in enumerate(labels))


def _search(g: Graph) -> tuple[int, list[int]]:
    """Branch and bound over 2-labelled sets; returns (gamma_R, all optimal sets)."""
    n = g.n
    closed = [g.adj[v] | 1 << v for v in range(n)]
    best = n  # all-ones labelling
    found: list[int] = []

    def visit(twos: int, cost2: int, allowed: int, undom: int) -> None:
        nonlocal best, found
        # undominated vertices no allowed vertex can reach are stuck at label 1
        forced = 0
        coverage: dict[int, int] = {}
        open_ = 0
        for u in iter_bits(undom):
            cand = closed[u] & allowed
            if not cand:
                forced |= 1 << u
            else:
                open_ |= 1 << u
        base = cost2 + forced.bit_count()
        if not open_:
            if base < best:
                best, found = base, [twos]
            elif base == best:
                found.append(twos)
            return
        # each open vertex pays at least min(1, 2 / coverage of its best dominator)
        bound = 0.0
        pick, pick_opts = -1, n + 1
        for c in iter_bits(allowed):
            k = (closed[c] & open_).bit_count()
            if k:
                coverage[c] = k
        for u in iter_bits(open_):
            cand = closed[u] & allowed
            m = max(coverage[c] for c in iter_bits(cand))
            bound += 1.0 if m <= 2 else 2.0 / m
            opts = cand.bit_count()
            if opts < pick_opts:
                pick, pick_opts = u, opts
        if base + ceil(bound - 1e-9) > best:
            return
        cands = sorted(iter_bits(closed[pick] & allowed), key=lambda c: (-coverage[c], c))
        excluded = 0
        for c in cands:
            visit(twos | 1 << c, cost2 + 2, allowed & ~excluded & ~(1 << c), undom & ~closed[c])
            excluded |= 1 << c
        # pick keeps label 1: none of N[pick] may carry a 2
        visit(twos, cost2, allowed & ~excluded, undom)

    visit(0, 0, g.full, g.full)
    return best, found


@lru_cache(maxsize=1 << 18)
def _solve(g: Graph) -> tuple[int, tuple[int, ...]]:
    gamma, sets = _search(g)
    return gamma, tuple(sets)


def gamma_r(g: Graph) -> tuple[int, RDFunction]:
    """gamma_R(g) and the lexicographically least gamma_R-function."""
    ms = enumerate_min(g)
    return ms.gamma_r, ms.functions[0] if ms.functions else RDFunction(())


def gamma_r_value(g: Graph) -> int:
    return _solve(g)[0]


@lru_cache(maxsize=1 << 16)
def enumerate_min(g: Graph) -> MinSet:
    gamma, sets = _solve(g)
    funcs = sorted(RDFunction.from_twos(g, d) for d in sets)
    return MinSet(g, gamma, tuple(funcs))


def brute_force_min(g: Graph) -> MinSet:
    """Reference answer from all 3^n labellings (n <= 13)."""
    n = g.n
    if n > BRUTE_FORCE_MAX_N:
        raise BudgetError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got n={n}")
    if n == 0:
        return MinSet(g, 0, (RDFunction(()),))
    a = np.array([[(g.adj[v] >> u) & 1 for u in range(n)] for v in range(n)], dtype=np.int32)
    powers = 3 ** np.arange(n, dtype=np.int64)
    best = None
    keep: list[np.ndarray] = []
    total = 3**n
    step = 3**10
    for start in range(0, total, step):
        idx = np.arange(start, min(total, start + step), dtype=np.int64)
        labels = ((idx[:, None] // powers) % 3).astype(np.int8)
        covered = (labels == 2).astype(np.int32) @ a > 0
        good = labels[np.all((labels != 0) | covered, axis=1)]
        if not len(good):
            continue
        w = good.sum(axis=1, dtype=np.int64)
        lo = int(w.min())
        if best is None or lo < best:
            best, keep = lo, [good[w == lo]]
        elif lo == best:
            keep.append(good[w == lo])
    rows = np.vstack(keep)
    funcs = sorted(RDFunction(tuple(int(x) for x in row)) for row in rows)
    return MinSet(g, int(best), tuple(funcs))


def private_neighbors(g: Graph, xs: Iterable[int], x: int) -> frozenset[int]:
    """pn[x, X]: vertices y with N[y] ∩ X = {x}."""
    mask = to_mask(xs)
    if not mask >> x & 1:
        raise GraphError(f"vertex {x} is not in X")
    return frozenset(y for y in range(g.n) if (g.closed(y) & mask) == 1 << x)


def restriction(f: RDFunction, vertices: Iterable[int]) -> RDFunction:
    """f restricted to ``vertices``, reindexed like ``induced(g, vertices)``."""
    keep = sorted(set(vertices))
    return RDFunction(tuple(f.labels[v] for v in keep))


def domination_number(g: Graph) -> int:
    """gamma(G) by the same set search with undominated vertices forbidden."""
    n = g.n
    closed = [g.adj[v] | 1 << v for v in range(n)]
    best = n

    def visit(size: int, allowed: int, undom: int) -> None:
        nonlocal best
        if not undom:
            best = min(best, size)
            return
        if size + 1 > best:
            return
        u = min(iter_bits(undom), key=lambda v: (closed[v] & allowed).bit_count())
        excluded = 0
        for c in iter_bits(closed[u] & allowed):
            visit(size + 1, allowed & ~excluded & ~(1 << c), undom & ~closed[c])
            excluded |= 1 << c

    visit(0, g.full, g.full)
    return best

