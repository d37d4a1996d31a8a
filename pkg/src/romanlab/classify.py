"""Effects of vertex/edge mutations on gamma_R, the six change/unchange
classes, Venn-region assignment and k-criticality."""

from __future__ import annotations

from dataclasses import astuple, dataclass
from itertools import combinations
from typing import Callable, Iterable

from .graph import Graph, GraphError, add_edges, delete_edges, delete_vertices
from .solver import gamma_r_value

GammaFn = Callable[[Graph], int]


@dataclass(frozen=True)
class VertexEffect:
    kind: str  # "minus" | "equal" | "plus"
    delta: int  # gamma_R(G) - gamma_R(G - v)


@dataclass(frozen=True)
class ClassSignature:
    cvr: bool
    uvr: bool
    cer: bool
    uer: bool
    cea: bool
    uea: bool
    er_vacuous: bool = False
    ea_vacuous: bool = False

    def key(self) -> tuple[bool, ...]:
        return astuple(self)[:6]

    def as_dict(self) -> dict[str, bool]:
        names = ("cvr", "uvr", "cer", "uer", "cea", "uea", "er_vacuous", "ea_vacuous")
        return dict(zip(names, astuple(self)))


class RegionError(RuntimeError):
    """A signature outside every known Venn region."""


def removal_drop(g: Graph, vertices: Iterable[int], gamma: GammaFn = gamma_r_value) -> int:
    """gamma_R(G) - gamma_R(G - S) for a proper subset S."""
    s = set(vertices)
    if len(s) >= g.n and g.n > 0:
        raise GraphError("S must be a proper subset of V")
    return gamma(g) - gamma(delete_vertices(g, s)[0])


def vertex_effect(g: Graph, v: int, gamma: GammaFn = gamma_r_value) -> VertexEffect:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph")
    delta = gamma(g) - gamma(delete_vertices(g, [v])[0])
    kind = "minus" if delta > 0 else "equal" if delta == 0 else "plus"
    return VertexEffect(kind, delta)


def vertex_partition(g: Graph, gamma: GammaFn = gamma_r_value) -> tuple[frozenset, frozenset, frozenset]:
    """(V^-, V^=, V^+)."""
    parts: dict[str, set[int]] = {"minus": set(), "equal": set(), "plus": set()}
    for v in range(g.n):
        parts[vertex_effect(g, v, gamma).kind].add(v)
    return frozenset(parts["minus"]), frozenset(parts["equal"]), frozenset(parts["plus"])


def edge_removal_delta(g: Graph, edge: tuple[int, int], gamma: GammaFn = gamma_r_value) -> int:
    """gamma_R(G - e) - gamma_R(G)."""
    return gamma(delete_edges(g, [edge])) - gamma(g)


def edge_addition_delta(g: Graph, pair: tuple[int, int], gamma: GammaFn = gamma_r_value) -> int:
    """gamma_R(G) - gamma_R(G + uv)."""
    return gamma(g) - gamma(add_edges(g, [pair]))


def class_signature(g: Graph, gamma: GammaFn = gamma_r_value) -> ClassSignature:
    effects = [vertex_effect(g, v, gamma).delta for v in range(g.n)]
    removals = [edge_removal_delta(g, e, gamma) for e in g.edges()]
    additions = [edge_addition_delta(g, e, gamma) for e in g.non_edges()]
    return ClassSignature(
        cvr=all(d > 0 for d in effects),
        uvr=all(d == 0 for d in effects),
        cer=all(d > 0 for d in removals),
        uer=all(d == 0 for d in removals),
        cea=all(d > 0 for d in additions),
        uea=all(d == 0 for d in additions),
        er_vacuous=not removals,
        ea_vacuous=not additions,
    )


# Signatures (cvr, uvr, cer, uer, cea, uea) of the region witnesses, computed
# exhaustively and re-derived in the tests with the brute-force solver. The
# R3 row is UER ∩ UEA minus UVR: the only combination inside UER ∩ UEA other
# than R4's. Its listed witness (k4_apex(3)) actually shares R4's signature;
# k4_apex(4) realises this row.
REGION_TABLE: dict[tuple[bool, ...], int] = {
    (False, False, False, False, False, True): 1,
    (False, True, False, False, False, True): 2,
    (False, False, False, True, False, True): 3,
    (False, True, False, True, False, True): 4,
    (False, True, True, False, False, True): 5,
    (False, False, True, False, False, True): 6,
    (False, False, False, True, False, False): 7,
    (True, False, False, True, False, False): 8,
    (True, False, False, True, True, False): 9,
    (False, False, False, True, True, False): 10,
    (False, False, True, False, False, False): 11,
}

# in none of the six classes: the area outside every set of the diagram
OUTSIDE_KEY = (False,) * 6


@dataclass(frozen=True)
class VennRegion:
    label: str  # "R1".."R11", "Outside", "Excluded(edgeless)" or "Excluded(complete)"

    @property
    def index(self) -> int | None:
        return int(self.label[1:]) if self.label.startswith("R") else None

    def __str__(self) -> str:
        return self.label


def region_of_signature(sig: ClassSignature) -> int:
    try:
        return REGION_TABLE[sig.key()]
    except KeyError:
        raise RegionError(f"signature {sig.as_dict()} matches no region") from None


def venn_region(g: Graph, gamma: GammaFn = gamma_r_value) -> VennRegion:
    if g.m == 0:
        return VennRegion("Excluded(edgeless)")
    if not g.non_edges():
        return VennRegion("Excluded(complete)")
    sig = class_signature(g, gamma)
    if sig.key() == OUTSIDE_KEY:
        return VennRegion("Outside")
    return VennRegion(f"R{region_of_signature(sig)}")


def is_k_cvr(g: Graph, k: int, gamma: GammaFn = gamma_r_value) -> bool:
    """Every k-subset deletion strictly decreases gamma_R."""
    if not 1 <= k < g.n:
        raise GraphError(f"k must satisfy 1 <= k < n, got k={k}, n={g.n}")
    base = gamma(g)
    return all(gamma(delete_vertices(g, s)[0]) < base for s in combinations(range(g.n), k))


def k_cvr_profile(g: Graph, kmax: int, gamma: GammaFn = gamma_r_value) -> list[bool]:
    return [is_k_cvr(g, k, gamma) for k in range(1, kmax + 1)]


def k_subset_drops(g: Graph, k: int, gamma: GammaFn = gamma_r_value) -> list[int]:
    """Drops gamma_R(G) - gamma_R(G - S) over all k-subsets S, in lex order of S."""
    base = gamma(g)
    return [base - gamma(delete_vertices(g, s)[0]) for s in combinations(range(g.n), k)]
