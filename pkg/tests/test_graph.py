import random
from itertools import permutations

import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from romanlab import catalog
from romanlab.constructions import f_h, k4_apex, named_construction, region_example, spider, u_tree
from romanlab.graph import (
    INF,
    MAX_N,
    Graph,
    Graph6Error,
    GraphError,
    SizeError,
    add_edges,
    cartesian_product,
    complement,
    complete,
    complete_bipartite,
    components,
    cycle,
    degree,
    delete_edges,
    delete_vertices,
    disjoint_union,
    dist,
    double_star,
    empty_graph,
    has_triangle,
    induced,
    is_connected,
    is_forest,
    is_tree,
    parse_graph6,
    path,
    relabel,
    star,
    subdivide_edge,
    to_graph6,
)
from romanlab.iso import canonical_form, find_isomorphism, is_isomorphic


# -- graph6 ---------------------------------------------------------------------

def test_graph6_k1_k2_and_empty():
    assert parse_graph6("@") == Graph(1, (0,))
    assert parse_graph6("A_") == complete(2)
    assert to_graph6(complete(2)) == "A_"
    assert to_graph6(Graph(1, (0,))) == "@"
    assert to_graph6(Graph(0, ())) == "?"
    assert parse_graph6("?") == Graph(0, ())


def test_graph6_star_example_decodes_to_centre_4():
    # bits 000000 111111 111100 -> column 4 full, nothing else
    g = parse_graph6("D?{")
    assert g.n == 5
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert to_graph6(g) == "D?{"


def test_graph6_header_accepted_never_emitted():
    g = parse_graph6(">>graph6<<A_")
    assert g == complete(2)
    assert not to_graph6(g).startswith(">>")


@pytest.mark.parametrize(
    "text, offset",
    [
        ("A", 1),  # missing data byte
        ("A_?", 2),  # one byte too many
        ("A`", 1),  # padding bit set
        ("A ", 1),  # below 63
        ("\x7fA", 0),  # out of range size byte
    ],
)
def test_graph6_errors_name_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_graph6_rejects_long_form_and_large_graphs():
    with pytest.raises(Graph6Error):
        parse_graph6("~" + "?" * 10)
    with pytest.raises(SizeError):
        to_graph6(empty_graph(MAX_N + 1))


def test_graph6_round_trip_1000_random():
    rng = random.Random(7)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(0, 20), rng.random())
        h = parse_graph6(to_graph6(g))
        assert h.edges() == g.edges() and h.n == g.n


@given(graphs(max_n=62))
@settings(max_examples=200, deadline=None)
def test_graph6_round_trip_property(g):
    s = to_graph6(g)
    assert parse_graph6(s) == g
    assert to_graph6(parse_graph6(s)) == s


# -- families and operations ----------------------------------------------------

def test_families():
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    ds = double_star(2, 2)
    assert ds.n == 6 and ds.m == 5
    assert sorted(ds.degrees(), reverse=True) == [3, 3, 1, 1, 1, 1]
    assert is_isomorphic(cycle(3), complete(3))
    assert star(3).degrees() == [3, 1, 1, 1]
    kb = complete_bipartite(2, 3)
    assert kb.m == 6 and not has_triangle(kb)


@pytest.mark.parametrize(
    "fn, args",
    [(path, (0,)), (cycle, (2,)), (star, (0,)), (complete, (0,)), (double_star, (1, 2)), (complete_bipartite, (0, 1))],
)
def test_family_argument_errors(fn, args):
    with pytest.raises(GraphError):
        fn(*args)


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (1,))  # loop
    with pytest.raises(GraphError):
        Graph(1, (0b10,))  # out of range


def test_operations():
    assert complement(complete(4)).m == 0
    g, index = delete_vertices(cycle(6), {0})
    assert is_isomorphic(g, path(5))
    assert index == {1: 0, 2: 1, 3: 2, 4: 3, 5: 4}
    assert is_isomorphic(subdivide_edge(star(2), (0, 1), 1), path(4))
    assert subdivide_edge(path(2), (0, 1), 3).edges() == [(0, 2), (1, 4), (2, 3), (3, 4)]
    assert delete_edges(path(3), [(0, 1)]).edges() == [(1, 2)]
    assert add_edges(path(3), [(0, 2)]) == cycle(3)
    assert induced(cycle(5), [4, 0, 1]).edges() == [(0, 1), (0, 2)]
    u = disjoint_union(path(2), path(3))
    assert u.edges() == [(0, 1), (2, 3), (3, 4)]


def test_edge_operation_errors():
    with pytest.raises(GraphError):
        delete_edges(path(3), [(0, 2)])
    with pytest.raises(GraphError):
        add_edges(path(3), [(0, 1)])
    with pytest.raises(GraphError):
        subdivide_edge(path(3), (0, 2))
    with pytest.raises(GraphError):
        subdivide_edge(path(3), (0, 1), 0)


@given(graphs(max_n=9))
@settings(max_examples=100, deadline=None)
def test_delete_vertices_map_is_order_preserving_bijection(g):
    rng = random.Random(g.n * 31 + g.m)
    s = {v for v in range(g.n) if rng.random() < 0.4}
    h, index = delete_vertices(g, s)
    assert sorted(index.values()) == list(range(g.n - len(s)))
    olds = sorted(index)
    assert [index[v] for v in olds] == list(range(len(olds)))
    for u in olds:
        for v in olds:
            assert h.has_edge(index[u], index[v]) == g.has_edge(u, v)


def test_cartesian_product_examples():
    assert is_isomorphic(cartesian_product(complete(2), complete(2)), cycle(4))
    assert is_isomorphic(cartesian_product(path(3), Graph(1, (0,))), path(3))
    k2p3 = cartesian_product(complete(2), path(3))
    assert (k2p3.n, k2p3.m) == (6, 2 * 2 + 3 * 1)
    with pytest.raises(SizeError):
        cartesian_product(path(8), path(8))
    assert cartesian_product(path(8), path(8), max_n=None).n == 64


@given(graphs(max_n=6), graphs(max_n=6))
@settings(max_examples=60, deadline=None)
def test_cartesian_product_degree_law(g1, g2):
    p = cartesian_product(g1, g2)
    for i in range(g1.n):
        for j in range(g2.n):
            assert degree(p, i * g2.n + j) == degree(g1, i) + degree(g2, j)


def test_structural_queries():
    assert dist(cycle(6), 0, 3) == 3
    assert dist(disjoint_union(path(2), path(2)), 0, 3) == INF
    assert not has_triangle(cycle(4))
    assert has_triangle(complete(3))
    assert is_tree(double_star(3, 3))
    assert not is_tree(cycle(4))
    assert is_forest(disjoint_union(path(3), path(2)))
    assert not is_connected(empty_graph(2))
    assert components(disjoint_union(path(2), Graph(1, (0,)))) == [[0, 1], [2]]


# -- isomorphism ------------------------------------------------------------------

def _brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    e1 = set(g1.edges())
    for perm in permutations(range(g1.n)):
        if all(g2.has_edge(perm[u], perm[v]) for u, v in e1):
            return True
    return False


def test_isomorphism_examples():
    p = path(4)
    assert is_isomorphic(p, relabel(p, [3, 2, 1, 0]))
    assert is_isomorphic(p, relabel(p, [1, 3, 0, 2]))
    assert not is_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3)))
    assert not is_isomorphic(complete_bipartite(3, 3), cycle(6))
    assert _brute_isomorphic(complete_bipartite(3, 3), cycle(6)) is False


def test_canonical_codes_agree_with_permutation_search():
    # pairs with equal degree sequences are the interesting ones
    rng = random.Random(11)
    checked = 0
    for _ in range(400):
        n = rng.randint(1, 7)
        g1 = random_graph(rng, n)
        g2 = relabel(g1, rng.sample(range(n), n)) if rng.random() < 0.5 else random_graph(rng, n)
        same = canonical_form(g1).code == canonical_form(g2).code
        assert same == _brute_isomorphic(g1, g2), (g1.adj, g2.adj)
        checked += 1
    assert checked == 400


def test_catalog_counts_and_pairwise_nonisomorphic():
    assert [len(catalog.graphs(n)) for n in range(7)] == [1, 1, 2, 4, 11, 34, 156]
    assert [len(catalog.trees(n)) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    five = catalog.graphs(5)
    for i in range(len(five)):
        for j in range(i + 1, len(five)):
            assert not _brute_isomorphic(five[i], five[j])


@given(graphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_canonical_form_invariant_under_relabeling(g):
    rng = random.Random(g.m)
    perm = rng.sample(range(g.n), g.n)
    h = relabel(g, perm)
    assert canonical_form(g).code == canonical_form(h).code
    iso = find_isomorphism(g, h)
    assert iso is not None
    assert all(h.has_edge(iso[u], iso[v]) for u, v in g.edges())


def test_canonical_perm_maps_to_a_common_graph():
    g = cycle(5)
    h = relabel(g, [2, 4, 1, 0, 3])
    cg, ch = canonical_form(g), canonical_form(h)
    assert relabel(g, cg.perm) == relabel(h, ch.perm)


# -- constructions ------------------------------------------------------------------

def test_region_examples_shapes():
    assert is_isomorphic(region_example(4), cycle(6))
    r3 = region_example(3)
    assert r3.n == 8 and r3.m == 6 + 6
    assert is_isomorphic(region_example(1), double_star(3, 3))
    assert is_isomorphic(region_example(6), star(3))
    assert is_isomorphic(region_example(10), u_tree(2))
    with pytest.raises(GraphError):
        region_example(12)


def test_k4_apex_structure():
    g = k4_apex(3)
    assert induced(g, range(4)) == complete(4)
    assert g.degrees()[4] == 3
    assert all(g.degrees()[v] == 2 for v in (5, 6, 7))
    assert g.degrees()[3] == 3


def test_u_trees():
    u1, u2 = u_tree(1), u_tree(2)
    assert is_tree(u1) and u1.n == 9
    assert is_tree(u2) and u2.n == 10
    # the joining edge runs between the two central vertices
    assert u2.has_edge(2, 7)
    with pytest.raises(GraphError):
        u_tree(3)


def test_spider():
    t2 = spider(2)
    assert t2.n == 5 and is_tree(t2)
    assert sorted(t2.degrees()) == [1, 1, 2, 2, 2]
    assert spider(5).n == 14 and degree(spider(5), 0) == 5
    with pytest.raises(GraphError):
        spider(1)


def test_f_h_shape():
    h = cycle(4)
    g = f_h(h)
    assert g.n == 12
    assert induced(g, range(4)) == h
    c = 4
    assert all(g.has_edge(v, c) for v in range(4))
    assert [degree(g, v) for v in (5, 6, 7)] == [1, 1, 1]
    with pytest.raises(SizeError):
        f_h(empty_graph(55))
    assert named_construction("f_h", Graph(1, (0,))).n == 9
    with pytest.raises(GraphError):
        named_construction("nope")
