from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from dtdesc.errors import Disconnected, DuplicateEdge, LoopEdge, OutOfRange
from dtdesc.graph import (
    complete_graph,
    components,
    contains_k4,
    contains_triple_triangle,
    delete_vertex,
    is_connected,
    is_four_regular,
    is_internally_six_edge_connected,
    make_graph,
    octahedron,
    one_zigzag,
    relabel,
    triangle_count,
    triangles,
    vertex_three_cuts,
)
from strategies import connected_graphs, graphs, to_networkx

C3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])


def two_k4s_matched():
    edges = [(a, b) for a, b in combinations(range(4), 2)]
    edges += [(a + 4, b + 4) for a, b in combinations(range(4), 2)]
    edges += [(i, i + 4) for i in range(4)]
    return make_graph(8, edges)


def test_construction_examples():
    assert C3.degrees() == [2, 2, 2]
    k5 = make_graph(5, combinations(range(5), 2))
    assert k5 == complete_graph(5)
    assert k5.degrees() == [4] * 5
    path = make_graph(4, [(0, 1), (1, 2)])
    assert path.degrees() == [1, 2, 1, 0]
    assert make_graph(4, [(0, 1), (1, 2), (2, 3)]).degrees() == [1, 2, 2, 1]


@pytest.mark.parametrize(
    "edges, exc",
    [([(0, 0)], LoopEdge), ([(0, 1), (1, 0)], DuplicateEdge), ([(0, 5)], OutOfRange)],
)
def test_construction_errors(edges, exc):
    with pytest.raises(exc):
        make_graph(3, edges)


def test_too_many_vertices():
    with pytest.raises(OutOfRange):
        make_graph(65, [])


def test_triangle_examples():
    assert triangle_count(complete_graph(5)) == 10
    assert triangle_count(octahedron()) == 8
    assert triangles(C3) == [(0, 1, 2)]


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_triangles_match_networkx(g):
    assert triangle_count(g) == sum(nx.triangles(to_networkx(g)).values()) // 3


def test_four_regular():
    assert is_four_regular(complete_graph(5))
    assert not is_four_regular(C3)
    assert is_four_regular(one_zigzag(11))


def _brute_internal_six(g):
    for size in range(2, g.n - 1):
        for side in combinations(range(g.n), size):
            s = set(side)
            cut = sum(1 for u, v in g.edges() if (u in s) != (v in s))
            if cut < 6:
                return False
    return True


def test_six_edge_connectivity_examples():
    assert is_internally_six_edge_connected(complete_graph(5)).passed
    assert is_internally_six_edge_connected(octahedron()).passed
    rep = is_internally_six_edge_connected(two_k4s_matched())
    assert not rep.passed
    assert rep.cut_size == 4
    side = set(rep.witness)
    assert side in ({0, 1, 2, 3}, {4, 5, 6, 7})


@given(connected_graphs(min_n=4, max_n=8))
@settings(max_examples=120, deadline=None)
def test_six_edge_connectivity_matches_brute_force(g):
    assert is_internally_six_edge_connected(g).passed == _brute_internal_six(g)


def test_six_edge_connectivity_needs_connected():
    with pytest.raises(Disconnected):
        is_internally_six_edge_connected(make_graph(4, [(0, 1)]))


def test_vertex_three_cuts_examples():
    assert vertex_three_cuts(complete_graph(5)) == []
    assert vertex_three_cuts(octahedron()) == []


@given(graphs(min_n=4, max_n=8))
@settings(max_examples=100, deadline=None)
def test_vertex_three_cuts_match_networkx(g):
    h = to_networkx(g)
    expected = [
        trio
        for trio in combinations(range(g.n), 3)
        if g.n > 3 and not nx.is_connected(h.subgraph(set(range(g.n)) - set(trio)))
    ]
    assert vertex_three_cuts(g) == expected


@given(graphs(min_n=2, max_n=9))
@settings(max_examples=100, deadline=None)
def test_connectivity_matches_networkx(g):
    h = to_networkx(g)
    assert is_connected(g) == nx.is_connected(h)
    assert len(components(g)) == nx.number_connected_components(h)


def test_k4_and_triple_triangle():
    assert contains_k4(complete_graph(5))
    assert contains_triple_triangle(complete_graph(5))
    assert not contains_k4(octahedron())
    assert not contains_triple_triangle(octahedron())


@given(graphs(min_n=2, max_n=8))
@settings(max_examples=80, deadline=None)
def test_relabel_and_delete_preserve_counts(g):
    perm = list(range(g.n))[::-1]
    h = relabel(g, perm)
    assert h.num_edges == g.num_edges
    assert triangle_count(h) == triangle_count(g)
    d = delete_vertex(g, 0)
    assert d.num_edges == g.num_edges - g.degree(0)
