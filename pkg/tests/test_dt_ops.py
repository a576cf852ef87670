import random
from itertools import permutations

import networkx as nx
import pytest

from dtdesc.canonical import canonical_form
from dtdesc.dt_ops import (
    DoubleTriangle,
    DteSite,
    ancestor,
    ancestor_forms,
    completion,
    created_double_triangle,
    decompletions,
    dte,
    dte_sites,
    dtr,
    find_double_triangles,
    product,
    product_splits,
    reducible_double_triangles,
)
from dtdesc.errors import (
    BadDegreeSequence,
    ImproperDoubleTriangle,
    InvalidSite,
    NotATriangle,
    WouldCreateMultiEdge,
)
from dtdesc.graph import (
    complete_graph,
    contains_triple_triangle,
    is_four_regular,
    make_graph,
    octahedron,
    triangle_count,
    vertex_three_cuts,
)
from dtdesc.zigzag import zigzag_decomposition

K5 = complete_graph(5)
OCT = octahedron()
C3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])


def brute_double_triangles(g):
    """Unordered pairs of triangles sharing an edge, by 4-tuples."""
    found = set()
    for v1, v2, v3, v4 in permutations(range(g.n), 4):
        if all(g.has_edge(a, b) for a, b in ((v1, v2), (v1, v3), (v2, v3), (v2, v4), (v3, v4))):
            found.add((frozenset((v2, v3)), frozenset((v1, v4))))
    return found


def test_k5_has_no_proper_double_triangles():
    dts = find_double_triangles(K5)
    assert dts and not any(dt.proper for dt in dts)
    assert len(dts) == len(brute_double_triangles(K5))


def test_octahedron_double_triangles():
    dts = find_double_triangles(OCT)
    assert len(dts) == 12 == len(brute_double_triangles(OCT))
    assert all(dt.proper for dt in dts)


def test_hypercube_has_none():
    q4 = nx.convert_node_labels_to_integers(nx.hypercube_graph(4))
    g = make_graph(16, q4.edges())
    assert is_four_regular(g)
    assert find_double_triangles(g) == []


def test_dte_k5_gives_octahedron_from_every_site():
    sites = dte_sites(K5, both_neighbours=True)
    assert len(sites) == 60
    assert {canonical_form(dte(K5, s)) for s in sites} == {canonical_form(OCT)}


def test_dte_octahedron_gives_seven_vertex_descendant():
    children = {canonical_form(dte(OCT, s)) for s in dte_sites(OCT, both_neighbours=True)}
    assert len(children) == 1
    child = dte(OCT, dte_sites(OCT)[0])
    assert child.n == 7 and triangle_count(child) == 7


def test_pendant_choice_is_irrelevant(db12):
    for rec in db12.records():
        if rec.n > 10:
            break
        g = rec.graph
        by_site = {}
        for s in dte_sites(g, both_neighbours=True):
            by_site.setdefault((s.triangle, s.apex), set()).add(canonical_form(dte(g, s)))
        assert all(len(forms) == 1 for forms in by_site.values())


def test_dte_new_vertex_and_degrees():
    s = DteSite((0, 1, 2), 0, 3)
    g = dte(K5, s)
    assert g.n == 6 and is_four_regular(g)
    assert sorted(g.neighbors(5)) == [0, 1, 2, 3]


def test_dte_bad_site():
    with pytest.raises(InvalidSite):
        dte(K5, DteSite((0, 1, 2), 0, 1))
    with pytest.raises(InvalidSite):
        dte(OCT, DteSite((0, 1, 3), 0, 2))


def test_dtr_octahedron_gives_k5():
    for dt in find_double_triangles(OCT):
        assert canonical_form(dtr(OCT, dt)) == canonical_form(K5)


def test_dtr_inverts_dte(db12):
    for rec in db12.records():
        if rec.n > 10:
            break
        for s in dte_sites(rec.graph):
            child = dte(rec.graph, s)
            dt = created_double_triangle(rec.graph, s)
            assert dt.proper
            assert canonical_form(dtr(child, dt)) == rec.form


def test_dtr_errors():
    with pytest.raises(ImproperDoubleTriangle):
        dtr(K5, find_double_triangles(K5)[0])
    with pytest.raises(ImproperDoubleTriangle):
        dtr(OCT, DoubleTriangle(0, 1, 3, 4, True))
    g = make_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 3)])
    with pytest.raises((WouldCreateMultiEdge, ImproperDoubleTriangle)):
        dtr(g, DoubleTriangle(0, 1, 2, 3, True))


def _two_zigzags_and_a_vertex(l1, l2):
    """Two zigzags sharing both ends plus one vertex on the four chord vertices."""
    a, b, x = 0, 1, 2
    nxt, edges, chords = 3, [], []
    for length in (l1, l2):
        inner = list(range(nxt, nxt + length))
        nxt += length
        path = [a] + inner + [b]
        edges += [(path[i], path[i + 1]) for i in range(length + 1)]
        edges += [(path[i], path[i + 2]) for i in range(length)]
        chords += [inner[0], inner[-1]]
    edges += [(x, c) for c in chords]
    return make_graph(nxt, edges)


def test_k2_m1_l2_configuration_is_not_a_descendant(db12):
    g = _two_zigzags_and_a_vertex(4, 4)
    assert is_four_regular(g)
    dec = zigzag_decomposition(g)
    assert (dec.k, dec.ell, dec.m) == (2, 2, 1)
    assert canonical_form(g) not in {r.form for r in db12.layer(11)}
    layer = {canonical_form(g): g}
    seen_triple = False
    while min(h.n for h in layer.values()) > 7:
        nxt = {}
        for h in layer.values():
            for dt in reducible_double_triangles(h):
                r = dtr(h, dt)
                nxt[canonical_form(r)] = r
        layer = nxt
        seen_triple |= any(h.n == 9 and contains_triple_triangle(h) for h in layer.values())
    assert seen_triple
    assert all(h.n == 7 and contains_triple_triangle(h) for h in layer.values())


def test_decompletions():
    assert [canonical_form(h) for h in decompletions(K5)] == [canonical_form(complete_graph(4))]
    assert len(decompletions(OCT)) == 1


def test_completion():
    assert completion(complete_graph(4)) == K5
    with pytest.raises(BadDegreeSequence):
        completion(C3)


def test_completion_inverts_decompletion(db12):
    for rec in db12.records():
        if rec.n > 10:
            break
        for h in decompletions(rec.graph):
            assert canonical_form(completion(h)) == rec.form


def k5_times_k5():
    return product(K5, (0, 1, 2), K5, (0, 1, 2))


def test_product_of_k5s():
    g = k5_times_k5()
    assert g.n == 7 and is_four_regular(g)
    assert vertex_three_cuts(g) == [(0, 1, 2)]
    nxg = nx.Graph(g.edges())
    assert nx.node_connectivity(nxg) == 3


def test_product_any_triangles_isomorphic():
    forms = {
        canonical_form(product(K5, t1, K5, t2))
        for t1 in ((0, 1, 2), (2, 3, 4), (1, 0, 4))
        for t2 in ((0, 1, 2), (4, 2, 3))
    }
    assert len(forms) == 1


def test_product_not_a_triangle():
    with pytest.raises(NotATriangle):
        product(OCT, (0, 1, 3), K5, (0, 1, 2))


def test_product_splits():
    splits = product_splits(k5_times_k5())
    assert len(splits) == 1
    a, b = splits[0]
    assert canonical_form(a) == canonical_form(b) == canonical_form(K5)
    assert product_splits(K5) == []
    assert product_splits(OCT) == []


def test_ancestor_examples():
    k5 = canonical_form(K5)
    assert [canonical_form(h) for h in ancestor(K5)] == [k5]
    assert [canonical_form(h) for h in ancestor(k5_times_k5())] == [k5, k5]


def test_ancestor_random_orders_agree(db12):
    rng = random.Random(0)
    recs = [r for r in db12.records() if r.n <= 12]
    k5 = canonical_form(K5)
    for rec in rng.sample(recs, 25):
        assert ancestor_forms(rec.graph) == {k5: 1}
        assert ancestor_forms(rec.graph, random.Random(rng.random())) == {k5: 1}
