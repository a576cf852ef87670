import random
from itertools import permutations

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from dtdesc.canonical import canonical_form, canonical_graph, canonical_labeling
from dtdesc.graph import Graph, complete_graph, relabel
from strategies import graphs, to_networkx


def brute_isomorphic(g, h):
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    edges = set(h.edges())
    for perm in permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in edges for u, v in g.edges()):
            return True
    return False


def test_k5_all_relabelings():
    k5 = complete_graph(5)
    forms = {canonical_form(relabel(k5, p)) for p in permutations(range(5))}
    assert len(forms) == 1


def test_two_eight_vertex_descendants_differ(db12):
    forms = [r.form for r in db12.layer(8)]
    assert len(set(forms)) == 2
    assert sorted(r.tri for r in db12.layer(8)) == [6, 8]


@given(graphs(min_n=1, max_n=10), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_relabel_invariance(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


@given(graphs(min_n=1, max_n=10))
@settings(max_examples=100, deadline=None)
def test_labeling_is_a_permutation(g):
    lab = canonical_labeling(g)
    assert sorted(lab) == list(range(g.n))
    assert canonical_form(canonical_graph(g)) == canonical_form(g)


@given(graphs(min_n=4, max_n=6), graphs(min_n=4, max_n=6))
@settings(max_examples=200, deadline=None)
def test_matches_brute_force_isomorphism(g, h):
    assert (canonical_form(g) == canonical_form(h)) == brute_isomorphic(g, h)


def _labelled_four_regular(n):
    """Every 4-regular graph on n vertices with N(0) = {1, 2, 3, 4}."""
    pairs = [(u, v) for u in range(1, n) for v in range(u + 1, n)]
    deg = [0] * n
    chosen = []
    out = []

    def rec(i):
        if i == len(pairs):
            if all(d == 4 for d in deg[1:]):
                rows = [0b11110] + [0] * (n - 1)
                for v in range(1, 5):
                    rows[v] |= 1
                for u, v in chosen:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                out.append(Graph(n, tuple(rows)))
            return
        u, v = pairs[i]
        # a vertex u whose last pair has passed must already have degree 4
        if deg[u] < 4 and deg[v] < 4:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            rec(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        if pairs[i + 1 :] and pairs[i + 1][0] != u and deg[u] < 4:
            return
        rec(i + 1)

    deg[1:5] = [1, 1, 1, 1]
    rec(0)
    return out


def test_four_regular_classes_up_to_eight():
    expected_classes = {5: 1, 6: 1, 7: 2, 8: 6}
    for n, k in expected_classes.items():
        gs = _labelled_four_regular(n)
        reps = []
        for g in gs:
            h = to_networkx(g)
            if not any(nx.is_isomorphic(h, r) for r in reps):
                reps.append(h)
        assert len(reps) == k
        forms = {canonical_form(g) for g in gs}
        assert len(forms) == k


def test_seeded_relabel_of_descendants(db12):
    rng = random.Random(0)
    for rec in db12.layer(11):
        perm = list(range(rec.n))
        rng.shuffle(perm)
        assert canonical_form(relabel(rec.graph, perm)) == rec.form
