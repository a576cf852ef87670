import networkx as nx
import pytest
from hypothesis import given, settings

from dtdesc.errors import MalformedGraph6
from dtdesc.graph import complete_graph, make_graph
from dtdesc.graph6 import from_graph6, to_graph6
from strategies import graphs, to_networkx


def test_k5():
    assert to_graph6(complete_graph(5)) == b"D~{"
    assert from_graph6("D~{") == complete_graph(5)


@given(graphs(min_n=0, max_n=20))
@settings(max_examples=200, deadline=None)
def test_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


@given(graphs(min_n=1, max_n=20))
@settings(max_examples=200, deadline=None)
def test_matches_networkx_encoder(g):
    expected = nx.to_graph6_bytes(to_networkx(g), header=False).strip()
    assert to_graph6(g) == expected


def test_header_and_whitespace_accepted():
    assert from_graph6(">>graph6<<D~{\n") == complete_graph(5)


def test_long_size_header():
    g = make_graph(63, [(0, 62)])
    s = to_graph6(g)
    assert s[0] == 126
    assert from_graph6(s) == g


@pytest.mark.parametrize("bad", ["", "D~", "D~{{", "D~\x7f", " "])
def test_malformed(bad):
    with pytest.raises(MalformedGraph6):
        from_graph6(bad)


def test_round_trip_descendants(db12):
    for rec in db12.records():
        assert to_graph6(from_graph6(rec.graph6)).decode() == rec.graph6
