import networkx as nx
import pytest
from hypothesis import given

from strategies import graphs
from vmtk.delta import enumerate_delta, recognize_delta
from vmtk.formats import (
    FormatError,
    from_graph6,
    read_edgelist,
    read_graphs,
    read_marked,
    to_graph6,
    write_edgelist,
    write_marked,
)
from vmtk.graph import Graph, net_graph
from vmtk.splitdec import build_appendix_decomposition, canonical_decomposition


@given(graphs(max_n=12))
def test_edgelist_round_trip_is_bit_exact(g):
    text = write_edgelist(g)
    h = read_edgelist(text)
    assert h == g
    assert write_edgelist(h) == text


def test_edgelist_comments_and_errors():
    g = read_edgelist("# a path\n3 2\n0 1\n# middle\n1 2\n")
    assert g.edges() == [(0, 1), (1, 2)]
    for bad in ("3 2\n0 1\n", "3 1\n1 0\n", "3 1\n0 3\n", "2 2\n0 1\n0 1\n", ""):
        with pytest.raises(FormatError):
            read_edgelist(bad)


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    ours = to_graph6(g)
    assert ours == nx.to_graph6_bytes(h, header=False).decode().strip()
    assert from_graph6(ours) == g


def test_graph6_large_header_and_delta_members():
    g = Graph.from_edges(70, [(i, i + 1) for i in range(69)])
    assert to_graph6(g).startswith("~")
    assert from_graph6(to_graph6(g)) == g
    for m in enumerate_delta(2):
        assert from_graph6(to_graph6(m)).edges() == m.edges()


def test_graph6_rejects_garbage():
    for bad in ("", "A" * 3, "\x01"):
        with pytest.raises(FormatError):
            from_graph6(bad)


def test_read_graphs_by_extension(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text(to_graph6(net_graph()) + "\n" + to_graph6(Graph.from_edges(2, [(0, 1)])) + "\n")
    assert len(read_graphs(p)) == 2
    q = tmp_path / "g.txt"
    q.write_text(write_edgelist(net_graph()))
    assert read_graphs(q)[0] == net_graph()


def test_marked_round_trip_is_bit_exact():
    for g in enumerate_delta(2):
        for d in (canonical_decomposition(g), build_appendix_decomposition(recognize_delta(g), g)):
            text = write_marked(d)
            again = read_marked(text)
            assert write_marked(again) == text
            assert again.marked == d.marked and again.original == d.original


def test_marked_format_uses_dash_for_markers():
    text = write_marked(canonical_decomposition(net_graph()))
    lines = text.splitlines()
    assert lines[0] == "12 6"
    assert sum(ln.endswith(" -") for ln in lines if ln.startswith("v ")) == 6
    assert sum(ln.endswith(" M") for ln in lines) == 3
