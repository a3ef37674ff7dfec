import pytest
from hypothesis import given

from strategies import graphs, graphs_with_edge, graphs_with_vertex
from vmtk.corpus import all_graphs, all_trees
from vmtk.graph import Graph, complete_graph, empty_graph, is_connected, is_twin, net_graph, path_graph, star_graph
from vmtk.iso import canonical_form, graph_from_canonical, isomorphic
from vmtk.rankwidth import linear_rankwidth_exact
from vmtk.vertexminor import (
    OrbitOverflow,
    VertexMinorStep,
    add_twin,
    apply_steps,
    elementary_representatives,
    local_complement,
    local_orbit,
    locally_equivalent_small,
    pivot,
    pivot_direct,
)

PIVOT_LABELS = list("abcdefg")
PIVOT_BEFORE = [("c", "a"), ("a", "b"), ("b", "f"), ("d", "a"), ("a", "e"), ("e", "b"),
               ("f", "c"), ("c", "d"), ("c", "e"), ("d", "g"), ("g", "f")]
PIVOT_AFTER = [("c", "b"), ("b", "a"), ("a", "f"), ("d", "b"), ("b", "e"), ("e", "a"),
              ("c", "d"), ("d", "e"), ("e", "f"), ("d", "f"), ("d", "g"), ("g", "f")]


def test_pivot_worked_example():
    g = Graph.from_labeled_edges(PIVOT_LABELS, PIVOT_BEFORE)
    want = Graph.from_labeled_edges(PIVOT_LABELS, PIVOT_AFTER)
    a, b = g.index("a"), g.index("b")
    assert pivot(g, a, b) == want
    assert pivot_direct(g, a, b) == want


def test_local_complement_examples():
    k3 = complete_graph(3)
    h = local_complement(k3, 1)
    assert h.edges() == [(0, 1), (1, 2)]
    assert local_complement(star_graph(4), 0) == complete_graph(5)
    g = Graph.from_edges(3, [(0, 1)])
    assert local_complement(g, 2) == g


def test_pivot_examples_and_errors():
    k2 = path_graph(2)
    assert pivot(k2, 0, 1) == k2
    with pytest.raises(ValueError):
        pivot(path_graph(3), 0, 2)
    with pytest.raises(KeyError):
        local_complement(k2, 7)


def test_delete_examples():
    assert complete_graph(3).delete(0).m == 1
    net = net_graph().delete(3)
    assert net.n == 5 and net.m == 5
    assert complete_graph(1).delete(0).n == 0


def test_elementary_representatives_examples():
    reps = elementary_representatives(path_graph(2), 0)
    assert [r.n for r in reps] == [1, 1, 1]
    assert len(elementary_representatives(empty_graph(3), 1)) == 2
    reps = elementary_representatives(net_graph(), 0)
    assert len(reps) == 3
    assert all(r.n == 5 and linear_rankwidth_exact(r)[0] <= 1 for r in reps)


def test_add_twin_examples():
    assert add_twin(complete_graph(1), 0, True).m == 1
    assert isomorphic(add_twin(path_graph(2), 0, True), complete_graph(3))
    net = net_graph()
    h = add_twin(net, 3, False)
    assert h.n == 7 and is_twin(h, 3, 6) and not h.has_edge(3, 6)


@given(graphs_with_vertex())
def test_twin_property(gv):
    g, v = gv
    for adjacent in (False, True):
        h = add_twin(g, v, adjacent)
        assert is_twin(h, v, h.n - 1)
        assert h.has_edge(v, h.n - 1) == adjacent


@given(graphs_with_vertex(max_n=10))
def test_local_complement_involution(gv):
    g, v = gv
    assert local_complement(local_complement(g, v), v) == g


@pytest.mark.parametrize("n", range(1, 7))
def test_local_complement_involution_exhaustive(n):
    for g in all_graphs(n):
        for v in range(n):
            assert local_complement(local_complement(g, v), v) == g


@given(graphs_with_edge(max_n=12))
def test_pivot_definitions_agree(gev):
    g, u, v = gev
    p = pivot(g, u, v)
    assert p == pivot_direct(g, u, v)
    assert p == pivot(g, v, u)


@given(graphs_with_vertex(min_n=3, max_n=10))
def test_pivot_composition(gv):
    g, v = gv
    nb = g.neighbors(v)
    if len(nb) < 2:
        return
    v1, v2 = nb[0], nb[-1]
    h = pivot(g, v, v1)
    assert h.has_edge(v1, v2)
    assert pivot(h, v1, v2) == pivot(g, v, v2)


def test_steps_round_trip_and_apply():
    g = Graph.from_labeled_edges(PIVOT_LABELS, PIVOT_BEFORE)
    steps = ["L a", "P b f", "D g"]
    parsed = [VertexMinorStep.parse(s) for s in steps]
    assert [str(s) for s in parsed] == steps
    h = apply_steps(g, steps)
    assert h.labels == tuple("abcdef")
    with pytest.raises(ValueError):
        VertexMinorStep.parse("X a")
    with pytest.raises(ValueError):
        VertexMinorStep.parse("P a")


def test_local_orbit_examples():
    assert len(local_orbit(complete_graph(1))) == 1
    k3 = local_orbit(complete_graph(3))
    assert k3 == {canonical_form(complete_graph(3)), canonical_form(path_graph(3))}
    p4 = local_orbit(path_graph(4))
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert canonical_form(c4) in p4 and len(p4) == 4
    assert canonical_form(star_graph(3)) not in p4
    assert locally_equivalent_small(complete_graph(3), path_graph(3))
    assert not locally_equivalent_small(path_graph(4), star_graph(3))
    for t in all_trees(6):
        assert locally_equivalent_small(t, t)
    with pytest.raises(OrbitOverflow):
        local_orbit(path_graph(6), max_size=2)


@pytest.mark.parametrize("n", range(2, 7))
def test_local_orbit_keeps_size_and_connectivity(n):
    for g in [g for g in all_graphs(n) if is_connected(g)][:20]:
        for code in local_orbit(g):
            h = graph_from_canonical(code)
            assert h.n == n and is_connected(h)


@pytest.mark.parametrize("n", range(1, 7))
def test_vertex_minors_do_not_increase_lrw(n):
    for g in all_graphs(n):
        w = linear_rankwidth_exact(g)[0]
        for v in range(n):
            assert all(linear_rankwidth_exact(h)[0] <= w for h in elementary_representatives(g, v))


@given(graphs(min_n=2, max_n=8))
def test_lrw_is_invariant_under_local_complementation(g):
    w = linear_rankwidth_exact(g)[0]
    assert all(linear_rankwidth_exact(local_complement(g, v))[0] == w for v in range(g.n))
