import random
from itertools import permutations

import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from strategies import graphs
from vmtk.corpus import all_graphs
from vmtk.delta import delta_compose, delta_zero
from vmtk.graph import RootedGraph, complete_graph, cycle_graph, net_graph, path_graph
from vmtk.iso import (
    automorphism_orbits,
    canonical_form,
    find_isomorphism,
    graph_from_canonical,
    isomorphic,
    rooted_isomorphic,
)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_orbits(g, fixed=None):
    """Orbits by enumerating every permutation (n <= 7)."""
    edges = {frozenset(e) for e in g.edges()}
    parent = list(range(g.n))
    for p in permutations(range(g.n)):
        if fixed is not None and p[fixed] != fixed:
            continue
        if {frozenset((p[u], p[v])) for u, v in edges} == edges:
            for v in range(g.n):
                a, b = v, p[v]
                while parent[a] != a:
                    a = parent[a]
                while parent[b] != b:
                    b = parent[b]
                parent[b] = a
    roots = set()
    for v in range(g.n):
        while parent[v] != v:
            v = parent[v]
        roots.add(v)
    return len(roots)


def test_isomorphic_examples():
    k3 = complete_graph(3)
    assert isomorphic(k3, k3.permute([2, 0, 1]))
    assert not isomorphic(path_graph(3), k3)
    k2 = delta_zero()
    net = delta_compose(RootedGraph(k2, 0), RootedGraph(k2, 1), RootedGraph(k2, 0))
    assert isomorphic(net, net_graph())


def test_rooted_isomorphic_examples():
    k2 = path_graph(2)
    assert rooted_isomorphic(RootedGraph(k2, 0), RootedGraph(k2, 1))
    net = net_graph()
    assert not rooted_isomorphic(RootedGraph(net, 0), RootedGraph(net, 3))
    p3 = path_graph(3)
    assert rooted_isomorphic(RootedGraph(p3, 1), RootedGraph(p3, 1))


def test_orbit_examples():
    assert automorphism_orbits(cycle_graph(5)).count == 1
    assert automorphism_orbits(path_graph(2), fixed=0).count == 2
    assert automorphism_orbits(net_graph()).count == 2


@given(graphs(max_n=8), graphs(max_n=8))
def test_isomorphic_matches_networkx(g, h):
    assert isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_permuted_copy_is_isomorphic_with_valid_map(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    h = g.permute(order)
    phi = find_isomorphism(g, h)
    assert phi is not None
    assert {frozenset((phi[u], phi[v])) for u, v in g.edges()} == {frozenset(e) for e in h.edges()}
    assert canonical_form(g) == canonical_form(h)


def test_canonical_form_separates_classes():
    for n in range(6):
        graphs_n = all_graphs(n)
        assert len({canonical_form(g) for g in graphs_n}) == len(graphs_n)
        for g in graphs_n:
            assert canonical_form(graph_from_canonical(canonical_form(g))) == canonical_form(g)


def test_all_graph_counts_match_networkx_atlas():
    atlas = nx.graph_atlas_g()
    for n in range(7):
        assert len(all_graphs(n)) == sum(1 for a in atlas if a.number_of_nodes() == n)


def test_orbits_match_permutation_search():
    rng = random.Random(5)
    for n in range(1, 7):
        sample = all_graphs(n)
        for g in rng.sample(sample, min(len(sample), 12)):
            assert automorphism_orbits(g).count == brute_orbits(g)
            v = rng.randrange(n)
            assert automorphism_orbits(g, fixed=v).count == brute_orbits(g, fixed=v)


@given(graphs(min_n=1, max_n=7))
def test_fixing_a_vertex_refines_orbits(g):
    base = automorphism_orbits(g).count
    assert all(automorphism_orbits(g, fixed=v).count >= base for v in range(g.n))


@given(graphs(max_n=6), graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_is_an_equivalence(a, b, c):
    assert isomorphic(a, a)
    assert isomorphic(a, b) == isomorphic(b, a)
    if isomorphic(a, b) and isomorphic(b, c):
        assert isomorphic(a, c)
