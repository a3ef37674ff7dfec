import random

import pytest
from hypothesis import given

from strategies import graphs, graphs_with_subset
from vmtk.corpus import all_graphs
from vmtk.graph import Graph, complete_graph, cycle_graph, empty_graph, net_graph, path_graph, star_graph
from vmtk.rankwidth import (
    EXACT_MAX_N,
    BudgetExceeded,
    brute_force_lrw,
    check_submodularity,
    cutrank,
    cutrank_table,
    gf2_rank,
    layout_width,
    linear_rankwidth,
    linear_rankwidth_exact,
    lrw_at_most,
)


def matrix_rank_mod2(g, s):
    """Row reduction on a list-of-lists 0/1 matrix, kept apart from the bitset code."""
    rows_idx = [v for v in range(g.n) if (s >> v) & 1]
    cols_idx = [v for v in range(g.n) if not (s >> v) & 1]
    m = [[1 if g.has_edge(r, c) else 0 for c in cols_idx] for r in rows_idx]
    rank = 0
    for c in range(len(cols_idx)):
        pivot = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                m[i] = [a ^ b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def test_gf2_rank_examples():
    assert gf2_rank([0b110, 0b011, 0b101]) == 2
    assert gf2_rank([]) == 0
    assert gf2_rank([0, 0]) == 0
    assert gf2_rank([1, 2, 4, 8]) == 4


def test_cutrank_examples():
    for n in range(2, 7):
        assert cutrank(complete_graph(n), [0]) == 1
    c5 = cycle_graph(5)
    assert cutrank(c5, [0, 1]) == 2
    assert cutrank(c5, []) == 0
    assert cutrank(c5, range(5)) == 0
    with pytest.raises(ValueError):
        cutrank(c5, 1 << 7)


def test_layout_width_examples():
    net = net_graph()
    assert layout_width(net, (3, 0, 4, 1, 5, 2)) == 2
    assert layout_width(path_graph(5), range(5)) == 1
    assert layout_width(empty_graph(4), range(4)) == 0
    with pytest.raises(ValueError):
        layout_width(net, (0, 1, 2))


def test_small_known_widths():
    assert linear_rankwidth_exact(complete_graph(6))[0] == 1
    assert linear_rankwidth_exact(star_graph(5))[0] == 1
    assert linear_rankwidth_exact(cycle_graph(5))[0] == 2
    assert linear_rankwidth_exact(net_graph())[0] == 2
    assert linear_rankwidth_exact(Graph.from_edges(0, []))[0] == 0


@given(graphs_with_subset(max_n=9))
def test_cutrank_matches_matrix_oracle(gs):
    g, s = gs
    assert cutrank(g, s) == matrix_rank_mod2(g, s)


@given(graphs_with_subset(max_n=9))
def test_cutrank_symmetric(gs):
    g, s = gs
    assert cutrank(g, s) == cutrank(g, g.full & ~s)


@given(graphs_with_subset(max_n=8), graphs_with_subset(max_n=8))
def test_cutrank_submodular(a, b):
    g, x = a
    y = b[1] & g.full
    assert check_submodularity(g, x, y)


@given(graphs(max_n=10))
def test_table_matches_oracle(g):
    table = cutrank_table(g)
    assert len(table) == 1 << g.n
    for s in range(1 << g.n):
        assert int(table[s]) == matrix_rank_mod2(g, s)


@pytest.mark.parametrize("n", range(1, 7))
def test_exact_matches_brute_force_exhaustive(n):
    for g in all_graphs(n):
        width, layout = linear_rankwidth_exact(g)
        assert width == brute_force_lrw(g)
        assert layout_width(g, layout) == width


@given(graphs(max_n=8))
def test_exact_witness_and_brute_force(g):
    width, layout = linear_rankwidth_exact(g)
    assert layout_width(g, layout) == width
    assert width == brute_force_lrw(g)


def test_decision_examples():
    net = net_graph()
    assert lrw_at_most(net, 1) == (False, None)
    ok, layout = lrw_at_most(net, 2)
    assert ok and layout_width(net, layout) <= 2
    assert lrw_at_most(empty_graph(5), 0)[0]
    assert not lrw_at_most(path_graph(2), 0)[0]
    assert lrw_at_most(path_graph(2), -1) == (False, None)


@given(graphs(max_n=9))
def test_decision_agrees_with_exact(g):
    width = linear_rankwidth_exact(g)[0]
    for t in range(max(0, width - 1), width + 2):
        ok, layout = lrw_at_most(g, t)
        assert ok == (t >= width)
        if ok:
            assert layout_width(g, layout) <= t


def test_budget_is_enforced():
    rng = random.Random(3)
    pairs = [(i, j) for i in range(16) for j in range(i + 1, 16) if rng.random() < 0.5]
    g = Graph.from_edges(16, pairs)
    with pytest.raises(BudgetExceeded):
        lrw_at_most(g, 1, budget=3)


def test_exact_size_limit():
    big = path_graph(EXACT_MAX_N + 1)
    with pytest.raises(ValueError):
        linear_rankwidth_exact(big)
    with pytest.raises(ValueError):
        cutrank_table(big)
    assert linear_rankwidth(big) == 1


def test_dp_and_table_on_sixteen_vertices():
    rng = random.Random(11)
    pairs = [(i, j) for i in range(16) for j in range(i + 1, 16) if rng.random() < 0.3]
    g = Graph.from_edges(16, pairs)
    table = cutrank_table(g)
    for s in rng.sample(range(1 << 16), 200):
        assert int(table[s]) == matrix_rank_mod2(g, s)
    width, layout = linear_rankwidth_exact(g, table)
    assert layout_width(g, layout) == width
    assert lrw_at_most(g, width)[0] and not lrw_at_most(g, width - 1)[0]
