from hypothesis import strategies as st

from vmtk.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    present = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, present) if keep])


@st.composite
def graphs_with_vertex(draw, min_n=1, max_n=9):
    g = draw(graphs(min_n, max_n))
    return g, draw(st.integers(0, g.n - 1))


@st.composite
def graphs_with_edge(draw, max_n=9):
    g = draw(graphs(2, max_n).filter(lambda g: g.m > 0))
    u, v = draw(st.sampled_from(g.edges()))
    return (g, u, v) if draw(st.booleans()) else (g, v, u)


@st.composite
def graphs_with_subset(draw, min_n=0, max_n=9):
    g = draw(graphs(min_n, max_n))
    return g, draw(st.integers(0, g.full))
