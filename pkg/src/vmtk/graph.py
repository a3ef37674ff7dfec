"""Simple undirected graphs on labeled vertices, stored as adjacency bitsets.

Vertices are dense indices ``0..n-1``; bit ``j`` of ``adj[i]`` is set iff
``ij`` is an edge.  External labels are opaque strings that survive every
operation which does not delete vertices; deletion compacts indices but keeps
the labels of the surviving vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


def bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x: int) -> int:
    return bin(x).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    adj: tuple[int, ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        n = len(self.adj)
        if len(self.labels) != n:
            raise ValueError("need exactly one label per vertex")
        if len(set(self.labels)) != n:
            raise ValueError("vertex labels must be pairwise distinct")
        full = (1 << n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i} has a neighbour out of range")
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in bits(row):
                if not (self.adj[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at {i},{j}")

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is None:
            labels = [str(i) for i in range(n)]
        return cls(tuple(adj), tuple(str(x) for x in labels))

    @classmethod
    def from_labeled_edges(
        cls, labels: Sequence[str], edges: Iterable[tuple[str, str]]
    ) -> Graph:
        index = {x: i for i, x in enumerate(labels)}
        return cls.from_edges(len(labels), ((index[a], index[b]) for a, b in edges), labels)

    # basic queries ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def full(self) -> int:
        return (1 << len(self.adj)) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i]) if i < j]

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex labeled {label!r}") from None

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise KeyError(f"unknown vertex {v!r}")

    def edge_labels(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset((self.labels[u], self.labels[v])) for u, v in self.edges())

    def same_labeled(self, other: Graph) -> bool:
        """Equality as labeled graphs, ignoring the internal index order."""
        return set(self.labels) == set(other.labels) and self.edge_labels() == other.edge_labels()

    # derived graphs -----------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on ``vertices`` (kept in increasing index order)."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(mask_of(pos[u] for u in bits(self.adj[v]) if u in pos))
        return Graph(tuple(adj), tuple(self.labels[v] for v in keep))

    def delete(self, v: int) -> Graph:
        self.check_vertex(v)
        return self.induced(u for u in range(self.n) if u != v)

    def toggle_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError("cannot toggle a loop")
        adj = list(self.adj)
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        return Graph(tuple(adj), self.labels)

    def relabel(self, labels: Sequence[str]) -> Graph:
        return Graph(self.adj, tuple(labels))

    def permute(self, order: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is vertex ``order[i]`` of this graph."""
        pos = {v: i for i, v in enumerate(order)}
        adj = tuple(mask_of(pos[u] for u in bits(self.adj[v])) for v in order)
        return Graph(adj, tuple(self.labels[v] for v in order))

    def add_vertex(self, label: str, neighbors: Iterable[int]) -> Graph:
        n = self.n
        nb = mask_of(neighbors)
        adj = [row | (((nb >> i) & 1) << n) for i, row in enumerate(self.adj)]
        adj.append(nb)
        return Graph(tuple(adj), self.labels + (label,))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={[(self.labels[u], self.labels[v]) for u, v in self.edges()]})"


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self) -> None:
        self.graph.check_vertex(self.root)


def disjoint_union(graphs: Sequence[Graph], labels: Sequence[str] | None = None) -> Graph:
    """Union with shifted indices; labels default to the originals, prefixed
    by the part number ("1.x") when they would clash."""
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    if labels is None:
        labels = [x for g in graphs for x in g.labels]
        if len(set(labels)) != len(labels):
            labels = [f"{i}.{x}" for i, g in enumerate(graphs, 1) for x in g.labels]
    return Graph(tuple(adj), tuple(labels))


# small named graphs ------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def net_graph() -> Graph:
    """Triangle 0,1,2 with pendant leaves 3,4,5 attached to 0,1,2."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def diamond_graph() -> Graph:
    """K4 minus the edge 2-3; vertices 2 and 3 have degree two."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def domino_pendant_graph() -> Graph:
    """C4 with one pendant vertex on each of two opposite cycle vertices."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)])


# structural predicates ---------------------------------------------------


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components (as bitmasks) of ``g`` restricted to ``within``."""
    rest = g.full if within is None else within
    comps = []
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_clique(g: Graph, vertices: int) -> bool:
    return all((g.adj[v] | (1 << v)) & vertices == vertices for v in bits(vertices))


def blocks(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the blocks (maximal subgraphs without cut-vertices).

    Isolated vertices form singleton blocks.  Uses the classic depth-first
    articulation search with an explicit edge stack.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: list[frozenset[int]] = []
    counter = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        if g.adj[s] == 0:
            disc[s] = counter
            counter += 1
            out.append(frozenset([s]))
            continue
        disc[s] = low[s] = counter
        counter += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(s, -1, iter(g.neighbors(s)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                out.append(frozenset(comp))
    return out


def is_block_graph(g: Graph) -> bool:
    return all(is_clique(g, mask_of(b)) for b in blocks(g))


def simplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if is_clique(g, g.adj[v]))


def is_twin(g: Graph, v: int, w: int) -> bool:
    if v == w:
        raise ValueError("a vertex is not its own twin")
    return g.adj[v] & ~(1 << w) == g.adj[w] & ~(1 << v)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u in range(g.n):
        for v in bits(g.adj[u] >> (u + 1) << (u + 1)):
            for w in bits(g.adj[u] & g.adj[v] >> (v + 1) << (v + 1)):
                out.append((u, v, w))
    return out


def distances(g: Graph, source: int, within: int | None = None) -> dict[int, int]:
    """BFS distances from source inside the vertex set ``within``."""
    allowed = g.full if within is None else within
    dist = {source: 0}
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


DH_BRUTE_MAX_N = 12


def is_distance_hereditary(g: Graph) -> bool:
    """Every connected induced subgraph preserves distances (exhaustive)."""
    if g.n > DH_BRUTE_MAX_N:
        raise ValueError(f"exhaustive distance check is limited to {DH_BRUTE_MAX_N} vertices")
    whole = [distances(g, v) for v in range(g.n)]
    for sub in range(1, 1 << g.n):
        if len(components(g, sub)) != 1:
            continue
        for v in bits(sub):
            local = distances(g, v, sub)
            if any(local[u] != whole[v][u] for u in bits(sub)):
                return False
    return True
