"""Split decompositions, canonical decompositions and their local complements.

A decomposition is a :class:`MarkedGraph`: a graph whose marked edges form
a matching between marker vertices.  Bags are the components left after the
marked edges are removed; marked edges join bags into a tree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Literal

from .graph import (
    Graph,
    bits,
    is_block_graph,
    is_clique,
    is_connected,
    mask_of,
    popcount,
    simplicial_vertices,
    triangles,
)
from .iso import find_structure_isomorphism
from .rankwidth import cutrank
from .report import Report
from .trees import tree_code
from .vertexminor import pivot

if TYPE_CHECKING:
    from .delta import DeltaCertificate

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class MarkedGraph:
    """Graph plus marked edges; ``original[v]`` is False for marker vertices."""

    graph: Graph
    marked: frozenset[Edge]
    original: tuple[bool, ...]

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.original) != g.n:
            raise ValueError("need one original/marker flag per vertex")
        seen: set[int] = set()
        for u, v in self.marked:
            if u >= v or not g.has_edge(u, v):
                raise ValueError(f"marked pair {u} {v} is not a normalised edge")
            if self.original[u] or self.original[v]:
                raise ValueError("marked edges must join marker vertices")
            if u in seen or v in seen:
                raise ValueError("marked edges must form a matching")
            seen |= {u, v}
        if seen != {v for v in range(g.n) if not self.original[v]}:
            raise ValueError("every marker vertex needs exactly one marked edge")
        rows = self.unmarked_rows()
        for u, v in self.marked:
            if any((c >> u) & 1 and (c >> v) & 1 for c in _row_components(rows, g.full)):
                raise ValueError("a marked edge must join two different bags")

    @classmethod
    def plain(cls, g: Graph) -> MarkedGraph:
        return cls(g, frozenset(), (True,) * g.n)

    # structure ------------------------------------------------------------

    def unmarked_rows(self) -> list[int]:
        rows = list(self.graph.adj)
        for u, v in self.marked:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return rows

    def marked_rows(self) -> list[int]:
        rows = [0] * self.graph.n
        for u, v in self.marked:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return rows

    def partner(self, v: int) -> int | None:
        for a, b in self.marked:
            if v == a:
                return b
            if v == b:
                return a
        return None

    def bags(self) -> list[int]:
        """Bags as bitmasks, ordered by their lowest vertex."""
        return _row_components(self.unmarked_rows(), self.graph.full)

    def bag_of(self, v: int) -> int:
        return next(b for b in self.bags() if (b >> v) & 1)

    def bag_graph(self, bag: int) -> Graph:
        return self.graph.induced(bits(bag))

    def bag_tree(self) -> tuple[list[int], dict[int, list[int]]]:
        """(bags, adjacency between bag indices along marked edges)."""
        bags = self.bags()
        where = {v: i for i, b in enumerate(bags) for v in bits(b)}
        tree: dict[int, list[int]] = {i: [] for i in range(len(bags))}
        for u, v in sorted(self.marked):
            tree[where[u]].append(where[v])
            tree[where[v]].append(where[u])
        return bags, tree

    def original_graph_vertices(self) -> list[int]:
        return [v for v in range(self.graph.n) if self.original[v]]

    def check_original(self, v: int) -> None:
        self.graph.check_vertex(v)
        if not self.original[v]:
            raise ValueError(f"{self.graph.labels[v]} is a marker vertex")

    def _with(self, g: Graph, marked_labels: Iterable[tuple[str, str]], original_labels: set[str]) -> MarkedGraph:
        marked = frozenset(_edge(g.index(a), g.index(b)) for a, b in marked_labels)
        return MarkedGraph(g, marked, tuple(x in original_labels for x in g.labels))

    def _marked_labels(self) -> list[tuple[str, str]]:
        lab = self.graph.labels
        return [(lab[u], lab[v]) for u, v in self.marked]

    def _original_labels(self) -> set[str]:
        return {self.graph.labels[v] for v in range(self.graph.n) if self.original[v]}


def _row_components(rows: list[int], within: int) -> list[int]:
    out = []
    rest = within
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


# bags ------------------------------------------------------------------------


@dataclass(frozen=True)
class BagKind:
    kind: Literal["prime", "star", "complete"]
    center: int | None = None


@dataclass(frozen=True)
class Split:
    a_side: frozenset[int]
    b_side: frozenset[int]

    def check(self, g: Graph) -> None:
        if self.a_side & self.b_side or self.a_side | self.b_side != frozenset(range(g.n)):
            raise ValueError("split sides must partition the vertex set")
        if len(self.a_side) < 2 or len(self.b_side) < 2:
            raise ValueError("both sides of a split need at least two vertices")
        if cutrank(g, self.a_side) > 1:
            raise ValueError("split sides must have cut-rank at most 1")


def find_split(g: Graph, rng: random.Random | None = None) -> Split | None:
    """A split (A, B) of a connected graph, or None when g is prime.

    Without ``rng`` the answer is the A containing vertex 0 whose sorted
    vertex tuple is lexicographically least.  With ``rng`` the same search
    runs on a random vertex order.
    """
    if not is_connected(g):
        raise ValueError("splits are defined for connected graphs")
    n = g.n
    if n < 4:
        return None
    order = list(range(n))
    if rng is not None:
        rng.shuffle(order)
    pos = {v: i for i, v in enumerate(order)}
    rows = [mask_of(pos[u] for u in bits(g.adj[v])) for v in order]
    full = (1 << n) - 1

    def rank_le1(a: int, b: int) -> bool:
        ref = 0
        for x in bits(a):
            r = rows[x] & b
            if r:
                if ref and r != ref:
                    return False
                ref = r
        return True

    # A grows by increasing position; positions skipped so far are in B
    stack = [(1, 0)]  # (A mask, last position in A)
    while stack:
        a, last = stack.pop()
        skipped = ((1 << (last + 1)) - 1) & ~a
        if not rank_le1(a, skipped):
            continue
        size = popcount(a)
        if size >= 2 and n - size >= 2 and rank_le1(a, full & ~a):
            side = frozenset(order[i] for i in bits(a))
            return Split(side, frozenset(range(n)) - side)
        if n - size <= 2:
            continue
        for j in range(n - 1, last, -1):
            stack.append((a | (1 << j), j))
    return None


def _fresh_labels(taken: set[str], count: int) -> list[str]:
    out = []
    i = 0
    while len(out) < count:
        lab = f"@{i}"
        if lab not in taken:
            out.append(lab)
            taken.add(lab)
        i += 1
    return out


def _split_bag(d: MarkedGraph, a_side: int, b_side: int) -> MarkedGraph:
    g = d.graph
    n = g.n
    adj = list(g.adj)
    a_bound = mask_of(x for x in bits(a_side) if adj[x] & b_side)
    b_bound = mask_of(y for y in bits(b_side) if adj[y] & a_side)
    for x in bits(a_side):
        adj[x] &= ~b_side
    for y in bits(b_side):
        adj[y] &= ~a_side
    ma, mb = n, n + 1
    for x in bits(a_bound):
        adj[x] |= 1 << ma
    for y in bits(b_bound):
        adj[y] |= 1 << mb
    adj += [a_bound | (1 << mb), b_bound | (1 << ma)]
    labels = list(g.labels) + _fresh_labels(set(g.labels), 2)
    return MarkedGraph(
        Graph(tuple(adj), tuple(labels)),
        d.marked | {(ma, mb)},
        d.original + (False, False),
    )


def simple_decomposition(g: Graph, s: Split) -> MarkedGraph:
    """Two bags G[A]+a and G[B]+b joined by the marked edge ab."""
    s.check(g)
    return _split_bag(MarkedGraph.plain(g), mask_of(s.a_side), mask_of(s.b_side))


def recompose(d: MarkedGraph, e: Edge) -> MarkedGraph:
    """D∧ab - a - b for the marked edge ab."""
    a, b = _edge(*e)
    if (a, b) not in d.marked:
        raise ValueError("can only recompose along a marked edge")
    h = pivot(d.graph, a, b)
    lab_a, lab_b = d.graph.labels[a], d.graph.labels[b]
    h = h.delete(h.index(lab_a))
    h = h.delete(h.index(lab_b))
    marks = [p for p in d._marked_labels() if lab_a not in p]
    return d._with(h, marks, d._original_labels())


def recompose_all(d: MarkedGraph) -> Graph:
    while d.marked:
        d = recompose(d, min(d.marked))
    return d.graph


def classify_bag(d: MarkedGraph, bag: int) -> BagKind:
    h = d.bag_graph(bag)
    verts = list(bits(bag))
    if is_clique(h, h.full):
        return BagKind("complete")
    degs = sorted(h.degree(v) for v in range(h.n))
    if degs[-1] == h.n - 1 and degs[-2] == 1:
        c = max(range(h.n), key=h.degree)
        return BagKind("star", verts[c])
    if find_split(h) is not None:
        raise ValueError("bag has a split, so it is neither prime, star nor complete")
    return BagKind("prime")


def classify_bags(d: MarkedGraph) -> list[tuple[frozenset[int], BagKind]]:
    return [(frozenset(bits(b)), classify_bag(d, b)) for b in d.bags()]


def _merge_candidate(d: MarkedGraph) -> Edge | None:
    where: dict[int, BagKind] = {}
    for bag in d.bags():
        if popcount(bag) < 3:
            continue
        kind = classify_bag(d, bag)
        for v in bits(bag):
            where[v] = kind
    for u, v in sorted(d.marked):
        ku, kv = where.get(u), where.get(v)
        if ku is None or kv is None:
            continue
        if ku.kind == kv.kind == "complete":
            return (u, v)
        if ku.kind == kv.kind == "star" and (ku.center == u) != (kv.center == v):
            return (u, v)
    return None


def split_decomposition(g: Graph, seed: int | None = None) -> MarkedGraph:
    """Split bags until every bag is prime or has at most three vertices.

    ``seed`` randomises which bag is split next and which split is used.
    """
    if not is_connected(g):
        raise ValueError("split decompositions are defined for connected graphs")
    rng = random.Random(seed) if seed is not None else None
    d = MarkedGraph.plain(g)
    pending = d.bags()
    while pending:
        if rng is not None:
            bag = pending.pop(rng.randrange(len(pending)))
        else:
            bag = pending.pop(0)
        if popcount(bag) < 4:
            continue
        verts = list(bits(bag))
        s = find_split(d.bag_graph(bag), rng)
        if s is None:
            continue
        a = mask_of(verts[i] for i in s.a_side)
        b = mask_of(verts[i] for i in s.b_side)
        d = _split_bag(d, a, b)
        ma, mb = d.graph.n - 2, d.graph.n - 1
        pending += [a | (1 << ma), b | (1 << mb)]
    return d


def canonical_decomposition(g: Graph, seed: int | None = None) -> MarkedGraph:
    """Canonical split decomposition of a connected graph.

    Starts from :func:`split_decomposition`, then recomposes
    complete-complete neighbours and star center-leaf neighbours until none
    are left.
    """
    d = split_decomposition(g, seed)
    while (e := _merge_candidate(d)) is not None:
        d = recompose(d, e)
    return d


def is_canonical(d: MarkedGraph) -> bool:
    try:
        kinds = classify_bags(d)
    except ValueError:
        return False
    if len(kinds) > 1 and any(len(b) < 3 for b, _ in kinds):
        return False
    return _merge_candidate(d) is None


# alternating paths and D*v ---------------------------------------------------


def _alternating_reach(d: MarkedGraph, x: int) -> tuple[set[int], set[int]]:
    """Vertices reached from x by alternating paths starting with an unmarked
    edge: (ends after an unmarked edge, ends after a marked edge)."""
    um, mk = d.unmarked_rows(), d.marked_rows()
    after_u: set[int] = set()
    after_m: set[int] = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for v in frontier:
            for w in bits(um[v]):
                if w not in after_u:
                    after_u.add(w)
                    for z in bits(mk[w]):
                        if z not in after_m:
                            after_m.add(z)
                            nxt.append(z)
        frontier = nxt
    return after_u, after_m


def linked(d: MarkedGraph, x: int, y: int) -> bool:
    """Whether an alternating path joins the original vertices x and y."""
    d.check_original(x)
    d.check_original(y)
    if x == y:
        raise ValueError("linked needs two distinct vertices")
    return y in _alternating_reach(d, x)[0]


def representatives_of(d: MarkedGraph, v: int) -> frozenset[int]:
    """Vertices reached from v by even alternating paths, v included."""
    d.check_original(v)
    return frozenset(_alternating_reach(d, v)[1])


def local_complement_decomposition(d: MarkedGraph, v: int) -> MarkedGraph:
    """D*v: every bag holding a representative w of v becomes B*w."""
    rows = d.unmarked_rows()
    adj = list(d.graph.adj)
    for w in representatives_of(d, v):
        nb = rows[w]
        for u in bits(nb):
            adj[u] ^= nb & ~(1 << u)
    return MarkedGraph(Graph(tuple(adj), d.graph.labels), d.marked, d.original)


def marked_isomorphic(d1: MarkedGraph, d2: MarkedGraph, fix_originals: bool = False) -> bool:
    """Isomorphism preserving marks and the original/marker split; with
    ``fix_originals`` every original vertex must keep its label."""
    def keys(d: MarkedGraph) -> list:
        if fix_originals:
            return [("o", d.graph.labels[v]) if d.original[v] else ("m",) for v in range(d.graph.n)]
        return [("o",) if d.original[v] else ("m",) for v in range(d.graph.n)]

    if d1.graph.n != d2.graph.n or len(d1.marked) != len(d2.marked) or d1.graph.m != d2.graph.m:
        return False
    return (
        find_structure_isomorphism(
            [d1.unmarked_rows(), d1.marked_rows()], keys(d1),
            [d2.unmarked_rows(), d2.marked_rows()], keys(d2),
        )
        is not None
    )


def local_equivalence_invariant(g: Graph) -> tuple:
    """Code of the bag tree labelled by (bag size, unmarked count); locally
    equivalent graphs share it."""
    d = canonical_decomposition(g)
    bags, tree = d.bag_tree()
    labels = {
        i: (popcount(b), sum(d.original[v] for v in bits(b))) for i, b in enumerate(bags)
    }
    return tree_code(tree, labels)


# block graphs ------------------------------------------------------------------


def star_centers_unmarked(d: MarkedGraph) -> bool:
    kinds = classify_bags(d)
    return all(k.kind in ("star", "complete") for _, k in kinds) and all(
        d.original[k.center] for _, k in kinds if k.kind == "star" and k.center is not None
    )


def big_complete_bag_with_original(d: MarkedGraph) -> bool:
    return any(
        k.kind == "complete" and len(b) > 2 and any(d.original[v] for v in b)
        for b, k in classify_bags(d)
    )


def has_big_simplicial(g: Graph) -> bool:
    return any(g.degree(v) >= 2 for v in simplicial_vertices(g))


def check_block_characterizations(g: Graph) -> Report:
    """Block graphs via star centers; big simplicial vertices via complete bags."""
    rep = Report("block characterizations")
    d = canonical_decomposition(g)
    block = is_block_graph(g)
    rep.equal("block<=>star-centers-unmarked", block, star_centers_unmarked(d))
    if block:
        rep.equal(
            "simplicial-deg>=2<=>complete-bag-with-unmarked",
            has_big_simplicial(g),
            big_complete_bag_with_original(d),
        )
    return rep


def is_distance_hereditary_by_bags(g: Graph) -> bool:
    return all(k.kind != "prime" for _, k in classify_bags(canonical_decomposition(g)))


# the explicit decomposition of Δ_k members --------------------------------------


def build_appendix_decomposition(cert: DeltaCertificate, g: Graph) -> MarkedGraph:
    """D_G from thick edges and triangles of a Δ_k member, k >= 1.

    Star bags B(v) center each non-leaf v with leaves m(v,w) for its thick
    partner w (w itself when w is a leaf) and m(v,C) per triangle C at v;
    each triangle C gets a K3 bag on the m(C,v).
    """
    if cert.k < 1:
        raise ValueError("the explicit decomposition needs k >= 1")
    if cert.vertices != frozenset(range(g.n)) or not cert.graph.same_labeled(g):
        raise ValueError("certificate does not describe g")
    lab = g.labels
    partner = {}
    for u, v in cert.thick_edges():
        partner[u], partner[v] = v, u
    leaf = [g.degree(v) == 1 for v in range(g.n)]
    tris = triangles(g)
    names = list(lab)
    index: dict[tuple, int] = {}

    def marker(key: tuple, name: str) -> int:
        if key not in index:
            index[key] = len(names)
            names.append(name)
        return index[key]

    edges: list[Edge] = []
    marked: list[Edge] = []
    for v in range(g.n):
        if leaf[v]:
            continue
        w = partner[v]
        leaves = [w if leaf[w] else marker(("t", v, w), f"m({lab[v]},{lab[w]})")]
        for i, tri in enumerate(tris):
            if v in tri:
                leaves.append(marker(("vc", v, i), f"m({lab[v]},C{i})"))
        edges += [(v, x) for x in leaves]
    for i, tri in enumerate(tris):
        ms = [marker(("cv", i, v), f"m(C{i},{lab[v]})") for v in tri]
        edges += [(ms[0], ms[1]), (ms[0], ms[2]), (ms[1], ms[2])]
        for v, m in zip(tri, ms):
            marked.append(_edge(m, index[("vc", v, i)]))
    for u, w in cert.thick_edges():
        if not leaf[u] and not leaf[w]:
            marked.append(_edge(index[("t", u, w)], index[("t", w, u)]))
    edges += marked
    h = Graph.from_edges(len(names), edges, names)
    return MarkedGraph(h, frozenset(marked), tuple(i < g.n for i in range(len(names))))


# display -----------------------------------------------------------------------


def to_dot(d: MarkedGraph, name: str = "D") -> str:
    """Graphviz source: one cluster per bag, marked edges dashed."""
    lab = d.graph.labels
    out = [f"graph {name} {{"]
    for i, bag in enumerate(d.bags()):
        out.append(f"  subgraph cluster_{i} {{")
        for v in bits(bag):
            shape = "circle" if d.original[v] else "point"
            out.append(f'    "{lab[v]}" [shape={shape}];')
        out.append("  }")
    for u, v in d.graph.edges():
        style = ' [style=dashed]' if (u, v) in d.marked else ""
        out.append(f'  "{lab[u]}" -- "{lab[v]}"{style};')
    out.append("}")
    return "\n".join(out) + "\n"


__all__ = [
    "BagKind",
    "MarkedGraph",
    "Split",
    "build_appendix_decomposition",
    "canonical_decomposition",
    "check_block_characterizations",
    "classify_bags",
    "find_split",
    "is_canonical",
    "is_distance_hereditary_by_bags",
    "linked",
    "local_complement_decomposition",
    "local_equivalence_invariant",
    "marked_isomorphic",
    "recompose",
    "recompose_all",
    "representatives_of",
    "simple_decomposition",
    "split_decomposition",
    "to_dot",
]
