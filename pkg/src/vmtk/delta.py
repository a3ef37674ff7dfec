"""The Δ_k family: construction, recognition, counting and verification.

Δ_0 is K2 on labels ``x, y``; a member of Δ_k is a delta composition of
three members of Δ_{k-1}, i.e. their disjoint union plus a triangle on one
chosen root per part.  Labels are part paths such as ``"2.1.x"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

from .graph import (
    Graph,
    RootedGraph,
    bits,
    blocks,
    disjoint_union,
    is_block_graph,
    is_twin,
    popcount,
)
from .iso import automorphism_orbits, rooted_isomorphic
from .rankwidth import (
    EXACT_MAX_N,
    Layout,
    layout_width,
    linear_rankwidth_exact,
    lrw_at_most,
)
from .report import Report
from .trees import rooted_code, tree_code
from .vertexminor import elementary_representatives

ENUMERATE_MAX_K = 2
CONSTRUCT_MAX_K = 3


def delta_zero() -> Graph:
    return Graph.from_edges(2, [(0, 1)], ["x", "y"])


def delta_size(k: int) -> int:
    return 2 * 3**k


def delta_level(n: int) -> int | None:
    """k with n = 2*3^k, or None."""
    k = 0
    while delta_size(k) < n:
        k += 1
    return k if delta_size(k) == n else None


def delta_compose(r1: RootedGraph, r2: RootedGraph, r3: RootedGraph) -> Graph:
    """Disjoint union of three rooted graphs plus a triangle on their roots."""
    parts = (r1, r2, r3)
    labels = [f"{i}.{x}" for i, r in enumerate(parts, 1) for x in r.graph.labels]
    g = disjoint_union([r.graph for r in parts], labels)
    offsets = [0, r1.graph.n, r1.graph.n + r2.graph.n]
    roots = [o + r.root for o, r in zip(offsets, parts)]
    adj = list(g.adj)
    for a in roots:
        for b in roots:
            if a != b:
                adj[a] |= 1 << b
    return Graph(tuple(adj), g.labels)


# canonical codes for block graphs ---------------------------------------


def block_code(g: Graph, root: int | None = None, mark: int | None = None) -> tuple:
    """Canonical code of a connected block graph via its vertex-block tree.

    A block graph is determined by which vertices share which cliques, so
    isomorphism of block graphs is isomorphism of the bipartite incidence
    tree.  ``root`` / ``mark`` pin vertices (rooted and doubly rooted codes).
    """
    if not is_block_graph(g):
        raise ValueError("block codes are only defined for block graphs")
    tree: dict[tuple, list[tuple]] = {("v", v): [] for v in range(g.n)}
    labels: dict[tuple, str] = {("v", v): "v" for v in range(g.n)}
    for j, b in enumerate(blocks(g)):
        if len(b) < 2:
            continue
        node = ("b", j)
        tree[node] = [("v", v) for v in sorted(b)]
        labels[node] = "b"
        for v in b:
            tree[("v", v)].append(node)
    if mark is not None:
        labels[("v", mark)] = "m"
    if root is None:
        return tree_code(tree, labels)
    labels[("v", root)] = "r" if mark != root else "rm"
    return rooted_code(tree, labels, ("v", root))


# enumeration -------------------------------------------------------------


@lru_cache(maxsize=None)
def _unrooted_classes(k: int) -> tuple[Graph, ...]:
    if k == 0:
        return (delta_zero(),)
    reps = _rooted_classes(k - 1)
    seen: dict[tuple, Graph] = {}
    for i, j, l in combinations_with_replacement(range(len(reps)), 3):
        g = delta_compose(reps[i], reps[j], reps[l])
        seen.setdefault(block_code(g), g)
    return tuple(seen.values())


@lru_cache(maxsize=None)
def _rooted_classes(k: int) -> tuple[RootedGraph, ...]:
    out = []
    for g in _unrooted_classes(k):
        seen: set[tuple] = set()
        for v in range(g.n):
            code = block_code(g, root=v)
            if code not in seen:
                seen.add(code)
                out.append(RootedGraph(g, v))
    return tuple(out)


def enumerate_delta(k: int) -> list[Graph]:
    """One graph per isomorphism class of Δ_k (k <= 2)."""
    if not 0 <= k <= ENUMERATE_MAX_K:
        raise ValueError(f"full enumeration is limited to k <= {ENUMERATE_MAX_K}; use count_delta")
    return list(_unrooted_classes(k))


def enumerate_rooted_delta(k: int) -> list[RootedGraph]:
    """One rooted graph per rooted isomorphism class (G, v), G in Δ_k (k <= 2)."""
    if not 0 <= k <= ENUMERATE_MAX_K:
        raise ValueError(f"rooted enumeration is limited to k <= {ENUMERATE_MAX_K}")
    return list(_rooted_classes(k))


def constructed_class_count(k: int) -> int:
    """Number of distinct block codes among all compositions of rooted Δ_{k-1}
    representatives; counts Δ_k up to isomorphism by construction (k <= 3)."""
    if not 0 <= k <= CONSTRUCT_MAX_K:
        raise ValueError(f"construction-based counting is limited to k <= {CONSTRUCT_MAX_K}")
    return len(_unrooted_classes(k))


# recognition ---------------------------------------------------------------


@dataclass(frozen=True)
class DeltaCertificate:
    """Recursive witness that ``graph[vertices]`` is a member of Δ_k.

    Vertex indices refer to the ambient ``graph`` at every level.  For k = 0
    ``vertices`` is the thick edge; for k >= 1 ``parts[i]`` contains
    ``triangle[i]``.
    """

    graph: Graph = field(repr=False, compare=False)
    k: int
    vertices: frozenset[int]
    triangle: tuple[int, int, int] | None = None
    parts: tuple[DeltaCertificate, ...] = ()

    def subgraph(self) -> Graph:
        return self.graph.induced(self.vertices)

    def rooted_part(self, i: int) -> RootedGraph:
        """(G_i, v_i) as a standalone rooted graph."""
        assert self.triangle is not None
        part = self.parts[i]
        order = sorted(part.vertices)
        return RootedGraph(part.subgraph(), order.index(self.triangle[i]))

    def thick_edges(self) -> list[tuple[int, int]]:
        if self.k == 0:
            a, b = sorted(self.vertices)
            return [(a, b)]
        return [e for p in self.parts for e in p.thick_edges()]

    def main_triangles(self) -> list[tuple[int, int, int]]:
        if self.k == 0:
            return []
        assert self.triangle is not None
        return [self.triangle] + [t for p in self.parts for t in p.main_triangles()]


class UniquenessViolation(AssertionError):
    """More than one triangle splits a graph into three Δ_{k-1} parts."""


def _recognize(g: Graph, vs: int, k: int) -> DeltaCertificate | None:
    if popcount(vs) != delta_size(k):
        return None
    if k == 0:
        a, b = bits(vs)
        if g.has_edge(a, b):
            return DeltaCertificate(g, 0, frozenset((a, b)))
        return None
    local = [g.adj[v] & vs if (vs >> v) & 1 else 0 for v in range(g.n)]
    found: list[DeltaCertificate] = []
    size = delta_size(k - 1)
    for a in bits(vs):
        for b in bits(local[a] & ~((2 << a) - 1)):
            for c in bits(local[a] & local[b] & ~((2 << b) - 1)):
                tri = (a, b, c)
                cut = list(local)
                for x in tri:
                    for y in tri:
                        if x != y:
                            cut[x] &= ~(1 << y)
                comps = _comps(cut, vs)
                if len(comps) != 3 or any(popcount(m) != size for m in comps):
                    continue
                owners = []
                for x in tri:
                    owners.append(next(i for i, m in enumerate(comps) if (m >> x) & 1))
                if sorted(owners) != [0, 1, 2]:
                    continue
                parts = []
                for x, i in zip(tri, owners):
                    sub = _recognize(g, comps[i], k - 1)
                    if sub is None:
                        break
                    parts.append(sub)
                else:
                    found.append(DeltaCertificate(g, k, frozenset(bits(vs)), tri, tuple(parts)))
    if len(found) > 1:
        raise UniquenessViolation(f"{len(found)} main triangles found at level {k}")
    return found[0] if found else None


def _comps(adj: Sequence[int], within: int) -> list[int]:
    out = []
    rest = within
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def recognize_delta(g: Graph) -> DeltaCertificate | None:
    """Certificate that g is in Δ_k for the k with |V| = 2*3^k, else None."""
    k = delta_level(g.n)
    if k is None:
        return None
    return _recognize(g, g.full, k)


# types and counting ------------------------------------------------------


@dataclass(frozen=True)
class DeltaType:
    tag: str
    order: tuple[int, int, int]

    @property
    def symmetry_order(self) -> int:
        return {"A": 6, "B": 2, "C": 1}[self.tag]


def classify_type(cert: DeltaCertificate) -> DeltaType:
    """Type A/B/C by pairwise rooted isomorphism of the three parts.

    ``order`` lists part indices; for Type-B the isomorphic pair sits in
    the first and last slot.
    """
    if cert.k == 0:
        raise ValueError("Δ_0 has no type")
    r = [cert.rooted_part(i) for i in range(3)]
    same = {(i, j): rooted_isomorphic(r[i], r[j]) for i in range(3) for j in range(i + 1, 3)}
    hits = [p for p, ok in same.items() if ok]
    if len(hits) == 3:
        return DeltaType("A", (0, 1, 2))
    if len(hits) == 1:
        i, j = hits[0]
        odd = ({0, 1, 2} - {i, j}).pop()
        return DeltaType("B", (i, odd, j))
    if not hits:
        return DeltaType("C", (0, 1, 2))
    raise AssertionError("rooted isomorphism is not transitive")


def rooted_orbit_count(r: RootedGraph) -> int:
    return automorphism_orbits(r.graph, fixed=r.root).count


@lru_cache(maxsize=None)
def _rooted_count(k: int) -> int:
    """p_k: by rooted enumeration for k <= 2, by orbit sums for k = 3."""
    if k <= ENUMERATE_MAX_K:
        return len(_rooted_classes(k))
    if k == 3:
        reps = _rooted_classes(2)
        norb = [rooted_orbit_count(r) for r in reps]
        total = 0
        for i, j, l in combinations_with_replacement(range(len(reps)), 3):
            distinct = {i, j, l}
            total += sum(norb[x] for x in distinct)
        return total
    raise ValueError("p_k is only computed for k <= 3")


@dataclass(frozen=True)
class CountTable:
    k: int
    p_prev: int | None
    p: int | None
    a: int
    b: int
    c: int
    total: int
    constructed_total: int | None = None

    def rows(self) -> list[tuple[str, int | None]]:
        return [
            ("k", self.k),
            (f"p_{self.k - 1}", self.p_prev),
            (f"p_{self.k}", self.p),
            (f"a_{self.k}", self.a),
            (f"b_{self.k}", self.b),
            (f"c_{self.k}", self.c),
            (f"total_{self.k}", self.total),
            (f"constructed_total_{self.k}", self.constructed_total),
        ]


def count_delta(k: int) -> CountTable:
    """Type-A/B/C class counts of Δ_k from p_{k-1} (k <= 4)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return CountTable(0, None, 1, 0, 0, 0, 1, 1)
    if k > 4:
        raise ValueError("counts need p_{k-1}, which is only available for k - 1 <= 3")
    p = _rooted_count(k - 1)
    a, b, c = p, p * (p - 1), comb(p, 3)
    return CountTable(
        k,
        p,
        _rooted_count(k) if k <= 3 else None,
        a,
        b,
        c,
        a + b + c,
        constructed_class_count(k) if k <= CONSTRUCT_MAX_K else None,
    )


def size_recurrence_bound(k: int, a_k: int) -> int:
    """2^{k-1} a_k^2 (a_k + 1), the lower bound on p_k."""
    return 2 ** (k - 1) * a_k * a_k * (a_k + 1)


def orbit_lower_bound_check(g: Graph, cert: DeltaCertificate) -> Report:
    """Orbit counts of a Δ_k member against the rooted, typed and factorised
    formulas (|V| <= 18)."""
    k = cert.k
    if cert.vertices != frozenset(range(g.n)) or not cert.graph.same_labeled(g):
        raise ValueError("certificate does not describe g")
    if g.n > delta_size(2):
        raise ValueError("orbit checks are limited to 18 vertices")
    rep = Report(f"orbits k={k}")
    for v in range(g.n):
        rep.bound(f"norb(G,{g.labels[v]})", ">=", 2 ** (k + 1), automorphism_orbits(g, v).count)
    if k == 0:
        return rep
    norb = automorphism_orbits(g).count
    t = classify_type(cert)
    factor = {"A": 1, "B": 2, "C": 3}[t.tag]
    rep.bound(f"norb(G)[type-{t.tag}]", ">=", factor * 2**k, norb)
    parts = [rooted_orbit_count(cert.rooted_part(i)) for i in t.order]
    if t.tag == "A":
        expected = parts[0]
    elif t.tag == "B":
        expected = parts[0] + parts[1]
    else:
        expected = sum(parts)
    rep.equal(f"norb(G)=factorised[type-{t.tag}]", expected, norb)
    return rep


# layouts -------------------------------------------------------------------


def _twin_order(cert: DeltaCertificate, v: int) -> list[int]:
    """Layout of cert's vertices starting at v; appending a twin of v at the
    end keeps the width at k+1."""
    if cert.k == 0:
        a, b = sorted(cert.vertices)
        return [v, b if v == a else a]
    assert cert.triangle is not None
    j = next(i for i, p in enumerate(cert.parts) if v in p.vertices)
    first, last = (j + 1) % 3, (j + 2) % 3
    ending = _twin_order(cert.parts[first], cert.triangle[first])[::-1]
    middle = _twin_order(cert.parts[j], v)[1:]
    starting = _twin_order(cert.parts[last], cert.triangle[last])
    return [v] + ending + middle + starting


def build_delta_layout(cert: DeltaCertificate, start: int) -> Layout:
    """Layout of a whole Δ_k member of width k+1 whose first vertex is ``start``."""
    if cert.vertices != frozenset(range(cert.graph.n)):
        raise ValueError("certificate must cover the whole graph")
    if start not in cert.vertices:
        raise KeyError(f"unknown vertex {start!r}")
    return tuple(_twin_order(cert, start))


def build_twin_layout(g: Graph, cert: DeltaCertificate, v: int, w: int) -> Layout:
    """Layout of g starting at v and ending at w, where w is a twin of v and
    ``cert`` certifies g - w (matched to g by labels)."""
    g.check_vertex(v)
    g.check_vertex(w)
    if not is_twin(g, v, w):
        raise ValueError("w is not a twin of v")
    base = cert.graph
    if cert.vertices != frozenset(range(base.n)) or not g.delete(w).same_labeled(base):
        raise ValueError("certificate does not describe g - w")
    to_g = [g.index(x) for x in base.labels]
    order = _twin_order(cert, base.index(g.labels[v]))
    layout = tuple(to_g[x] for x in order) + (w,)
    width = layout_width(g, layout)
    if width != cert.k + 1:
        raise AssertionError(f"constructed layout has width {width}, expected {cert.k + 1}")
    return layout


# verification --------------------------------------------------------------


def verify_excluded(g: Graph, k: int) -> Report:
    """lrw(g) = k+1 and every elementary vertex-minor has lrw <= k."""
    rep = Report(f"excluded k={k}")
    cert = recognize_delta(g)
    rep.equal("member-of-delta", k, None if cert is None else cert.k)
    if cert is None:
        return rep
    if g.n > EXACT_MAX_N:
        raise ValueError(f"exact verification is limited to {EXACT_MAX_N} vertices")
    rep.equal("lrw(G)", k + 1, linear_rankwidth_exact(g)[0])
    kinds = ("del", "loc", "piv")
    for v in range(g.n):
        for kind, h in zip(kinds, elementary_representatives(g, v)):
            rep.bound(f"lrw(G{kind}[{g.labels[v]}])", "<=", k, linear_rankwidth_exact(h)[0])
    return rep


def _exact_lrw_by_decision(g: Graph, k: int) -> tuple[bool, bool]:
    """(lrw <= k, lrw <= k-1) via the decision search, witness re-checked."""
    ok, layout = lrw_at_most(g, k)
    if ok:
        assert layout is not None and layout_width(g, layout) <= k
    below, _ = lrw_at_most(g, k - 1)
    return ok, below


def verify_composition_lemmas(k: int, third_parts: Sequence[Graph] | None = None) -> Report:
    """Bridge joins and two-member delta compositions of Δ_{k-1} have lrw k.

    ``third_parts`` defaults to every graph on at most 6 vertices (k = 2) or
    3 vertices (k = 1) whose linear rank-width is at most k-1.
    """
    if k not in (1, 2):
        raise ValueError("composition lemmas are verified for k in {1, 2}")
    from .corpus import all_graphs

    rep = Report(f"composition k={k}")
    reps = _rooted_classes(k - 1)
    for i, j in combinations_with_replacement(range(len(reps)), 2):
        r1, r2 = reps[i], reps[j]
        joined = disjoint_union([r1.graph, r2.graph], [f"1.{x}" for x in r1.graph.labels] + [f"2.{x}" for x in r2.graph.labels])
        joined = joined.toggle_edge(r1.root, r1.graph.n + r2.root)
        at_most, below = _exact_lrw_by_decision(joined, k)
        rep.truth(f"join[{i},{j}]:lrw<={k}", at_most)
        rep.truth(f"join[{i},{j}]:lrw>={k}", not below)
    if third_parts is None:
        limit = 6 if k == 2 else 3
        third_parts = [
            h
            for n in range(1, limit + 1)
            for h in all_graphs(n)
            if lrw_at_most(h, k - 1)[0]
        ]
    for t, h in enumerate(third_parts):
        roots = [min(c) for c in automorphism_orbits(h).classes]
        for i, j in combinations_with_replacement(range(len(reps)), 2):
            for root in roots:
                g = delta_compose(reps[i], reps[j], RootedGraph(h, root))
                at_most, below = _exact_lrw_by_decision(g, k)
                rep.truth(f"delta[{i},{j},h{t}@{root}]:lrw<={k}", at_most)
                rep.truth(f"delta[{i},{j},h{t}@{root}]:lrw>={k}", not below)
    return rep


def is_delta_shaped(g: Graph) -> bool:
    """Block graph, all blocks K2/K3, every degree odd: necessary for Δ_k."""
    return is_block_graph(g) and all(len(b) in (2, 3) for b in blocks(g)) and all(
        g.degree(v) % 2 == 1 for v in range(g.n)
    )


__all__ = [
    "CountTable",
    "DeltaCertificate",
    "DeltaType",
    "UniquenessViolation",
    "block_code",
    "build_delta_layout",
    "build_twin_layout",
    "classify_type",
    "constructed_class_count",
    "count_delta",
    "delta_compose",
    "delta_level",
    "delta_size",
    "delta_zero",
    "enumerate_delta",
    "enumerate_rooted_delta",
    "orbit_lower_bound_check",
    "recognize_delta",
    "rooted_orbit_count",
    "size_recurrence_bound",
    "verify_composition_lemmas",
    "verify_excluded",
]
