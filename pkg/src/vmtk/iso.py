"""Isomorphism, automorphism orbits and canonical forms.

Everything runs on *relational structures*: a vertex colouring plus one or
more symmetric adjacency relations given as bitset rows.  A plain graph has a
single relation; a marked graph has two (unmarked and marked edges).  The
search is colour refinement followed by individualisation with backtracking;
no automorphism group is ever materialised.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .graph import Graph, RootedGraph, bits

Relations = Sequence[Sequence[int]]


def _refine(rels: Relations, colors: list[int]) -> list[int]:
    """Equitable refinement; colours are renumbered canonically by signature."""
    n = len(colors)
    ncls = len(set(colors))
    while True:
        sigs = [
            (colors[v],) + tuple(tuple(sorted(colors[u] for u in bits(rel[v]))) for rel in rels)
            for v in range(n)
        ]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [order[s] for s in sigs]
        if len(order) == ncls:
            return colors
        ncls = len(order)


def _normalize(keys: Sequence[Hashable]) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys), key=repr))}
    return [order[k] for k in keys]


def find_structure_isomorphism(
    rels1: Relations,
    keys1: Sequence[Hashable],
    rels2: Relations,
    keys2: Sequence[Hashable],
) -> list[int] | None:
    """Map ``phi`` (list) from structure 1 onto structure 2, or None.

    ``keys`` are initial vertex colours that must be preserved.  Refinement
    runs on the disjoint union so colours stay comparable across both sides.
    """
    n1, n2 = len(keys1), len(keys2)
    if n1 != n2 or len(rels1) != len(rels2):
        return None
    n = n1
    if sorted(map(repr, keys1)) != sorted(map(repr, keys2)):
        return None
    rels = [
        tuple(r1) + tuple(row << n for row in r2) for r1, r2 in zip(rels1, rels2)
    ]
    colors = _normalize(list(keys1) + list(keys2))

    def search(colors: list[int]) -> list[int] | None:
        colors = _refine(rels, colors)
        left, right = colors[:n], colors[n:]
        if sorted(left) != sorted(right):
            return None
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(left):
            cells.setdefault(c, []).append(v)
        open_cells = [(len(vs), c) for c, vs in cells.items() if len(vs) > 1]
        if not open_cells:
            where = {c: v for v, c in enumerate(right)}
            phi = [where[c] for c in left]
            for r1, r2 in zip(rels1, rels2):
                for v in range(n):
                    img = 0
                    for u in bits(r1[v]):
                        img |= 1 << phi[u]
                    if img != r2[phi[v]]:
                        return None
            return phi
        c = min(open_cells)[1]
        x = cells[c][0]
        fresh = max(colors) + 1
        for y in range(n):
            if right[y] != c:
                continue
            trial = list(colors)
            trial[x] = fresh
            trial[n + y] = fresh
            phi = search(trial)
            if phi is not None:
                return phi
        return None

    return search(colors)


def _graph_keys(g: Graph, pins: Sequence[int]) -> list[Hashable]:
    keys: list[Hashable] = [0] * g.n
    for i, v in enumerate(pins):
        keys[v] = i + 1
    return keys


def find_isomorphism(
    g1: Graph, g2: Graph, pins1: Sequence[int] = (), pins2: Sequence[int] = ()
) -> list[int] | None:
    """Isomorphism g1 -> g2 sending ``pins1[i]`` to ``pins2[i]``, or None."""
    if len(pins1) != len(pins2) or g1.n != g2.n or g1.m != g2.m:
        return None
    return find_structure_isomorphism(
        [g1.adj], _graph_keys(g1, pins1), [g2.adj], _graph_keys(g2, pins2)
    )


def isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


def rooted_isomorphic(r1: RootedGraph, r2: RootedGraph) -> bool:
    return find_isomorphism(r1.graph, r2.graph, (r1.root,), (r2.root,)) is not None


@dataclass(frozen=True)
class OrbitPartition:
    classes: tuple[frozenset[int], ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def orbit_of(self, v: int) -> frozenset[int]:
        for c in self.classes:
            if v in c:
                return c
        raise KeyError(v)


def structure_orbits(
    rels: Relations, keys: Sequence[Hashable], pins: Sequence[int] = ()
) -> OrbitPartition:
    """Orbits of the automorphisms fixing every vertex in ``pins``.

    x ~ y iff some automorphism maps x to y; tested pairwise by pinned
    isomorphism search, with the refined colouring as a cheap filter.
    """
    n = len(keys)
    base = list(keys)
    for i, p in enumerate(pins):
        base[p] = ("pin", i)
    colors = _refine(rels, _normalize(base))
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(n):
        for y in range(x + 1, n):
            if colors[x] != colors[y] or find(x) == find(y):
                continue
            kx = list(base)
            ky = list(base)
            kx[x] = ("probe",)
            ky[y] = ("probe",)
            if find_structure_isomorphism(rels, kx, rels, ky) is not None:
                parent[find(y)] = find(x)
    groups: dict[int, set[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), set()).add(v)
    classes = sorted((frozenset(s) for s in groups.values()), key=min)
    return OrbitPartition(tuple(classes))


def automorphism_orbits(g: Graph, fixed: int | None = None) -> OrbitPartition:
    """Orbit partition of Aut(g), or of Aut(g, fixed) when a vertex is fixed."""
    pins: tuple[int, ...] = ()
    if fixed is not None:
        g.check_vertex(fixed)
        pins = (fixed,)
    return structure_orbits([g.adj], [0] * g.n, pins)


def structure_canonical_form(rels: Relations, keys: Sequence[Hashable]) -> tuple:
    """Canonical code: the least relabelled code over the refinement tree.

    Branches on the first smallest non-singleton cell.  Vertices of that cell
    that are twins of an already-tried vertex are skipped, since the twin
    transposition is an automorphism fixing all earlier choices.
    """
    n = len(keys)
    colors0 = _refine(rels, _normalize(keys))
    best: list[tuple | None] = [None]

    def twins(x: int, y: int) -> bool:
        mx, my = 1 << x, 1 << y
        return all(rel[x] & ~my == rel[y] & ~mx for rel in rels)

    def leaf(colors: list[int]) -> tuple:
        perm = sorted(range(n), key=colors.__getitem__)
        pos = [0] * n
        for i, v in enumerate(perm):
            pos[v] = i
        code = [tuple(repr(keys[v]) for v in perm)]
        for rel in rels:
            rows = []
            for v in perm:
                r = 0
                for u in bits(rel[v]):
                    r |= 1 << pos[u]
                rows.append(r)
            code.append(tuple(rows))
        return (n,) + tuple(code)

    def search(colors: list[int]) -> None:
        colors = _refine(rels, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        open_cells = [(len(vs), c) for c, vs in cells.items() if len(vs) > 1]
        if not open_cells:
            code = leaf(colors)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        c = min(open_cells)[1]
        tried: list[int] = []
        for x in cells[c]:
            if any(twins(x, t) for t in tried):
                continue
            tried.append(x)
            trial = [2 * col for col in colors]
            trial[x] += 1
            search(trial)

    search(colors0)
    assert best[0] is not None
    return best[0]


CANONICAL_MAX_N = 10


def canonical_form(g: Graph) -> tuple:
    """Label-free canonical code; equal codes iff isomorphic graphs."""
    if g.n > CANONICAL_MAX_N:
        raise ValueError(f"canonical forms are limited to {CANONICAL_MAX_N} vertices")
    return structure_canonical_form([g.adj], [0] * g.n)


def graph_from_canonical(code: tuple) -> Graph:
    n = code[0]
    return Graph(tuple(code[2]), tuple(str(i) for i in range(n)))
