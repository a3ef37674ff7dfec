"""Local complementation, pivoting and vertex-minors."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal

from .graph import Graph, bits
from .iso import CANONICAL_MAX_N, canonical_form, graph_from_canonical

DEFAULT_ORBIT_CAP = 1_000_000


class OrbitOverflow(RuntimeError):
    pass


def local_complement(g: Graph, v: int) -> Graph:
    """G*v: complement the subgraph induced on N(v)."""
    g.check_vertex(v)
    nb = g.adj[v]
    adj = list(g.adj)
    for u in bits(nb):
        adj[u] ^= nb & ~(1 << u)
    return Graph(tuple(adj), g.labels)


def pivot(g: Graph, u: int, v: int) -> Graph:
    """G∧uv computed as G*u*v*u."""
    g.check_vertex(u)
    g.check_vertex(v)
    if not g.has_edge(u, v):
        raise ValueError(f"pivot needs an edge, {g.labels[u]}-{g.labels[v]} is not one")
    return local_complement(local_complement(local_complement(g, u), v), u)


def pivot_direct(g: Graph, u: int, v: int) -> Graph:
    """G∧uv by complementing between the three neighbourhood classes, then
    exchanging the neighbourhoods of u and v."""
    g.check_vertex(u)
    g.check_vertex(v)
    if not g.has_edge(u, v):
        raise ValueError(f"pivot needs an edge, {g.labels[u]}-{g.labels[v]} is not one")
    nu, nv = g.adj[u], g.adj[v]
    both = nu & nv
    only_u = nu & ~nv & ~(1 << v)
    only_v = nv & ~nu & ~(1 << u)
    adj = list(g.adj)
    for x, y in ((both, only_u), (both, only_v), (only_u, only_v)):
        for a in bits(x):
            adj[a] ^= y
        for b in bits(y):
            adj[b] ^= x
    # swap u and v: rows, then the u/v bit in every other row
    adj[u], adj[v] = adj[v], adj[u]
    bu, bv = 1 << u, 1 << v
    for w in range(g.n):
        row = adj[w]
        hu, hv = row & bu, row & bv
        row &= ~(bu | bv)
        if hu:
            row |= bv
        if hv:
            row |= bu
        adj[w] = row
    return Graph(tuple(adj), g.labels)


def delete(g: Graph, v: int) -> Graph:
    return g.delete(v)


def add_twin(g: Graph, v: int, adjacent: bool, label: str | None = None) -> Graph:
    """Add a vertex w with N(w) - {v} = N(v) - {w}, adjacent to v iff asked."""
    g.check_vertex(v)
    if label is None:
        label = g.labels[v] + "'"
        while label in g.labels:
            label += "'"
    nb = list(bits(g.adj[v]))
    if adjacent:
        nb.append(v)
    return g.add_vertex(label, nb)


def elementary_representatives(g: Graph, v: int) -> list[Graph]:
    """[G-v, G*v-v] plus G∧vw-v for the lowest-index neighbour w of v.

    Every elementary vertex-minor deleting v is locally equivalent to one of
    these, and the choice of w does not change linear rank-width.
    """
    g.check_vertex(v)
    reps = [g.delete(v), local_complement(g, v).delete(v)]
    if g.adj[v]:
        w = next(bits(g.adj[v]))
        reps.append(pivot(g, v, w).delete(v))
    return reps


@dataclass(frozen=True)
class VertexMinorStep:
    kind: Literal["L", "P", "D"]
    vertices: tuple[str, ...]

    def apply(self, g: Graph) -> Graph:
        idx = [g.index(x) for x in self.vertices]
        if self.kind == "L":
            return local_complement(g, idx[0])
        if self.kind == "P":
            return pivot(g, idx[0], idx[1])
        return g.delete(idx[0])

    def __str__(self) -> str:
        return " ".join((self.kind,) + self.vertices)

    @classmethod
    def parse(cls, text: str) -> VertexMinorStep:
        parts = text.split()
        arity = {"L": 1, "P": 2, "D": 1}
        if not parts or parts[0] not in arity or len(parts) != arity[parts[0]] + 1:
            raise ValueError(f"bad vertex-minor step {text!r}")
        return cls(parts[0], tuple(parts[1:]))  # type: ignore[arg-type]


def apply_steps(g: Graph, steps: Iterable[VertexMinorStep | str]) -> Graph:
    for step in steps:
        if isinstance(step, str):
            step = VertexMinorStep.parse(step)
        g = step.apply(g)
    return g


def local_orbit(g: Graph, max_size: int = DEFAULT_ORBIT_CAP) -> set[tuple]:
    """Canonical forms of all graphs locally equivalent to g (unlabelled)."""
    if g.n > CANONICAL_MAX_N:
        raise ValueError(f"local orbits are limited to {CANONICAL_MAX_N} vertices")
    start = canonical_form(g)
    seen = {start}
    queue = deque([start])
    while queue:
        h = graph_from_canonical(queue.popleft())
        for v in range(h.n):
            code = canonical_form(local_complement(h, v))
            if code not in seen:
                seen.add(code)
                if len(seen) > max_size:
                    raise OrbitOverflow(f"local orbit exceeds {max_size} graphs")
                queue.append(code)
    return seen


def locally_equivalent_small(g1: Graph, g2: Graph, max_size: int = DEFAULT_ORBIT_CAP) -> bool:
    if g1.n != g2.n:
        raise ValueError("locally equivalent graphs have the same vertex count")
    return canonical_form(g2) in local_orbit(g1, max_size)


def neighborhood_classes(g: Graph, u: int, v: int) -> tuple[int, int, int]:
    """(N(u)∩N(v), N(u)-N(v)-v, N(v)-N(u)-u) as bitmasks."""
    nu, nv = g.adj[u], g.adj[v]
    return nu & nv, nu & ~nv & ~(1 << v), nv & ~nu & ~(1 << u)


__all__ = [
    "OrbitOverflow",
    "VertexMinorStep",
    "add_twin",
    "apply_steps",
    "delete",
    "elementary_representatives",
    "local_complement",
    "local_orbit",
    "locally_equivalent_small",
    "neighborhood_classes",
    "pivot",
    "pivot_direct",
]
