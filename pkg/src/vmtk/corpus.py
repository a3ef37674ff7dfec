"""Seeded graph corpora for the verification suites.

Every generator takes a ``random.Random``; :func:`rng_for` derives one per
named corpus from a single integer seed, so suites stay independent of the
order they run in.
"""

from __future__ import annotations

import hashlib
import os
import random
from functools import lru_cache

from .graph import Graph, is_block_graph, is_connected
from .iso import canonical_form, graph_from_canonical

DEFAULT_SEED = 20240611
SEED_ENV = "VMTK_SEED"


def resolve_seed(seed: int | None = None) -> int:
    """Explicit seed, else $VMTK_SEED, else DEFAULT_SEED."""
    if seed is not None:
        return seed
    env = os.environ.get(SEED_ENV)
    return int(env) if env else DEFAULT_SEED


def rng_for(seed: int, name: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


@lru_cache(maxsize=None)
def _all_graph_codes(n: int) -> tuple[tuple, ...]:
    if n == 0:
        return (canonical_form(Graph((), ())),)
    out = set()
    for code in _all_graph_codes(n - 1):
        g = graph_from_canonical(code)
        for nb in range(1 << (n - 1)):
            h = Graph.from_edges(n, list(g.edges()) + [(v, n - 1) for v in range(n - 1) if (nb >> v) & 1])
            out.add(canonical_form(h))
    return tuple(sorted(out))


def all_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class on n vertices (n <= 8)."""
    if not 0 <= n <= 8:
        raise ValueError("exhaustive graph generation is limited to 8 vertices")
    return [graph_from_canonical(c) for c in _all_graph_codes(n)]


def all_trees(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if g.m == n - 1 and is_connected(g)]


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    while True:
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree from a random Prüfer sequence."""
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(n) if degree[v] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_block_graph(n: int, rng: random.Random, max_clique: int = 4) -> Graph:
    """Connected block graph grown by gluing cliques at existing vertices."""
    first = min(n, rng.randint(1, max_clique))
    edges = [(i, j) for i in range(first) for j in range(i + 1, first)]
    size = first
    while size < n:
        at = rng.randrange(size)
        new = list(range(size, min(n, size + rng.randint(1, max_clique - 1))))
        clique = [at] + new
        edges += [(a, b) for i, a in enumerate(clique) for b in clique[i + 1 :]]
        size += len(new)
    return Graph.from_edges(n, edges)


def random_dh_graph(n: int, rng: random.Random) -> Graph:
    """Connected distance-hereditary graph built from K2 by pendant vertices
    and true or false twins."""
    if n < 2:
        return Graph.from_edges(n, [])
    adj = [{1}, {0}]
    while len(adj) < n:
        v = rng.randrange(len(adj))
        new = len(adj)
        op = rng.choice(("pendant", "true", "false"))
        if op == "pendant":
            nb = {v}
        elif op == "true":
            nb = set(adj[v]) | {v}
        else:
            nb = set(adj[v])
        adj.append(nb)
        for u in nb:
            adj[u].add(new)
    return Graph.from_edges(n, [(u, w) for u in range(n) for w in adj[u] if u < w])


def random_non_block_dh_graph(n: int, rng: random.Random) -> Graph:
    while True:
        g = random_dh_graph(n, rng)
        if not is_block_graph(g):
            return g


def decomposition_corpus(seed: int, count: int = 200, max_n: int = 12) -> list[Graph]:
    """Connected graphs with 4..max_n vertices: DH, block and general ones."""
    rng = rng_for(seed, "decomposition")
    out = []
    for i in range(count):
        n = rng.randint(4, max_n)
        kind = i % 4
        if kind in (0, 1):
            out.append(random_dh_graph(n, rng))
        elif kind == 2:
            out.append(random_block_graph(n, rng))
        else:
            out.append(random_connected_graph(n, rng.uniform(0.25, 0.6), rng))
    return out


__all__ = [
    "DEFAULT_SEED",
    "SEED_ENV",
    "all_graphs",
    "all_trees",
    "decomposition_corpus",
    "random_block_graph",
    "random_connected_graph",
    "random_dh_graph",
    "random_graph",
    "random_non_block_dh_graph",
    "random_tree",
    "resolve_seed",
    "rng_for",
]
