"""Cut-rank over GF(2), layout widths and exact linear rank-width.

Rows of cut matrices are int bitsets.  The exact solver is the subset
recurrence f(S) = max(cutrk(S), min_{v in S} f(S - v)), evaluated layer by
layer with numpy over a table of all 2^n cut-ranks.
"""

from __future__ import annotations

import logging
import sys
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, bits

log = logging.getLogger(__name__)

EXACT_MAX_N = 20
Layout = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """The decision search ran out of its state budget before deciding."""


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of a matrix given as int-bitset rows."""
    basis: dict[int, int] = {}  # leading bit -> row
    rank = 0
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            if lead not in basis:
                basis[lead] = r
                rank += 1
                break
            r ^= basis[lead]
    return rank


def cut_matrix(g: Graph, x: int) -> list[int]:
    """Rows of A(G)[X, V-X] for X given as a bitmask (columns are vertex bits)."""
    rest = g.full & ~x
    return [g.adj[v] & rest for v in bits(x)]


def _as_mask(g: Graph, x: int | Iterable[int]) -> int:
    if isinstance(x, int):
        m = x
    else:
        m = 0
        for v in x:
            g.check_vertex(v)
            m |= 1 << v
    if m & ~g.full or m < 0:
        raise ValueError("vertex set is not a subset of V(G)")
    return m


def cutrank(g: Graph, x: int | Iterable[int]) -> int:
    """cutrk_G(X); X may be a bitmask or an iterable of vertex indices."""
    return gf2_rank(cut_matrix(g, _as_mask(g, x)))


def check_layout(g: Graph, layout: Sequence[int]) -> None:
    if sorted(layout) != list(range(g.n)):
        raise ValueError("layout is not a permutation of the vertex set")


def layout_width(g: Graph, layout: Sequence[int]) -> int:
    check_layout(g, layout)
    if g.n <= 1:
        return 0
    width = 0
    prefix = 0
    for v in layout:
        prefix |= 1 << v
        width = max(width, cutrank(g, prefix))
    return width


def check_submodularity(g: Graph, x: int | Iterable[int], y: int | Iterable[int]) -> bool:
    a, b = _as_mask(g, x), _as_mask(g, y)
    return cutrank(g, a) + cutrank(g, b) >= cutrank(g, a & b) + cutrank(g, a | b)


# exact DP ---------------------------------------------------------------

_CHUNK = 1 << 15


def cutrank_table(g: Graph) -> np.ndarray:
    """cutrk_G(S) for every bitmask S, as a uint8 array of length 2^n.

    Vectorised Gaussian elimination: each mask owns an (n x n) bit matrix
    whose row x is adj[x] restricted to V-S when x is in S, zero otherwise.
    Only masks avoiding the last vertex are eliminated; the rest follow from
    cutrk(S) = cutrk(V - S).
    """
    n = g.n
    if n > EXACT_MAX_N:
        raise ValueError(f"cut-rank tables are limited to {EXACT_MAX_N} vertices")
    out = np.zeros(1 << n, dtype=np.uint8)
    if n <= 1:
        return out
    total = 1 << (n - 1)
    adj = np.array(g.adj, dtype=np.uint32)
    vbits = np.arange(n, dtype=np.uint32)
    full = np.uint32(g.full)
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.uint32)
        member = ((masks[:, None] >> vbits[None, :]) & 1).astype(bool)
        rows = np.where(member, adj[None, :] & (full ^ masks)[:, None], 0).astype(np.uint32)
        rank = np.zeros(len(masks), dtype=np.uint8)
        for c in range(n):
            has_c = ((rows >> np.uint32(c)) & 1).astype(bool)
            any_c = has_c.any(axis=1)
            if not any_c.any():
                continue
            pivot = rows[np.arange(len(masks)), has_c.argmax(axis=1)]
            rows ^= np.where(has_c, pivot[:, None], 0).astype(np.uint32)
            rank += any_c
        out[start : start + len(masks)] = rank
    out[total:] = out[:total][::-1]
    return out


def _popcount_layers(n: int) -> list[np.ndarray]:
    masks = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        pc += (masks >> v) & 1
    return [masks[pc == k] for k in range(n + 1)]


def linear_rankwidth_exact(g: Graph, table: np.ndarray | None = None) -> tuple[int, Layout]:
    """Exact lrw(g) with a witness layout of that width.

    Ties in the back-pointer walk go to the lowest vertex index.
    """
    n = g.n
    if n > EXACT_MAX_N:
        raise ValueError(
            f"exact linear rank-width is limited to {EXACT_MAX_N} vertices; use lrw_at_most"
        )
    if n <= 1:
        return 0, tuple(range(n))
    cr = cutrank_table(g) if table is None else table
    big = np.int16(127)
    f = np.full(1 << n, big, dtype=np.int16)
    f[0] = 0
    for layer in _popcount_layers(n)[1:]:
        best = np.full(len(layer), big, dtype=np.int16)
        for v in range(n):
            bit = np.int64(1 << v)
            has = (layer & bit) != 0
            cand = np.where(has, f[layer ^ bit], big)
            np.minimum(best, cand, out=best)
        f[layer] = np.maximum(best, cr[layer].astype(np.int16))
    order = []
    s = (1 << n) - 1
    while s:
        prev = [(int(f[s ^ (1 << v)]), v) for v in bits(s)]
        _, v = min(prev)
        order.append(v)
        s ^= 1 << v
    layout = tuple(reversed(order))
    return int(f[(1 << n) - 1]), layout


# decision search ----------------------------------------------------------

DEFAULT_BUDGET = 2_000_000


def lrw_at_most(
    g: Graph, t: int, budget: int = DEFAULT_BUDGET
) -> tuple[bool, Layout | None]:
    """Decide lrw(g) <= t; returns (True, witness) or (False, None).

    Depth-first search over prefix sets whose cut-rank stays <= t, with
    failed prefixes memoised.  If some v keeps cutrk(S+v) <= cutrk(S) it is
    appended greedily: by submodularity this never hurts.  Raises
    BudgetExceeded once more than ``budget`` prefix sets were expanded.
    """
    n = g.n
    if t < 0:
        return False, None
    if n <= 1 or t >= n:
        return True, tuple(range(n))
    full = g.full
    cache: dict[int, int] = {0: 0, full: 0}

    def cr(s: int) -> int:
        r = cache.get(s)
        if r is None:
            r = cache[s] = gf2_rank(cut_matrix(g, s))
        return r

    dead: set[int] = set()
    expanded = 0
    prefix: list[int] = []

    def extend(s: int) -> bool:
        nonlocal expanded
        if s == full:
            return True
        if s in dead:
            return False
        expanded += 1
        if expanded > budget:
            raise BudgetExceeded(f"lrw_at_most exceeded {budget} expanded prefixes")
        here = cr(s)
        options = []
        for v in bits(full & ~s):
            r = cr(s | (1 << v))
            if r <= here:
                prefix.append(v)
                if extend(s | (1 << v)):
                    return True
                prefix.pop()
                dead.add(s)
                return False
            if r <= t:
                options.append((r, v))
        for _, v in sorted(options):
            prefix.append(v)
            if extend(s | (1 << v)):
                return True
            prefix.pop()
        dead.add(s)
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 100))
    try:
        found = extend(0)
    finally:
        sys.setrecursionlimit(limit)
    return (True, tuple(prefix)) if found else (False, None)


def linear_rankwidth(g: Graph) -> int:
    """lrw by exact DP when small enough, else by increasing decision thresholds."""
    if g.n <= EXACT_MAX_N:
        return linear_rankwidth_exact(g)[0]
    t = 0
    while not lrw_at_most(g, t)[0]:
        t += 1
    return t


def brute_force_lrw(g: Graph) -> int:
    """min over all n! layouts of the layout width (test oracle, n <= 8)."""
    from itertools import permutations

    n = g.n
    if n <= 1:
        return 0
    cr = [gf2_rank(cut_matrix(g, s)) for s in range(1 << n)]
    best = n
    for perm in permutations(range(n)):
        # reversal has the same width by symmetry of cut-rank
        if perm[0] > perm[-1]:
            continue
        s = 0
        w = 0
        for v in perm[:-1]:
            s |= 1 << v
            if cr[s] > w:
                w = cr[s]
                if w >= best:
                    break
        if w < best:
            best = w
    return best


def prefix_sets(layout: Sequence[int]) -> list[int]:
    out = []
    s = 0
    for v in layout:
        s |= 1 << v
        out.append(s)
    return out


__all__ = [
    "BudgetExceeded",
    "EXACT_MAX_N",
    "Layout",
    "brute_force_lrw",
    "check_layout",
    "check_submodularity",
    "cut_matrix",
    "cutrank",
    "cutrank_table",
    "gf2_rank",
    "layout_width",
    "linear_rankwidth",
    "linear_rankwidth_exact",
    "lrw_at_most",
]
