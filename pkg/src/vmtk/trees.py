"""AHU-style canonical codes for labelled trees.

Codes are nested tuples ``(label, (child codes, sorted))`` and compare
equal exactly when the (rooted) labelled trees are isomorphic.
"""

from __future__ import annotations

from typing import Hashable, Mapping, Sequence


def rooted_code(
    adj: Mapping[Hashable, Sequence[Hashable]], labels: Mapping[Hashable, Hashable], root: Hashable
) -> tuple:
    # iterative post-order so deep trees do not hit the recursion limit
    codes: dict[Hashable, tuple] = {}
    stack: list[tuple[Hashable, Hashable, bool]] = [(root, None, False)]
    while stack:
        node, parent, done = stack.pop()
        kids = [c for c in adj[node] if c != parent]
        if done:
            codes[node] = (labels[node], tuple(sorted(codes[c] for c in kids)))
        else:
            stack.append((node, parent, True))
            stack.extend((c, node, False) for c in kids)
    return codes[root]


def centers(adj: Mapping[Hashable, Sequence[Hashable]]) -> list[Hashable]:
    degree = {v: len(adj[v]) for v in adj}
    layer = [v for v, d in degree.items() if d <= 1]
    remaining = len(adj)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    return layer if remaining > 0 else list(adj)


def tree_code(adj: Mapping[Hashable, Sequence[Hashable]], labels: Mapping[Hashable, Hashable]) -> tuple:
    """Canonical code of an unrooted labelled tree (min over its centres)."""
    if not adj:
        return ()
    return min(rooted_code(adj, labels, c) for c in centers(adj))
