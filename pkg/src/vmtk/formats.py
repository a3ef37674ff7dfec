"""Text formats: edge lists, graph6 and marked graphs."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, Iterable

from .graph import Graph

if TYPE_CHECKING:
    from .splitdec import MarkedGraph


class FormatError(ValueError):
    pass


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


# edge list -----------------------------------------------------------------


def read_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0 <= u < v < n)."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty edge list")
    try:
        n, m = map(int, lines[0].split())
        edges = [tuple(map(int, ln.split())) for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, found {len(edges)}")
    seen = set()
    for e in edges:
        if len(e) != 2 or not 0 <= e[0] < e[1] < n:
            raise FormatError(f"bad edge line {' '.join(map(str, e))!r}")
        if e in seen:
            raise FormatError(f"duplicate edge {e[0]} {e[1]}")
        seen.add(e)
    return Graph.from_edges(n, edges)


def write_edgelist(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


# graph6 --------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise FormatError("graph6 writer supports fewer than 258048 vertices")


def to_graph6(g: Graph) -> str:
    """Standard graph6: upper triangle column by column, six bits per char."""
    bitstream = [
        int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)
    ]
    bitstream += [0] * (-len(bitstream) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bitstream[i : i + 6])), 2))
        for i in range(0, len(bitstream), 6)
    )
    return _encode_n(g.n) + body


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise FormatError(f"not a graph6 string: {line!r}")
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        raise FormatError("graph6 strings with more than 258047 vertices are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise FormatError(f"graph6 body has {len(body)} chars, expected {need}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph6_lines(text: str) -> list[Graph]:
    return [from_graph6(ln) for ln in _content_lines(text)]


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    return "".join(to_graph6(g) + "\n" for g in graphs)


# files ----------------------------------------------------------------------


def detect_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    return "g6" if suffix in (".g6", ".graph6") else "edgelist"


def read_graphs(path: str | Path, fmt: str | None = None) -> list[Graph]:
    text = Path(path).read_text()
    fmt = fmt or detect_format(path)
    if fmt == "g6":
        graphs = read_graph6_lines(text)
        if not graphs:
            raise FormatError("no graphs in graph6 file")
        return graphs
    if fmt == "edgelist":
        return [read_edgelist(text)]
    raise FormatError(f"unknown format {fmt!r}")


# marked graphs -----------------------------------------------------------------

MARKER_TOKEN = "-"


def write_marked(d: MarkedGraph) -> str:
    """Header ``n_total n_original``, then ``v idx label|-`` and ``e u v M|U``."""
    g = d.graph
    out = [f"{g.n} {sum(d.original)}"]
    for v in range(g.n):
        out.append(f"v {v} {g.labels[v] if d.original[v] else MARKER_TOKEN}")
    for u, v in g.edges():
        out.append(f"e {u} {v} {'M' if (u, v) in d.marked else 'U'}")
    return "\n".join(out) + "\n"


def read_marked(text: str) -> MarkedGraph:
    from .splitdec import MarkedGraph

    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty marked graph")
    try:
        n, n_orig = map(int, lines[0].split())
    except ValueError:
        raise FormatError("bad marked-graph header") from None
    labels: list[str | None] = [None] * n
    edges, marked = [], []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "v" and len(parts) == 3:
            idx = int(parts[1])
            if not 0 <= idx < n or labels[idx] is not None:
                raise FormatError(f"bad vertex line {ln!r}")
            labels[idx] = parts[2]
        elif parts[0] == "e" and len(parts) == 4 and parts[3] in ("M", "U"):
            u, v = int(parts[1]), int(parts[2])
            if not 0 <= u < v < n:
                raise FormatError(f"bad edge line {ln!r}")
            edges.append((u, v))
            if parts[3] == "M":
                marked.append((u, v))
        else:
            raise FormatError(f"unrecognised line {ln!r}")
    if any(x is None for x in labels):
        raise FormatError("every vertex needs a v line")
    original = tuple(x != MARKER_TOKEN for x in labels)
    if sum(original) != n_orig:
        raise FormatError("original-vertex count does not match the header")
    names = [x if o else f"m{i}" for i, (x, o) in enumerate(zip(labels, original))]
    taken = {x for x, o in zip(labels, original) if o}
    for i, o in enumerate(original):
        if not o:
            while names[i] in taken:
                names[i] = "_" + names[i]
            taken.add(names[i])
    return MarkedGraph(Graph.from_edges(n, edges, names), frozenset(marked), original)
