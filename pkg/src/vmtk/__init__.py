"""Vertex-minors, linear rank-width, the Δ_k family and split decompositions."""

from .graph import Graph, RootedGraph
from .rankwidth import cutrank, layout_width, linear_rankwidth, linear_rankwidth_exact, lrw_at_most
from .vertexminor import local_complement, pivot

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "RootedGraph",
    "cutrank",
    "layout_width",
    "linear_rankwidth",
    "linear_rankwidth_exact",
    "local_complement",
    "lrw_at_most",
    "pivot",
]
