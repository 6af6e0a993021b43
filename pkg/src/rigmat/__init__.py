"""Exact oracles for plane rigidity matroids: the sparsity-count matroid
with its pebble game, the pair-matrix (hyperconnectivity) matroid over any
characteristic, wedge-power duality, and orientation certificates."""

from rigmat._kernels import BACKEND
from rigmat.graphcore import Graph, Orientation, parse_graph6, emit_graph6

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Graph",
    "Orientation",
    "parse_graph6",
    "emit_graph6",
    "__version__",
]
