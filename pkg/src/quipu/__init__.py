"""Exact spectral computations for H-shape trees, quipus and their cospectral mates."""

from .charpoly import char_poly
from .families import build_family, parse, render
from .graph import Graph, canonical_code, from_graph6, to_graph6
from .intpoly import IntPoly

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "IntPoly",
    "build_family",
    "canonical_code",
    "char_poly",
    "from_graph6",
    "parse",
    "render",
    "to_graph6",
]
