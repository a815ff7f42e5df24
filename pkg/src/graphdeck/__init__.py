"""Decks, common cards and recognizers for small-graph reconstruction experiments."""

from .canon import CanonicalForm, are_isomorphic, canonical_form
from .graph import Graph, GraphClass, GraphError, graph_from_edges

__all__ = [
    "CanonicalForm",
    "Graph",
    "GraphClass",
    "GraphError",
    "are_isomorphic",
    "canonical_form",
    "graph_from_edges",
]

__version__ = "0.1.0"
