"""Algebraic graph theory toolkit: named graphs, automorphism groups, Cayley
and coset graphs, exact spectral certificates, cores and designs."""

from .graph import BoundExceeded, Graph, GraphError, from_edges
from .perm import Permutation, PermGroup

__all__ = ["BoundExceeded", "Graph", "GraphError", "Permutation", "PermGroup", "from_edges"]
__version__ = "0.1.0"
