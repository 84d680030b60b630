"""Toolkit for C7-free planar graphs: embeddings, triangular blocks, local
replacements, counting audits, the extremal construction and exhaustive
small-case search."""

from .embedding import Embedding, embed
from .extremal import build_g0, construct, expand_to_g, verify_extremal
from .graph import Graph, find_cycle

__all__ = ["Embedding", "Graph", "build_g0", "construct", "embed", "expand_to_g", "find_cycle", "verify_extremal"]
__version__ = "0.1.0"
