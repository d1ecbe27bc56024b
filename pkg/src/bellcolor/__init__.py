"""Bell colouring graphs: construction, clique analysis, matchings and reconstruction."""

from __future__ import annotations

from .bell import BellGraph, build_bell, degree_stats
from .canon import canonical_form, find_isomorphism, is_isomorphic
from .errors import BellError
from .graph import Graph, Multigraph
from .graph6 import parse_graph6, write_graph6
from .partitions import StablePartition

__all__ = [
    "BellError",
    "BellGraph",
    "Graph",
    "Multigraph",
    "StablePartition",
    "build_bell",
    "canonical_form",
    "degree_stats",
    "find_isomorphism",
    "is_isomorphic",
    "parse_graph6",
    "write_graph6",
]

__version__ = "0.1.0"
