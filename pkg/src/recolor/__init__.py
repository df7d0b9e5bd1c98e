"""Recoloring reconfiguration analysis for small graphs.

Exact tools for the reconfiguration graph R_k(G) of proper k-colorings
(single-vertex recoloring), frozen colorings, induced-path freeness, and the
graph families used to study k-mixing of P5-free graphs.
"""

from .coloring import ProperColoring, RecoloringStep
from .graph import Graph, build_graph, expand, false_twins, identify, is_homogeneous
from .formats import from_graph6, to_graph6
from .patterns import chromatic_number, clique_number, find_induced, is_k_colorable, is_pl_free
from .recoloring import (
    ReconfigReport,
    enumerate_colorings,
    is_frozen,
    reconfig_analysis,
    recoloring_path,
    search_frozen,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "ProperColoring",
    "RecoloringStep",
    "ReconfigReport",
    "build_graph",
    "chromatic_number",
    "clique_number",
    "enumerate_colorings",
    "expand",
    "false_twins",
    "find_induced",
    "from_graph6",
    "identify",
    "is_frozen",
    "is_homogeneous",
    "is_k_colorable",
    "is_pl_free",
    "reconfig_analysis",
    "recoloring_path",
    "search_frozen",
    "to_graph6",
]
