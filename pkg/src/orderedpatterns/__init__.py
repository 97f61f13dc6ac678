"""Pattern detection in vertex-ordered graphs."""

from .graph import (
    OrderedGraph,
    complement_graph,
    is_realization,
    mirror_graph,
    parse_ordered_graph,
    render_ordered_graph,
)
from .oracle import brute_detect, brute_detect_family
from .pattern import (
    Pattern,
    canonicalize3,
    classify,
    complement_pattern,
    mirror_pattern,
    named_pattern,
    parse_pattern,
)
from .generate import random_graph
from .report import DetectionReport, EngineError
from .routing import ENGINES, detect

__all__ = [
    "OrderedGraph",
    "Pattern",
    "DetectionReport",
    "EngineError",
    "ENGINES",
    "detect",
    "random_graph",
    "parse_ordered_graph",
    "render_ordered_graph",
    "parse_pattern",
    "named_pattern",
    "mirror_graph",
    "complement_graph",
    "mirror_pattern",
    "complement_pattern",
    "canonicalize3",
    "classify",
    "is_realization",
    "brute_detect",
    "brute_detect_family",
]

__version__ = "0.1.0"
