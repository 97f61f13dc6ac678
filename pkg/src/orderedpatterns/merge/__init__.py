"""Merge trees and the anchor-table dynamic program."""

from .build import (
    MergeWidthReport,
    NotOuterplanarError,
    build_bounded_tree,
    build_outerplanar_tree,
    dist_out,
    exact_merge_width,
    merge_width_report,
)
from .dp import DEFAULT_WIDTH_CAP, AnchorTable, compute_tables, run_dp
from .tree import (
    AnchoredPattern,
    Leaf,
    Merge,
    MergeTree,
    Validation,
    VertexCreate,
    dump_tree,
    parse_tree,
    tree_width,
    validate_merge_tree,
)

__all__ = [
    "AnchoredPattern",
    "AnchorTable",
    "Leaf",
    "Merge",
    "MergeTree",
    "MergeWidthReport",
    "NotOuterplanarError",
    "Validation",
    "VertexCreate",
    "DEFAULT_WIDTH_CAP",
    "build_bounded_tree",
    "build_outerplanar_tree",
    "compute_tables",
    "dist_out",
    "dump_tree",
    "exact_merge_width",
    "merge_width_report",
    "parse_tree",
    "run_dp",
    "tree_width",
    "validate_merge_tree",
]
