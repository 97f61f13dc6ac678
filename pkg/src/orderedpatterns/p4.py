"""Linear-time detection of positive four-vertex patterns whose edges form a path.

Each of the eight orderings (up to mirroring) is detected by scanning the
graph edges ``e = (i, j)`` as candidates for the middle edge of the path and
testing a constant-time condition φ(e) on extremal neighbors.  φ(e) is
false only if no realization uses ``e`` as its middle edge, and when it is
true the extremal neighbors it mentions form a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import OrderedGraph, ScanCounter, mirror_graph, mirror_positions
from .pattern import P4_VARIANTS, Pattern, mirror_pattern, p4_pattern
from .report import DetectionReport

__all__ = ["SCAN_CONSTANT", "EdgeTables", "build_edge_tables", "detect_positive_p4", "p4_variant_of", "PHI_TEXT"]

# The scan visits each edge once, plus once more for the rank table of variant 8.
SCAN_CONSTANT = 2

# Human-readable conditions, for reports and documentation.
PHI_TEXT = {
    1: "N⁻(i) ≠ ∅ and N⁺(j) ≠ ∅",
    2: "min N⁺(j) < max N⁺(i)",
    3: "min N⁺(i) < j and N⁺(j) ≠ ∅",
    4: "min N⁻(j) < i and j < max N⁺(i)",
    5: "min N⁺(i) < max N⁻(j)",
    6: "i < max N⁻(j) and j < max N⁺(i)",
    7: "e⁺ exists and e⁺ < max N⁺(j)",
    8: "⁺e and e⁻ exist and ⁺e < e⁻",
}


@dataclass
class EdgeTables:
    """Neighbor extremes per vertex and per edge.

    For an edge ``e = (i, j)``, ``i < j``: ``e_plus[e]`` is the next neighbor
    of ``i`` above ``j``, ``e_minus[e]`` the previous neighbor of ``i`` below
    ``j``, ``plus_e[e]`` the next neighbor of ``j`` above ``i`` and
    ``minus_e[e]`` the previous neighbor of ``j`` below ``i``.  Missing
    values are ``None``.
    """

    e_plus: dict
    e_minus: dict
    plus_e: dict
    minus_e: dict
    min_pred: list
    max_pred: list
    min_succ: list
    max_succ: list


def build_edge_tables(G: OrderedGraph) -> EdgeTables:
    """One pass over every adjacency list; O(n + m)."""
    n = G.n
    e_plus, e_minus, plus_e, minus_e = {}, {}, {}, {}
    min_pred = [None] * (n + 1)
    max_pred = [None] * (n + 1)
    min_succ = [None] * (n + 1)
    max_succ = [None] * (n + 1)
    for i in range(1, n + 1):
        s = G.succ[i]
        if s:
            min_succ[i], max_succ[i] = s[0], s[-1]
        for t, j in enumerate(s):
            e_plus[(i, j)] = s[t + 1] if t + 1 < len(s) else None
            e_minus[(i, j)] = s[t - 1] if t > 0 else None
        p = G.pred[i]
        if p:
            min_pred[i], max_pred[i] = p[0], p[-1]
        for t, x in enumerate(p):
            plus_e[(x, i)] = p[t + 1] if t + 1 < len(p) else None
            minus_e[(x, i)] = p[t - 1] if t > 0 else None
    return EdgeTables(e_plus, e_minus, plus_e, minus_e, min_pred, max_pred, min_succ, max_succ)


def _scan(G: OrderedGraph, variant: int, counter: Optional[ScanCounter]) -> Optional[tuple]:
    n, pred, succ = G.n, G.pred, G.succ
    scanned = 0
    try:
        if variant == 8:
            # ⁺e needs the rank of i inside N⁻(j); one pass over all lists.
            rank = {}
            for j in range(1, n + 1):
                for t, x in enumerate(pred[j]):
                    rank[(x, j)] = t
                scanned += len(pred[j])
        for i in range(1, n + 1):
            s = succ[i]
            pi = pred[i]
            for t, j in enumerate(s):
                scanned += 1
                pj, sj = pred[j], succ[j]
                if variant == 1:
                    if pi and sj:
                        return (pi[0], i, j, sj[0])
                elif variant == 2:
                    if sj and sj[0] < s[-1]:
                        return (i, j, sj[0], s[-1])
                elif variant == 3:
                    if s[0] < j and sj:
                        return (i, s[0], j, sj[0])
                elif variant == 4:
                    if pj[0] < i and j < s[-1]:
                        return (pj[0], i, j, s[-1])
                elif variant == 5:
                    if s[0] < pj[-1]:
                        return (i, s[0], pj[-1], j)
                elif variant == 6:
                    if i < pj[-1] and j < s[-1]:
                        return (i, pj[-1], j, s[-1])
                elif variant == 7:
                    if t + 1 < len(s) and sj and s[t + 1] < sj[-1]:
                        return (i, j, s[t + 1], sj[-1])
                else:
                    r = rank[(i, j)]
                    if r + 1 < len(pj) and t > 0 and pj[r + 1] < s[t - 1]:
                        return (i, pj[r + 1], s[t - 1], j)
        return None
    finally:
        if counter is not None:
            counter.add(scanned)


def detect_positive_p4(
    G: OrderedGraph, variant: int, mirrored: bool = False, counter: Optional[ScanCounter] = None
) -> DetectionReport:
    """Detect the positive P4 ordering ``variant`` (1..8), optionally mirrored.

    A mirrored variant is detected as the plain variant on the mirrored
    graph, and the witness is mapped back.

    >>> detect_positive_p4(OrderedGraph(4, [(1, 2), (1, 3), (2, 4)]), 7).witness
    (1, 2, 3, 4)
    """
    if variant not in P4_VARIANTS:
        raise ValueError(f"P4 variant must be in 1..8, got {variant}")
    H = mirror_graph(G) if mirrored else G
    w = _scan(H, variant, counter)
    detail = f"p4-{variant}" + ("-mirrored" if mirrored else "") + f": {PHI_TEXT[variant]}"
    if w is None:
        return DetectionReport(False, engine="p4", detail=detail)
    if mirrored:
        w = mirror_positions(G.n, w)
    return DetectionReport(True, w, engine="p4", detail=detail)


def p4_variant_of(P: Pattern) -> Optional[tuple]:
    """``(variant, mirrored)`` when ``P`` is a positive P4 ordering, else ``None``."""
    if P.k != 4 or P.forbidden or len(P.mandatory) != 3:
        return None
    for v in P4_VARIANTS:
        if p4_pattern(v) == P:
            return v, False
    for v in P4_VARIANTS:
        if mirror_pattern(p4_pattern(v)) == P:
            return v, True
    return None
