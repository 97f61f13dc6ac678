"""Detector selection.

``auto`` tries the specialised detectors from most to least specific:
three-vertex, positive outerplanar forest, positive P4, geometric family.
It then falls back to the merge-tree DP and, if that is too wide for the
caps, to the clique reduction.
"""

from __future__ import annotations

from typing import Optional

from .clique import detect_via_clique
from .forest import ForestPreconditionError, detect_forest, is_positive_outerplanar_forest
from .geometry import detect_geometry, geometry_letters_of
from .graph import OrderedGraph
from .merge import build_bounded_tree, run_dp
from .oracle import OracleCapError, brute_detect
from .p4 import detect_positive_p4, p4_variant_of
from .pattern import Pattern, p4_pattern
from .report import DetectionReport, EngineError
from .three import detect_three

__all__ = ["ENGINES", "auto_engine", "detect"]

ENGINES = ("auto", "oracle", "three", "clique", "merge", "forest", "p4", "geometry")


def auto_engine(P: Pattern) -> str:
    """The engine ``auto`` would try first for ``P``."""
    if P.k <= 2:
        return "trivial"
    if P.k == 3:
        return "three"
    if is_positive_outerplanar_forest(P):
        return "forest"
    if p4_variant_of(P) is not None:
        return "p4"
    if geometry_letters_of(P) is not None:
        return "geometry"
    return "merge"


def _trivial(G: OrderedGraph, P: Pattern) -> DetectionReport:
    # k <= 2 needs at most one pass over the lists
    if P.k == 0:
        return DetectionReport(True, (), engine="trivial")
    if P.k == 1:
        return DetectionReport(G.n >= 1, (1,) if G.n >= 1 else None, engine="trivial")
    kind = P.kind(1, 2)
    if kind == "U":
        return DetectionReport(G.n >= 2, (1, 2) if G.n >= 2 else None, engine="trivial")
    for u in range(1, G.n + 1):
        s = G.succ[u]
        if kind == "M" and s:
            return DetectionReport(True, (u, s[0]), engine="trivial")
        if kind == "F" and len(s) < G.n - u:
            # first gap in the sorted list s over u+1..n
            v = u + 1
            for x in s:
                if x != v:
                    break
                v += 1
            return DetectionReport(True, (u, v), engine="trivial")
    return DetectionReport(False, engine="trivial")


def _merge(G: OrderedGraph, P: Pattern, **caps) -> DetectionReport:
    T = build_bounded_tree(P)
    return run_dp(G, T, target=P, **caps)


def detect(
    G: OrderedGraph,
    P: Pattern,
    engine: str = "auto",
    *,
    p4_variant: Optional[int] = None,
    mirrored: bool = False,
    counter=None,
) -> DetectionReport:
    """Run ``engine`` on ``(G, P)``.

    Raises :class:`EngineError` when a named engine does not apply to
    ``P`` or exceeds its limits.  ``auto`` only raises when every fallback
    fails.
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; use one of {', '.join(ENGINES)}")
    if p4_variant is not None:
        want = p4_pattern(p4_variant, mirrored)
        if want != P:
            raise EngineError(f"pattern is not p4-{p4_variant}{'-mirrored' if mirrored else ''}")
    if engine == "auto":
        return _auto(G, P, counter)
    if engine == "oracle":
        try:
            return brute_detect(G, P)
        except OracleCapError as exc:
            raise EngineError(str(exc)) from None
    if engine == "three":
        if P.k != 3:
            raise EngineError(f"the three-vertex engine needs k = 3, got k = {P.k}")
        return detect_three(G, P, counter)
    if engine == "clique":
        return detect_via_clique(G, P)
    if engine == "merge":
        return _merge(G, P)
    if engine == "forest":
        try:
            return detect_forest(G, P, counter=counter)
        except ForestPreconditionError as exc:
            raise EngineError(str(exc)) from None
    if engine == "p4":
        vm = p4_variant_of(P)
        if vm is None:
            raise EngineError("pattern is not a positive P4 ordering")
        return detect_positive_p4(G, vm[0], vm[1], counter)
    letters = geometry_letters_of(P)
    if letters is None:
        raise EngineError("pattern has no dedicated geometric detector")
    return detect_geometry(G, letters, counter)


def _auto(G: OrderedGraph, P: Pattern, counter) -> DetectionReport:
    first = auto_engine(P)
    if first == "trivial":
        return _trivial(G, P)
    if P.k > G.n:
        r = DetectionReport(False, engine=first)
        r.notes.append(f"pattern has {P.k} vertices, graph has {G.n}")
        return r
    if first != "merge":
        return detect(G, P, first, counter=counter)
    try:
        return _merge(G, P)
    except EngineError as exc:
        r = detect_via_clique(G, P)
        r.notes.append(f"merge engine declined ({exc}); used the clique reduction")
        return r
