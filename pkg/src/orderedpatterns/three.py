"""Detection of every three-vertex pattern.

Fourteen of the eighteen canonical patterns are detected in O(n + m): twelve
by a per-vertex neighborhood condition and two (Chordal, co-Chordal) by a
subset test between predecessor lists.  The remaining four (Triangle,
co-Triangle, Comparability, co-Comparability) fall back to slower exact
methods.  Non-canonical patterns are handled on the mirrored graph.
"""

from __future__ import annotations

from typing import Optional

from .clique import detect_via_clique
from .graph import OrderedGraph, ScanCounter, complement_graph, mirror_graph, mirror_positions
from .oracle import brute_detect
from .pattern import CATALOG, Pattern, canonical_representative, canonicalize3, catalog_pattern, complement_pattern
from .report import DetectionReport

__all__ = [
    "SCAN_CONSTANT",
    "EASY_IDS",
    "LINEAR_IDS",
    "HARD_IDS",
    "CLASS_FAMILIES",
    "detect_three",
    "condition_check",
    "detect_chordal",
    "detect_cochordal",
    "class_family",
    "detect_class_family",
]

NO_GRAPH, SPLIT, STAR, CO_STAR = 26, 13, 24, 25
BIPARTITE, CO_BIPARTITE, FOREST, CO_FOREST = 12, 15, 8, 11
LINEAR_FOREST, CO_LINEAR_FOREST, INTERVAL, CO_INTERVAL = 22, 23, 18, 17
CHORDAL, CO_CHORDAL = 4, 3
TRIANGLE, CO_TRIANGLE, COMPARABILITY, CO_COMPARABILITY = 0, 7, 2, 5

EASY_IDS = frozenset({
    NO_GRAPH, SPLIT, STAR, CO_STAR, BIPARTITE, CO_BIPARTITE,
    FOREST, CO_FOREST, LINEAR_FOREST, CO_LINEAR_FOREST, INTERVAL, CO_INTERVAL,
})
LINEAR_IDS = EASY_IDS | {CHORDAL, CO_CHORDAL}
HARD_IDS = frozenset({TRIANGLE, CO_TRIANGLE, COMPARABILITY, CO_COMPARABILITY})

# Linear detectors here report at most SCAN_CONSTANT * (n + m) list visits.
SCAN_CONSTANT = 3


def _first_gap(lst: list, start: int, stop: int) -> Optional[int]:
    """Smallest value in ``[start, stop]`` missing from the increasing list ``lst``.

    ``lst`` must only contain values from that range.
    """
    x = start
    for y in lst:
        if y != x:
            break
        x += 1
    return x if x <= stop else None


def _found(w, engine="three", detail=""):
    return DetectionReport(True, tuple(w), engine=engine, detail=detail)


def _absent(engine="three", detail=""):
    return DetectionReport(False, engine=engine, detail=detail)


def condition_check(G: OrderedGraph, catalog_id: int, counter: Optional[ScanCounter] = None) -> DetectionReport:
    """Detect one of the twelve easy canonical patterns by its neighborhood condition.

    Each pattern is absent iff a per-vertex condition on the sizes or
    extremes of N⁻/N⁺ holds everywhere.  The main loop reads only list
    lengths and ends; the failing vertex's lists are then scanned once to
    build a witness.
    """
    if catalog_id not in EASY_IDS:
        raise ValueError(f"catalog id {catalog_id} is not one of the twelve condition-checked patterns")
    n, pred, succ = G.n, G.pred, G.succ
    name = CATALOG[catalog_id].name
    tick = counter.add if counter is not None else (lambda k=1: None)

    def hit(w):
        return _found(w, detail=name)

    if catalog_id == NO_GRAPH:
        return hit((1, 2, 3)) if n >= 3 else _absent(detail=name)

    if catalog_id == STAR:
        # absent iff every vertex with a left neighbor is the last one
        for j in range(2, n):
            if pred[j]:
                return hit((pred[j][0], j, j + 1))
    elif catalog_id == CO_STAR:
        for j in range(2, n):
            if len(pred[j]) < j - 1:
                tick(len(pred[j]))
                return hit((_first_gap(pred[j], 1, j - 1), j, j + 1))
    elif catalog_id == SPLIT:
        for j in range(2, n):
            if pred[j] and len(succ[j]) < n - j:
                tick(len(succ[j]))
                return hit((pred[j][0], j, _first_gap(succ[j], j + 1, n)))
    elif catalog_id == BIPARTITE:
        for j in range(2, n):
            if pred[j] and succ[j]:
                return hit((pred[j][0], j, succ[j][0]))
    elif catalog_id == CO_BIPARTITE:
        for j in range(2, n):
            if len(pred[j]) < j - 1 and len(succ[j]) < n - j:
                tick(len(pred[j]) + len(succ[j]))
                return hit((_first_gap(pred[j], 1, j - 1), j, _first_gap(succ[j], j + 1, n)))
    elif catalog_id == FOREST:
        for k in range(3, n + 1):
            if len(pred[k]) >= 2:
                return hit((pred[k][0], pred[k][1], k))
    elif catalog_id == CO_FOREST:
        for k in range(3, n + 1):
            if k - 1 - len(pred[k]) >= 2:
                tick(len(pred[k]))
                a = _first_gap(pred[k], 1, k - 1)
                rest = [x for x in pred[k] if x > a]
                b = _first_gap(rest, a + 1, k - 1)
                return hit((a, b, k))
    elif catalog_id == LINEAR_FOREST:
        for i in range(1, n - 1):
            if succ[i] and succ[i][-1] >= i + 2:
                return hit((i, i + 1, succ[i][-1]))
    elif catalog_id == CO_LINEAR_FOREST:
        for i in range(1, n - 1):
            s = succ[i]
            far = len(s) - (1 if s and s[0] == i + 1 else 0)
            if far < n - i - 1:
                tick(len(s))
                rest = s[1:] if s and s[0] == i + 1 else s
                return hit((i, i + 1, _first_gap(rest, i + 2, n)))
    elif catalog_id == INTERVAL:
        for i in range(1, n - 1):
            s = succ[i]
            if s and s[-1] - i != len(s):
                tick(len(s))
                return hit((i, _first_gap(s, i + 1, s[-1]), s[-1]))
    elif catalog_id == CO_INTERVAL:
        for i in range(1, n - 1):
            s = succ[i]
            if s and s[0] != n - len(s) + 1:
                tick(len(s))
                j = s[0]
                return hit((i, j, _first_gap(s[1:], j + 1, n)))
    return _absent(detail=name)


def detect_chordal(G: OrderedGraph, counter: Optional[ScanCounter] = None) -> DetectionReport:
    """Find ``x < j < i`` with ``xi, ji`` edges and ``xj`` a non-edge.

    For each ``i`` only ``j = max N⁻(i)`` needs checking: the pattern is
    absent iff ``N⁻(i) \\ {j} ⊆ N⁻(j)`` for all ``i``.  The lists attached
    to a given ``j`` are those of the ``i`` in N⁺(j) whose largest
    predecessor is ``j``.  So each ``N⁻(j)`` is stamped at most once for all
    of them, and the total work is O(n + m).

    >>> detect_chordal(OrderedGraph(3, [(1, 3), (2, 3)])).witness
    (1, 2, 3)
    """
    n, pred, succ = G.n, G.pred, G.succ
    stamp = [0] * (n + 1)
    scans = 0
    for j in range(1, n + 1):
        stamped = False
        sj = succ[j]
        scans += len(sj)
        for i in sj:
            pi = pred[i]
            if len(pi) < 2 or pi[-1] != j:
                continue
            if not stamped:
                pj = pred[j]
                scans += len(pj)
                for x in pj:
                    stamp[x] = j
                stamped = True
            for t in range(len(pi) - 1):
                x = pi[t]
                if stamp[x] != j:
                    if counter is not None:
                        counter.add(scans + t + 1)
                    return _found((x, j, i), detail="Chordal")
            scans += len(pi)
    if counter is not None:
        counter.add(scans)
    return _absent(detail="Chordal")


def detect_cochordal(G: OrderedGraph, counter: Optional[ScanCounter] = None) -> DetectionReport:
    """Find ``z < j < i`` with ``zj`` an edge and ``zi, ji`` non-edges.

    Symmetric to :func:`detect_chordal` on the implicit complement: ``j`` is
    the largest non-neighbor of ``i`` below it, and the pattern is absent iff
    ``N⁻(j) ⊆ N⁻(i)`` for every such pair.  Inclusion is tested by counting
    the members of ``N⁻(i)`` below ``j`` that are adjacent to ``j``, so the
    work per ``i`` is O(|N⁻(i)|) and the complement is never built.
    """
    n, pred = G.n, G.pred
    es = G.edge_set
    scans = 0
    for i in range(3, n + 1):
        pi = pred[i]
        if len(pi) >= i - 1:
            continue
        # largest non-neighbor below i: walk down the tail of N⁻(i)
        j = i - 1
        t = len(pi) - 1
        while t >= 0 and pi[t] == j:
            j -= 1
            t -= 1
        scans += len(pi) - t
        pj = pred[j]
        if not pj:
            continue
        common = 0
        for x in pi:
            if x >= j:
                break
            if (x, j) in es:
                common += 1
        scans += len(pi)
        if common < len(pj):
            members = set(pi)
            for z in pj:
                if z not in members:
                    if counter is not None:
                        counter.add(scans + len(pj))
                    return _found((z, j, i), detail="co-Chordal")
    if counter is not None:
        counter.add(scans)
    return _absent(detail="co-Chordal")


def _detect_canonical(G: OrderedGraph, cid: int, counter) -> DetectionReport:
    if cid in EASY_IDS:
        return condition_check(G, cid, counter)
    if cid == CHORDAL:
        return detect_chordal(G, counter)
    if cid == CO_CHORDAL:
        return detect_cochordal(G, counter)
    P = CATALOG[cid].pattern
    name = CATALOG[cid].name
    if cid == TRIANGLE:
        r = detect_via_clique(G, P)
    elif cid == CO_TRIANGLE:
        r = detect_via_clique(complement_graph(G), catalog_pattern(TRIANGLE))
    else:
        r = brute_detect(G, P)
    return DetectionReport(r.found, r.witness, engine="three", detail=f"{name} (fallback: {r.engine})")


def detect_three(G: OrderedGraph, P: Pattern, counter: Optional[ScanCounter] = None) -> DetectionReport:
    """Detect any three-vertex pattern.

    Non-canonical patterns are detected as their mirror on the mirrored
    graph and the witness is mapped back.

    >>> from orderedpatterns.pattern import catalog_pattern
    >>> detect_three(OrderedGraph(3, [(1, 2), (2, 3)]), catalog_pattern("bipartite")).witness
    (1, 2, 3)
    """
    if P.k != 3:
        raise ValueError(f"three-vertex detection needs k = 3, got k = {P.k}")
    cid, mirrored = canonicalize3(P)
    if not mirrored:
        return _detect_canonical(G, cid, counter)
    r = _detect_canonical(mirror_graph(G), canonical_representative(cid), counter)
    if r.found:
        r.witness = mirror_positions(G.n, r.witness)
    r.detail = f"{CATALOG[cid].name} via mirror ({r.detail})"
    return r


# Graph classes characterized by avoiding a family of three-vertex patterns
# under some vertex ordering.  Names with a "co-" prefix resolve to the
# complemented family.
CLASS_FAMILIES = {
    "forest": ["Forest"],
    "linear forest": ["Linear Forest"],
    "star": ["Star"],
    "interval": ["Interval"],
    "split": ["Split"],
    "bipartite": ["Bipartite"],
    "chordal": ["Chordal"],
    "comparability": ["Comparability"],
    "triangle-free": ["Triangle"],
    "proper interval": ["Chordal", "mirror-Chordal"],
    "threshold": ["Chordal", "co-Chordal"],
    "1-split": ["Split", "mirror-Split"],
    "augmented clique": ["Chordal", "Split"],
    "2-star": ["co-Chordal", "Forest"],
    "bipartite chain": ["co-Chordal", "Bipartite"],
    "permutation": ["Comparability", "co-Comparability"],
    "bipartite permutation": ["Comparability", "co-Comparability", "Bipartite"],
    "complete bipartite": ["co-Chordal", "co-Comparability", "Bipartite"],
    "caterpillar": ["co-Comparability", "Forest"],
    "trivially perfect": ["Triangle", "Chordal"],
    "triangle-free co-chordal": ["Triangle", "co-Chordal"],
}


def class_family(name: str) -> list:
    """Three-vertex patterns whose avoidance characterizes the named class."""
    key = name.strip().lower()
    if key in CLASS_FAMILIES:
        return [catalog_pattern(x) for x in CLASS_FAMILIES[key]]
    if key.startswith("co-") and key[3:] in CLASS_FAMILIES:
        return [complement_pattern(P) for P in class_family(key[3:])]
    raise KeyError(f"no pattern family recorded for class {name!r}")


def detect_class_family(G: OrderedGraph, name: str) -> DetectionReport:
    """Found iff the ordering of ``G`` contains some member of the class family.

    A negative answer certifies that ``G`` belongs to the class.
    """
    for P in class_family(name):
        r = detect_three(G, P)
        if r.found:
            return r
    return _absent(detail=f"no {name} obstruction")
