"""Linear-time detection of positive outerplanar forest patterns.

For a range ``[a, b]`` of pattern vertices let ``P[a, b]`` be the
sub-pattern induced on it.  Two boundary arrays are computed per range:

* ``m⁺(u)``: the smallest position of ``b`` over realizations of ``P[a, b]``
  that put ``a`` at ``u`` (``+∞`` if none);
* ``m⁻(v)``: the largest position of ``a`` over realizations that put ``b``
  at ``v`` (``-∞`` if none).

A single vertex gives the identity.  An isolated first vertex turns
``m⁺`` into the strict suffix minimum ``M⁺`` of the rest.  Otherwise the
left-outermost edge ``(a, j)`` splits the range into a left part
``[a, r-1]``, a right part ``[r, j]`` (``r`` is the leftmost vertex joined
to ``j`` inside the edge, or ``j`` itself) and an outer part ``[j, b]``:

    m⁺(u) = min { m⁺_outer(v) : uv ∈ E, u < v, m⁺_left(u) < m⁻_right(v) }

``m⁻`` is symmetric, using the right-outermost edge.  Every range costs one
pass over the adjacency lists, so a fixed pattern is detected in O(n + m)
(the constant grows with the number of ranges, at most quadratic in k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .graph import OrderedGraph, ScanCounter
from .pattern import Pattern, classify
from .report import DetectionReport

__all__ = [
    "ForestPreconditionError",
    "NestingAnalysis",
    "BoundaryArrays",
    "BoundaryEngine",
    "analyze_nesting",
    "compute_boundaries",
    "detect_forest",
    "is_positive_outerplanar_forest",
]


class ForestPreconditionError(ValueError):
    pass


@lru_cache(maxsize=8192)
def _check(P: Pattern) -> tuple:
    """Validate the preconditions; returns the whole-pattern key."""
    c = classify(P)
    problems = []
    if not c.positive:
        problems.append("has forbidden pairs")
    if not c.outerplanar:
        problems.append("has crossing edges")
    if not c.forest:
        problems.append("has a cycle")
    if problems:
        raise ForestPreconditionError("pattern is not a positive outerplanar forest: " + ", ".join(problems))
    return _key(P.mandatory, 1, P.k)


def is_positive_outerplanar_forest(P: Pattern) -> bool:
    c = classify(P)
    return c.positive and c.outerplanar and c.forest


# --- nesting structure --------------------------------------------------------

@dataclass(frozen=True)
class NestingAnalysis:
    """Relative placement of the edges of a positive outerplanar forest.

    ``relation[(e, f)]`` is ``'nested'`` or ``'side-by-side'`` for every
    ordered pair of distinct edges.  ``lome_classes`` and ``rome_classes``
    map each edge nested inside the left-outermost (right-outermost) edge
    to ``'left'``, ``'right'`` or ``'centered'``.
    """

    lome: Optional[tuple]
    rome: Optional[tuple]
    relation: dict
    lome_classes: dict
    rome_classes: dict


def _components(edges, lo: int, hi: int, skip: tuple) -> dict:
    parent = {v: v for v in range(lo, hi + 1)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        if e != skip and lo <= e[0] and e[1] <= hi:
            parent[find(e[0])] = find(e[1])
    return {v: find(v) for v in parent}


def nesting_classes(P: Pattern, ref: tuple) -> dict:
    """Class of each edge nested inside ``ref``, by connectivity to its endpoints."""
    i, j = ref
    comp = _components(P.mandatory, i, j, ref)
    out = {}
    for e in P.mandatory:
        if e == ref or not (i <= e[0] and e[1] <= j):
            continue
        if comp[e[0]] == comp[i]:
            out[e] = "left"
        elif comp[e[0]] == comp[j]:
            out[e] = "right"
        else:
            out[e] = "centered"
    return out


def analyze_nesting(P: Pattern) -> NestingAnalysis:
    """Nesting relations, outermost edges and nested-edge classes.

    Raises :class:`ForestPreconditionError` unless ``P`` is a positive
    outerplanar forest.
    """
    _check(P)
    edges = P.mandatory
    relation = {}
    for e in edges:
        for f in edges:
            if e == f:
                continue
            (i, j), (x, y) = sorted([e, f])
            relation[(e, f)] = "nested" if i <= x < y <= j else "side-by-side"
    if not edges:
        return NestingAnalysis(None, None, relation, {}, {})
    lome = min(edges, key=lambda e: (e[0], -e[1]))
    rome = max(edges, key=lambda e: (e[1], -e[0]))
    return NestingAnalysis(lome, rome, relation, nesting_classes(P, lome), nesting_classes(P, rome))


# --- compiled recursion plans ---------------------------------------------------
#
# A sub-pattern is keyed by (size, edges) after shifting its first vertex to
# 1, so equal sub-patterns share work even across different patterns.

def _key(edges, a: int, b: int) -> tuple:
    return (b - a + 1, tuple(sorted((x - a + 1, y - a + 1) for x, y in edges if a <= x and y <= b)))


@lru_cache(maxsize=None)
def _plan_plus(key: tuple) -> tuple:
    size, edges = key
    if size == 1:
        return ("single",)
    left_nb = [y for x, y in edges if x == 1]
    if not left_nb:
        return ("isolated", _key(edges, 2, size))
    j = max(left_nb)
    comp = _components(edges, 1, j, (1, j))
    r = min(v for v in range(2, j + 1) if comp[v] == comp[j])
    return ("edge", _key(edges, 1, r - 1), _key(edges, r, j), _key(edges, j, size))


@lru_cache(maxsize=None)
def _plan_minus(key: tuple) -> tuple:
    size, edges = key
    if size == 1:
        return ("single",)
    right_nb = [x for x, y in edges if y == size]
    if not right_nb:
        return ("isolated", _key(edges, 1, size - 1))
    i = min(right_nb)
    comp = _components(edges, i, size, (i, size))
    l = max(v for v in range(i, size) if comp[v] == comp[i])
    # offsets of the parts inside the range, needed to rebuild witnesses
    return ("edge", _key(edges, i, l), _key(edges, l + 1, size), _key(edges, 1, i), i, l)


class BoundaryEngine:
    """Boundary arrays on one graph, memoized per sub-pattern.

    Arrays are lists indexed by position ``0..n+1``; ``n + 1`` encodes
    ``+∞`` and ``0`` encodes ``-∞``.
    """

    def __init__(self, G: OrderedGraph, counter: Optional[ScanCounter] = None):
        self.G = G
        self.n = G.n
        self.inf = G.n + 1
        self.counter = counter
        self._plus: dict = {}
        self._minus: dict = {}
        self._identity = list(range(G.n + 2))
        self._identity[0] = 0

    def _tick(self, k: int) -> None:
        if self.counter is not None:
            self.counter.add(k)

    def plus(self, key: tuple) -> list:
        res = self._plus.get(key)
        if res is None:
            res = self._plus[key] = self._compute_plus(key)
        return res

    def minus(self, key: tuple) -> list:
        res = self._minus.get(key)
        if res is None:
            res = self._minus[key] = self._compute_minus(key)
        return res

    def suffix_min(self, arr: list) -> list:
        """``M⁺(u) = min over u' > u of arr[u']``."""
        n, inf = self.n, self.inf
        out = [inf] * (n + 2)
        best = inf
        for u in range(n, 0, -1):
            out[u] = best
            if arr[u] < best:
                best = arr[u]
        out[0] = best
        self._tick(n)
        return out

    def prefix_max(self, arr: list) -> list:
        """``M⁻(v) = max over v' < v of arr[v']``."""
        n = self.n
        out = [0] * (n + 2)
        best = 0
        for v in range(1, n + 1):
            out[v] = best
            if arr[v] > best:
                best = arr[v]
        out[n + 1] = best
        self._tick(n)
        return out

    def _compute_plus(self, key: tuple) -> list:
        plan = _plan_plus(key)
        n, inf = self.n, self.inf
        if plan[0] == "single":
            return self._identity
        if plan[0] == "isolated":
            return self.suffix_min(self.plus(plan[1]))
        _, kl, kr, ko = plan
        fl, gr, fo = self.plus(kl), self.minus(kr), self.plus(ko)
        succ = self.G.succ
        out = [inf] * (n + 2)
        scanned = 0
        for u in range(1, n + 1):
            lu = fl[u]
            if lu == inf:
                continue
            best = inf
            su = succ[u]
            scanned += len(su)
            for v in su:
                if lu < gr[v]:
                    x = fo[v]
                    if x < best:
                        best = x
            out[u] = best
        self._tick(n + scanned)
        return out

    def _compute_minus(self, key: tuple) -> list:
        plan = _plan_minus(key)
        n = self.n
        if plan[0] == "single":
            return self._identity
        if plan[0] == "isolated":
            return self.prefix_max(self.minus(plan[1]))
        _, kl, kr, ko, _, _ = plan
        fl, gr, go = self.plus(kl), self.minus(kr), self.minus(ko)
        pred = self.G.pred
        out = [0] * (n + 2)
        scanned = 0
        for v in range(1, n + 1):
            rv = gr[v]
            if rv == 0:
                continue
            best = 0
            pv = pred[v]
            scanned += len(pv)
            for u in pv:
                if fl[u] < rv:
                    x = go[u]
                    if x > best:
                        best = x
            out[v] = best
        self._tick(n + scanned)
        return out

    # witness reconstruction: positions for a realization attaining the arrays

    def realize_plus(self, key: tuple, u: int, offset: int, out: dict) -> None:
        """Place ``P[key]`` with its first vertex at ``u`` and last at ``plus(key)[u]``."""
        plan = _plan_plus(key)
        out[offset + 1] = u
        if plan[0] == "single":
            return
        if plan[0] == "isolated":
            child = self.plus(plan[1])
            target = self.suffix_min(child)[u]
            u2 = next(x for x in range(u + 1, self.n + 1) if child[x] == target)
            self.realize_plus(plan[1], u2, offset + 1, out)
            return
        _, kl, kr, ko = plan
        fl, gr, fo = self.plus(kl), self.minus(kr), self.plus(ko)
        target = self.plus(key)[u]
        v = next(v for v in self.G.succ[u] if fl[u] < gr[v] and fo[v] == target)
        r = kl[0] + 1  # P_R starts right after P_L
        j = r + kr[0] - 1
        self.realize_plus(kl, u, offset, out)
        self.realize_minus(kr, v, offset + r - 1, out)
        self.realize_plus(ko, v, offset + j - 1, out)

    def realize_minus(self, key: tuple, v: int, offset: int, out: dict) -> None:
        """Place ``P[key]`` with its last vertex at ``v`` and first at ``minus(key)[v]``."""
        plan = _plan_minus(key)
        size = key[0]
        out[offset + size] = v
        if plan[0] == "single":
            return
        if plan[0] == "isolated":
            child = self.minus(plan[1])
            target = self.prefix_max(child)[v]
            v2 = next(x for x in range(v - 1, 0, -1) if child[x] == target)
            self.realize_minus(plan[1], v2, offset, out)
            return
        _, kl, kr, ko, i, l = plan
        fl, gr, go = self.plus(kl), self.minus(kr), self.minus(ko)
        target = self.minus(key)[v]
        u = next(u for u in self.G.pred[v] if fl[u] < gr[v] and go[u] == target)
        self.realize_minus(ko, u, offset, out)
        self.realize_plus(kl, u, offset + i - 1, out)
        self.realize_minus(kr, v, offset + l, out)


@dataclass(frozen=True)
class BoundaryArrays:
    """Boundary arrays of a pattern on a graph, indexed ``1..n`` (index 0 unused).

    Forward: ``m`` is m⁺ and ``M`` is the strict suffix minimum M⁺, with
    ``math.inf`` for no realization.  Backward: ``m`` is m⁻ and ``M`` the
    strict prefix maximum M⁻, with ``-math.inf``.
    """

    direction: str
    m: tuple
    M: tuple


def compute_boundaries(P: Pattern, G: OrderedGraph, direction: str = "forward") -> BoundaryArrays:
    _check(P)
    eng = BoundaryEngine(G)
    key = _key(P.mandatory, 1, P.k)
    n = G.n
    if direction == "forward":
        raw = eng.plus(key)
        big = eng.suffix_min(raw)
        conv = lambda x: math.inf if x > n else x  # noqa: E731
    elif direction == "backward":
        raw = eng.minus(key)
        big = eng.prefix_max(raw)
        conv = lambda x: -math.inf if x < 1 else x  # noqa: E731
    else:
        raise ValueError("direction must be 'forward' or 'backward'")
    m = (None,) + tuple(conv(raw[u]) for u in range(1, n + 1))
    M = (None,) + tuple(conv(big[u]) for u in range(1, n + 1))
    return BoundaryArrays(direction, m, M)


def detect_forest(
    G: OrderedGraph,
    P: Pattern,
    engine: Optional[BoundaryEngine] = None,
    counter: Optional[ScanCounter] = None,
) -> DetectionReport:
    """Detect a positive outerplanar forest pattern.

    Found iff some ``m⁺(u)`` of the whole pattern is finite; the witness
    starts at the smallest such ``u``.  Passing a shared ``engine`` reuses
    boundary arrays of common sub-patterns across calls on the same graph.
    """
    key = _check(P)
    if engine is None:
        engine = BoundaryEngine(G, counter)
    elif engine.G is not G:
        raise ValueError("engine belongs to a different graph")
    arr = engine.plus(key)
    for u in range(1, G.n + 1):
        if arr[u] <= G.n:
            out: dict = {}
            engine.realize_plus(key, u, 0, out)
            return DetectionReport(True, tuple(out[x] for x in range(1, P.k + 1)), engine="forest")
    return DetectionReport(False, engine="forest")
