"""Brute-force reference detection.

Deliberately naive: increasing k-tuples are enumerated in lexicographic
order, abandoning a prefix as soon as one of its decided pairs is violated.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from .graph import OrderedGraph
from .pattern import Pattern
from .report import DetectionReport

__all__ = [
    "DEFAULT_CAP",
    "OracleCapError",
    "brute_detect",
    "brute_detect_family",
    "iter_realizations",
    "pattern_masks",
    "induced_masks",
    "mask_verdict",
]

DEFAULT_CAP = 8


class OracleCapError(ValueError):
    pass


def _constraints(P: Pattern) -> list:
    # For pattern vertex t (0-based), the decided pairs back to earlier vertices.
    cons = [[] for _ in range(P.k)]
    for a, b in P.mandatory:
        cons[b - 1].append((a - 1, True))
    for a, b in P.forbidden:
        cons[b - 1].append((a - 1, False))
    return cons


def iter_realizations(G: OrderedGraph, P: Pattern, *, cap: int = DEFAULT_CAP, override: bool = False) -> Iterator[tuple]:
    """Yield every realization of ``P`` in ``G`` in lexicographic order."""
    k = P.k
    if k > cap and not override:
        raise OracleCapError(f"pattern has {k} vertices, oracle cap is {cap}")
    n = G.n
    if k > n:
        return
    adj = G.adjacency_bits
    cons = _constraints(P)
    chosen = [0] * k

    def extend(t: int, lo: int):
        # Leave room for the remaining k - t - 1 vertices.
        for x in range(lo, n - (k - t - 1) + 1):
            row = adj[x]
            ok = True
            for a, must in cons[t]:
                if bool(row >> chosen[a] & 1) != must:
                    ok = False
                    break
            if not ok:
                continue
            chosen[t] = x
            if t + 1 == k:
                yield tuple(chosen)
            else:
                yield from extend(t + 1, x + 1)

    yield from extend(0, 1)


def brute_detect(G: OrderedGraph, P: Pattern, *, cap: int = DEFAULT_CAP, override: bool = False) -> DetectionReport:
    """Lexicographically first realization of ``P`` in ``G``, if any.

    Raises :class:`OracleCapError` when ``P.k`` exceeds ``cap`` unless
    ``override`` is set.

    Examples
    --------
    >>> from orderedpatterns.graph import OrderedGraph
    >>> from orderedpatterns.pattern import catalog_pattern
    >>> brute_detect(OrderedGraph(3, [(1, 3)]), catalog_pattern("interval")).witness
    (1, 2, 3)
    """
    for w in iter_realizations(G, P, cap=cap, override=override):
        return DetectionReport(True, w, engine="oracle")
    return DetectionReport(False, engine="oracle")


def brute_detect_family(G: OrderedGraph, patterns: Sequence[Pattern], **kw) -> DetectionReport:
    """Found iff some member is found; ``detail`` holds the index of the first such member."""
    for idx, P in enumerate(patterns):
        r = brute_detect(G, P, **kw)
        if r.found:
            r.detail = f"member {idx}"
            return r
    return DetectionReport(False, engine="oracle")


# --- batch form used by exhaustive sweeps ---------------------------------
#
# For a fixed k, each increasing k-tuple of positions induces a bitmask over
# the k(k-1)/2 pattern pairs.  A pattern is realized iff some induced mask
# contains all mandatory bits and no forbidden bit.  This is the same
# enumeration as brute_detect, shared across many patterns on one graph.

@lru_cache(maxsize=None)
def _pair_bits(k: int) -> dict:
    return {p: 1 << i for i, p in enumerate(itertools.combinations(range(1, k + 1), 2))}


@lru_cache(maxsize=8192)
def pattern_masks(P: Pattern) -> tuple:
    bits = _pair_bits(P.k)
    mm = sum(bits[p] for p in P.mandatory)
    fm = sum(bits[p] for p in P.forbidden)
    return mm, fm


@lru_cache(maxsize=None)
def _tuple_plan(n: int, k: int) -> tuple:
    pairs = list(itertools.combinations(range(k), 2))
    return tuple(
        tuple((X[a], X[b], 1 << i) for i, (a, b) in enumerate(pairs))
        for X in itertools.combinations(range(1, n + 1), k)
    )


def induced_masks(G: OrderedGraph, k: int) -> frozenset:
    """Set of induced pair masks over all increasing k-tuples of ``G``."""
    es = G.edge_set
    out = set()
    for plan in _tuple_plan(G.n, k):
        mask = 0
        for u, v, bit in plan:
            if (u, v) in es:
                mask |= bit
        out.add(mask)
    return frozenset(out)


def mask_verdict(masks: frozenset, P: Pattern) -> bool:
    mm, fm = pattern_masks(P)
    for mask in masks:
        if mask & mm == mm and not mask & fm:
            return True
    return False
