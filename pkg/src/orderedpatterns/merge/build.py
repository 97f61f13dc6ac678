"""Merge-tree construction: outerplanar decomposition, crossing removal and exact search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from ..pattern import Pattern, classify, crossings
from .tree import Leaf, Merge, MergeTree, VertexCreate, dump_tree, parse_tree

__all__ = [
    "NotOuterplanarError",
    "build_outerplanar_tree",
    "build_bounded_tree",
    "dist_out",
    "exact_merge_width",
    "MergeWidthReport",
    "merge_width_report",
]


class NotOuterplanarError(ValueError):
    pass


def _decided(P: Pattern) -> dict:
    return {**{p: "M" for p in P.mandatory}, **{p: "F" for p in P.forbidden}}


def _build_range(lo: int, hi: int, edges: dict, forced: frozenset):
    """Tree for the sub-pattern on ``lo..hi`` with the given decided edges.

    Every node keeps its leftmost and rightmost vertex as anchors, plus the
    vertices of ``forced`` it contains.
    """

    def anchors(a, b):
        return {a, b} | {x for x in forced if a <= x <= b}

    if lo == hi:
        return VertexCreate(None, lo, anchors(lo, lo))
    incident = [b for (a, b) in edges if a == lo]
    if not incident:
        child = _build_range(lo + 1, hi, edges, forced)
        return VertexCreate(child, lo, anchors(lo, hi))
    if (lo, hi) in edges:
        kind = edges[(lo, hi)]
        rest = {p: c for p, c in edges.items() if p != (lo, hi)}
        leaf = Leaf(lo, hi, kind, {lo, hi})
        if not rest and hi == lo + 1:
            return leaf
        inner = _build_range(lo, hi, rest, forced)
        return Merge(inner, leaf, anchors(lo, hi))
    # cut vertex: the farthest neighbor of lo splits every other edge to one side
    t = max(incident)
    left = {p: c for p, c in edges.items() if p[1] <= t}
    right = {p: c for p, c in edges.items() if p[0] >= t}
    if len(left) + len(right) != len(edges):
        raise NotOuterplanarError(f"an edge crosses ({lo}, {t})")
    return Merge(_build_range(lo, t, left, forced), _build_range(t, hi, right, forced), anchors(lo, hi))


def build_outerplanar_tree(P: Pattern, forced=()) -> MergeTree:
    """Width-2 merge tree of an outerplanar pattern.

    Built recursively on vertex ranges ``[lo, hi]``: an isolated first
    vertex is created above the tree of ``[lo+1, hi]``; a covering edge
    ``(lo, hi)`` is merged onto the tree of the range without it; otherwise
    the range splits at ``t``, the largest neighbor of ``lo``.  Each node is
    anchored at the two ends of its range, plus any ``forced`` vertices,
    which raises the width by at most ``len(forced)``.

    Raises :class:`NotOuterplanarError` if two decided pairs cross.
    """
    edges = _decided(P)
    if crossings(edges):
        raise NotOuterplanarError("pattern has crossing decided pairs")
    return MergeTree(_build_range(1, P.k, edges, frozenset(forced)))


@lru_cache(maxsize=4096)
def _dist_out_cached(edges: tuple) -> tuple:
    for size in range(len(edges) + 1):
        for removed in itertools.combinations(edges, size):
            rest = [e for e in edges if e not in removed]
            if crossings(rest) == 0:
                return removed
    return edges


def dist_out(P: Pattern) -> tuple:
    """``(d, removed)``: fewest decided pairs whose removal leaves no crossing.

    Exhaustive over subsets in increasing size; ``removed`` is the first
    such subset in lexicographic order.
    """
    removed = _dist_out_cached(tuple(sorted(_decided(P))))
    return len(removed), removed


def _all_anchored_tree(vertices: tuple, edges: dict):
    """Every vertex anchored everywhere: each edge is widened to the full vertex set, then merged."""
    parts = []
    for (a, b), kind in sorted(edges.items()):
        node = Leaf(a, b, kind, {a, b})
        have = {a, b}
        for x in vertices:
            if x not in have:
                have.add(x)
                node = VertexCreate(node, x, set(have))
        parts.append(node)
    node = parts[0]
    for other in parts[1:]:
        node = Merge(node, other, set(vertices))
    return node


def build_bounded_tree(P: Pattern) -> MergeTree:
    """Merge tree of width at most ``2 * dist_out(P) + 2``.

    The fewest crossing pairs are set aside; the remaining outerplanar
    pattern is built with their endpoints anchored at every node, the
    removed pairs are built with all their endpoints anchored, and the two
    trees are merged at the root.
    """
    d, removed = dist_out(P)
    edges = _decided(P)
    if d == 0:
        return build_outerplanar_tree(P)
    ends = frozenset(x for e in removed for x in e)
    rest = {p: c for p, c in edges.items() if p not in removed}
    main = _build_range(1, P.k, rest, ends)
    side = _all_anchored_tree(tuple(sorted(ends)), {p: edges[p] for p in removed})
    return MergeTree(Merge(main, side, ()))


# --- exact merge-width by search -----------------------------------------------

def exact_merge_width(P: Pattern, max_k: int = 5, upper: Optional[int] = None) -> tuple:
    """``(width, tree)`` for a merge tree of minimum width.

    Iterative deepening over the width with a memoized search over
    sub-patterns ``(vertices, edges, anchors)``.  Anchor sets are taken
    minimal, which loses nothing because every operation may drop anchors.
    Exponential; limited to ``P.k <= max_k``.
    """
    if P.k > max_k:
        raise ValueError(f"exact merge-width search is limited to k <= {max_k}")
    edges = frozenset(_decided(P).items())
    verts = frozenset(range(1, P.k + 1))
    if upper is None:
        upper = build_bounded_tree(P).width
    for w in range(0, upper + 1):
        memo: dict = {}
        node = _search(verts, edges, frozenset(), w, memo)
        if node is not None:
            # memoized subtrees may be shared; a round trip gives each position its own node
            return w, parse_tree(dump_tree(MergeTree(node)))
    raise AssertionError("search failed to match the constructive bound")


def _search(V: frozenset, E: frozenset, A: frozenset, w: int, memo: dict):
    key = (V, E, A)
    if key in memo:
        return memo[key]
    memo[key] = None  # guards against cycles; overwritten on success
    res = _search_uncached(V, E, A, w, memo)
    memo[key] = res
    return res


def _search_uncached(V, E, A, w, memo):
    if len(A) > w:
        return None
    order = sorted(V)
    if len(E) == 1:
        ((a, b), kind), = E
        if V == {a, b}:
            return Leaf(a, b, kind, A)
    if not E and len(V) == 1:
        return VertexCreate(None, order[0], A)
    touched = {x for (p, _) in E for x in p}
    # vertex creation of an isolated vertex
    for idx, s in enumerate(order):
        if s in touched or len(V) == 1:
            continue
        nb = set()
        if idx > 0:
            nb.add(order[idx - 1])
        if idx + 1 < len(order):
            nb.add(order[idx + 1])
        A2 = (A - {s}) | nb
        if len(A2) > w:
            continue
        child = _search(V - {s}, E, frozenset(A2), w, memo)
        if child is not None:
            return VertexCreate(child, s, A)
    # merges; the side holding the smallest edge (or vertex) is the left one
    elist = sorted(E)
    for mask in range(1 << len(elist)):
        if elist and not mask & 1:
            continue
        E1 = frozenset(e for i, e in enumerate(elist) if mask >> i & 1)
        E2 = E - E1
        ends1 = {x for (p, _) in E1 for x in p}
        ends2 = {x for (p, _) in E2 for x in p}
        choices = []
        for x in order:
            if x in ends1 and x in ends2:
                choices.append((3,))
            elif x in ends1:
                choices.append((1, 3))
            elif x in ends2:
                choices.append((2, 3))
            else:
                choices.append((1, 2, 3))
        for combo in itertools.product(*choices):
            V1 = frozenset(x for x, c in zip(order, combo) if c & 1)
            V2 = frozenset(x for x, c in zip(order, combo) if c & 2)
            if not V1 or not V2:
                continue
            if (V1 == V and E1 == E) or (V2 == V and E2 == E):
                continue
            if not elist and order[0] not in V1:
                continue
            if any(a * b == 2 for a, b in zip(combo, combo[1:])):
                continue  # consecutive vertices on opposite sides only
            S = V1 & V2
            A1 = (A & V1) | S
            A2 = (A & V2) | S
            if len(A1) > w or len(A2) > w:
                continue
            left = _search(V1, E1, frozenset(A1), w, memo)
            if left is None:
                continue
            right = _search(V2, E2, frozenset(A2), w, memo)
            if right is not None:
                return Merge(left, right, A)
    return None


@dataclass(frozen=True)
class MergeWidthReport:
    tree_width: int
    dist_out: int
    bound: int
    exact: Optional[int] = None


def merge_width_report(P: Pattern, exact: bool = False) -> MergeWidthReport:
    """Width of the constructed tree, the ``2·dist_out + 2`` bound and optionally the exact width."""
    d, _ = dist_out(P)
    T = build_bounded_tree(P)
    ex = exact_merge_width(P, upper=T.width)[0] if exact and P.k <= 5 else None
    return MergeWidthReport(T.width, d, 2 * d + 2, ex)
