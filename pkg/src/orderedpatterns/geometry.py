"""Detectors for the four-vertex family P_F arising from intersection geometry.

``P_F`` has mandatory pairs (1,3) and (2,4) and forbids the pairs named in
``F`` among a=(1,2), b=(2,3), c=(3,4) and d=(1,4).  P∅, P_a, P_b and P_c are
detected in O(n + m), P_ab in O(n·m).

All scans share one idea.  Vertices are visited in order, and ``ACTIVE``
holds the earlier vertices that still have a neighbor at or beyond the
current one, kept in order in a doubly linked list.
"""

from __future__ import annotations

from typing import Optional

from .graph import OrderedGraph, ScanCounter, mirror_graph, mirror_positions
from .pattern import Pattern, pf_pattern
from .report import DetectionReport

__all__ = [
    "SCAN_CONSTANT",
    "GEOMETRY_DETECTORS",
    "detect_p_empty",
    "detect_p_a",
    "detect_p_b",
    "detect_p_c",
    "detect_p_ab",
    "geometry_letters_of",
    "detect_geometry",
]

# Linear detectors report at most SCAN_CONSTANT * (n + m) visits.
SCAN_CONSTANT = 4


class _Active:
    """Ordered vertex list with O(1) append and delete.

    ``ptr[u]`` indexes the first neighbor of ``u`` above it that has not
    been passed yet; that is the decremental copy of N⁺(u).
    """

    __slots__ = ("succ", "ptr", "prev", "next", "head", "tail", "member")

    def __init__(self, G: OrderedGraph):
        n = G.n
        self.succ = G.succ
        self.ptr = [0] * (n + 1)
        self.prev = [0] * (n + 1)
        self.next = [0] * (n + 1)
        self.member = [False] * (n + 1)
        self.head = 0
        self.tail = 0

    def append(self, u: int) -> None:
        self.member[u] = True
        self.prev[u] = self.tail
        self.next[u] = 0
        if self.tail:
            self.next[self.tail] = u
        else:
            self.head = u
        self.tail = u

    def delete(self, u: int) -> None:
        self.member[u] = False
        p, q = self.prev[u], self.next[u]
        if p:
            self.next[p] = q
        else:
            self.head = q
        if q:
            self.prev[q] = p
        else:
            self.tail = p

    def pass_vertex(self, i: int, pred_i: list) -> None:
        """Delete ``i`` from N⁺(u) for every ``u`` in N⁻(i); drop exhausted vertices."""
        ptr, succ = self.ptr, self.succ
        for u in pred_i:
            ptr[u] += 1
            if ptr[u] == len(succ[u]):
                self.delete(u)

    def later_neighbor(self, u: int, i: int) -> Optional[int]:
        """Smallest remaining neighbor of ``u`` strictly above ``i``."""
        s, t = self.succ[u], self.ptr[u]
        while t < len(s) and s[t] <= i:
            t += 1
        return s[t] if t < len(s) else None


def _report(name: str, w) -> DetectionReport:
    if w is None:
        return DetectionReport(False, engine="geometry", detail=name)
    return DetectionReport(True, tuple(w), engine="geometry", detail=name)


def detect_p_empty(G: OrderedGraph, counter: Optional[ScanCounter] = None) -> DetectionReport:
    """Two crossing edges ``(a, c), (b, d)`` with ``a < b < c < d``.

    Each edge opens at its left end and closes at its right end.  The
    pattern is absent iff the edges nest like parentheses, which one stack
    scan decides.  At a close, the top of the stack must be the edge being
    closed; any other top crosses it.

    >>> detect_p_empty(OrderedGraph(4, [(1, 3), (2, 4)])).witness
    (1, 2, 3, 4)
    """
    n, pred, succ = G.n, G.pred, G.succ
    stack: list = []
    visits = 0
    w = None
    for v in range(1, n + 1):
        # closes, innermost (largest left end) first
        for u in reversed(pred[v]):
            visits += 1
            a, c = stack[-1]
            if c != v:
                w = (u, a, v, c)
                break
            stack.pop()
        if w is not None:
            break
        # opens, farthest right end deepest
        for x in reversed(succ[v]):
            stack.append((v, x))
        visits += len(succ[v]) + 1
    if counter is not None:
        counter.add(visits)
    return _report("p-empty", w)


def detect_p_a(G: OrderedGraph, counter: Optional[ScanCounter] = None) -> DetectionReport:
    """P_a: ``x < j < i < q`` with edges xi, jq and non-edge xj.

    At step ``i``, ``j`` is the largest vertex below ``i`` with a neighbor
    above ``i``.  The pattern ends at ``i`` iff some ``x`` in N⁻(i) below
    ``j`` is not adjacent to ``j``.  Any smaller candidate ``β`` would give
    a pattern ending at ``j``, which an earlier step already ruled out.
    Vertices skipped while looking for ``j`` have ``i`` as their last
    neighbor, so they leave ACTIVE in this same step.

    >>> detect_p_a(OrderedGraph(4, [(1, 3), (2, 4)])).witness
    (1, 2, 3, 4)
    """
    n, pred = G.n, G.pred
    es = G.edge_set
    act = _Active(G)
    succ, ptr = act.succ, act.ptr
    visits = 0
    w = None
    for i in range(1, n + 1):
        pi = pred[i]
        if pi and act.head:
            # largest true active vertex, from the tail
            j = act.tail
            while j:
                visits += 1
                s, t = succ[j], ptr[j]
                if s[t] > i or t + 1 < len(s):
                    break
                j = act.prev[j]
            if j and j != act.head:
                for x in pi:
                    visits += 1
                    if x >= j:
                        break
                    if (x, j) not in es:
                        w = (x, j, i, act.later_neighbor(j, i))
                        break
                if w is not None:
                    break
        act.pass_vertex(i, pi)
        visits += len(pi) + 1
        if succ[i]:
            act.append(i)
    if counter is not None:
        counter.add(visits)
    return _report("p-a", w)


def detect_p_c(G: OrderedGraph, counter: Optional[ScanCounter] = None) -> DetectionReport:
    """P_c, the mirror image of P_a: P_a on the mirrored graph, witness mapped back."""
    r = detect_p_a(mirror_graph(G), counter)
    if r.found:
        return _report("p-c", mirror_positions(G.n, r.witness))
    return _report("p-c", None)


def detect_p_b(G: OrderedGraph, counter: Optional[ScanCounter] = None) -> DetectionReport:
    """P_b: ``u < v < i < w`` with edges ui, vw and non-edge vi.

    After passing ``i``, ACTIVE holds exactly the vertices below ``i`` with
    a neighbor above ``i``.  With ``j = min N⁻(i)``, the pattern ends at
    ``i`` iff ACTIVE restricted to ``]j, i[`` is not contained in N⁻(i).
    Both lists are walked downward from ``i``.  Every matched element
    belongs to N⁻(i), and the first unmatched one stops the scan.

    >>> detect_p_b(OrderedGraph(4, [(1, 3), (2, 4)])).witness
    (1, 2, 3, 4)
    """
    n, pred = G.n, G.pred
    act = _Active(G)
    succ = act.succ
    visits = 0
    w = None
    for i in range(1, n + 1):
        pi = pred[i]
        act.pass_vertex(i, pi)
        visits += len(pi) + 1
        if pi and act.head:
            j = pi[0]
            v = act.tail
            t = len(pi) - 1
            while v and v > j:
                visits += 1
                while t >= 0 and pi[t] > v:
                    t -= 1
                if t < 0 or pi[t] != v:
                    w = (j, v, i, act.later_neighbor(v, i))
                    break
                v = act.prev[v]
            if w is not None:
                break
        if succ[i]:
            act.append(i)
    if counter is not None:
        counter.add(visits)
    return _report("p-b", w)


def detect_p_ab(G: OrderedGraph, counter: Optional[ScanCounter] = None) -> DetectionReport:
    """P_ab: ``α < β < i < δ`` with edges αi, βδ and non-edges αβ, βi.

    At each ``i`` the active non-neighbors of ``i`` are marked and counted
    by prefix sums.  For each ``α`` in N⁻(i), the marked vertices in
    ``]α, i[`` must all be neighbors of ``α``.  That needs one pass over
    N⁺(α), so the total is O(n·m).

    >>> detect_p_ab(OrderedGraph(4, [(1, 3), (2, 4)])).witness
    (1, 2, 3, 4)
    """
    n, pred = G.n, G.pred
    act = _Active(G)
    succ = act.succ
    visits = 0
    w = None
    mark = [False] * (n + 1)
    for i in range(1, n + 1):
        pi = pred[i]
        act.pass_vertex(i, pi)
        visits += len(pi) + 1
        if pi and act.head:
            nbr = set(pi)
            marked = []
            v = act.head
            while v:
                if v not in nbr:
                    mark[v] = True
                    marked.append(v)
                v = act.next[v]
            visits += n
            cnt = [0] * (i + 1)
            for v in range(1, i):
                cnt[v] = cnt[v - 1] + mark[v]
            for a in pi:
                total = cnt[i - 1] - cnt[a]
                if not total:
                    continue
                adj = 0
                for x in succ[a]:
                    if x >= i:
                        break
                    adj += mark[x]
                visits += len(succ[a])
                if adj < total:
                    sa = set(succ[a])
                    b = next(v for v in marked if a < v and v not in sa)
                    w = (a, b, i, act.later_neighbor(b, i))
                    break
            for v in marked:
                mark[v] = False
            if w is not None:
                break
        if succ[i]:
            act.append(i)
    if counter is not None:
        counter.add(visits)
    return _report("p-ab", w)


GEOMETRY_DETECTORS = {
    "": detect_p_empty,
    "a": detect_p_a,
    "b": detect_p_b,
    "c": detect_p_c,
    "ab": detect_p_ab,
}


def geometry_letters_of(P: Pattern) -> Optional[str]:
    """Forbidden letters when ``P`` is a family member with a detector here, else ``None``."""
    for letters in GEOMETRY_DETECTORS:
        if pf_pattern(letters) == P:
            return letters
    return None


def detect_geometry(G: OrderedGraph, letters: str, counter: Optional[ScanCounter] = None) -> DetectionReport:
    key = "".join(sorted(letters))
    if key not in GEOMETRY_DETECTORS:
        raise ValueError(f"no dedicated detector for P_{key or '∅'}")
    return GEOMETRY_DETECTORS[key](G, counter)
