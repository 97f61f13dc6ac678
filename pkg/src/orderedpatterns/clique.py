"""Reduction of pattern detection to clique detection in a k-layered graph.

Layer ``i`` holds a copy ``(u, i)`` of every graph vertex ``u``.  For
``i < j`` the copies ``(u, i)`` and ``(v, j)`` are adjacent iff ``u < v`` and
the pair ``(i, j)`` of the pattern is satisfied by ``uv``: an edge when
mandatory, a non-edge when forbidden, anything when undecided.  A k-clique
then picks one position per layer, in increasing order, realizing the pattern.
"""

from __future__ import annotations

from typing import Optional

from .graph import OrderedGraph
from .pattern import Pattern
from .report import DetectionReport

__all__ = ["LayeredGraph", "reduce_to_clique", "find_layered_clique", "detect_via_clique"]


class LayeredGraph:
    """Adjacency between layers stored as bitset rows.

    ``rows[(i, j)][u]`` (``i < j``, both 1-based) is an int whose bit ``v``
    is set iff ``(u, i)`` and ``(v, j)`` are adjacent.  Vertex ids used for
    export are ``(i - 1) * n + u``.
    """

    def __init__(self, n: int, k: int, rows: dict):
        self.n = n
        self.k = k
        self.rows = rows

    def vertex_id(self, u: int, layer: int) -> int:
        return (layer - 1) * self.n + u

    def decode(self, vid: int) -> tuple:
        """``(origin position, layer)`` of an export id."""
        layer, u = divmod(vid - 1, self.n)
        return u + 1, layer + 1

    def origin(self, vid: int) -> int:
        return self.decode(vid)[0]

    def layer(self, vid: int) -> int:
        return self.decode(vid)[1]

    def adjacent(self, u: int, i: int, v: int, j: int) -> bool:
        if i == j:
            return False
        if i > j:
            u, i, v, j = v, j, u, i
        return bool(self.rows[(i, j)][u] >> v & 1)

    def edges(self):
        """All edges as export-id pairs, smaller id first."""
        n = self.n
        for (i, j), row in sorted(self.rows.items()):
            for u in range(1, n + 1):
                bits = row[u]
                while bits:
                    low = bits & -bits
                    v = low.bit_length() - 1
                    bits ^= low
                    yield (i - 1) * n + u, (j - 1) * n + v

    def render(self) -> str:
        """The reduction in the edge-list graph format."""
        es = list(self.edges())
        lines = [f"{self.n * self.k} {len(es)}"] + [f"{a} {b}" for a, b in es]
        return "\n".join(lines) + "\n"


def reduce_to_clique(G: OrderedGraph, P: Pattern) -> LayeredGraph:
    n, k = G.n, P.k
    adj = G.adjacency_bits
    full = (1 << (n + 1)) - 2  # bits 1..n
    above = [full & ~((1 << (u + 1)) - 1) for u in range(n + 1)]
    mand = set(P.mandatory)
    forb = set(P.forbidden)
    rows = {}
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            if (i, j) in mand:
                row = [adj[u] & above[u] for u in range(n + 1)]
            elif (i, j) in forb:
                row = [~adj[u] & above[u] for u in range(n + 1)]
            else:
                row = list(above)
            row[0] = 0
            rows[(i, j)] = row
    return LayeredGraph(n, k, rows)


def find_layered_clique(LG: LayeredGraph) -> Optional[tuple]:
    """Lexicographically smallest k-clique, decoded to graph positions, or ``None``."""
    n, k = LG.n, LG.k
    if k == 0:
        return ()
    if n < k:
        return None
    rows = LG.rows
    chosen = [0] * (k + 1)

    def search(t: int, cand: list) -> bool:
        bits = cand[t]
        while bits:
            low = bits & -bits
            u = low.bit_length() - 1
            bits ^= low
            nxt = cand[:]
            ok = True
            for j in range(t + 1, k + 1):
                nxt[j] &= rows[(t, j)][u]
                if not nxt[j]:
                    ok = False
                    break
            if not ok:
                continue
            chosen[t] = u
            if t == k or search(t + 1, nxt):
                return True
        return False

    cand = [0] + [(1 << (n + 1)) - 2] * k
    if search(1, cand):
        return tuple(chosen[1:])
    return None


def detect_via_clique(G: OrderedGraph, P: Pattern) -> DetectionReport:
    """Detect ``P`` by searching a k-clique in the layered reduction."""
    w = find_layered_clique(reduce_to_clique(G, P))
    if w is None:
        return DetectionReport(False, engine="clique")
    return DetectionReport(True, w, engine="clique")
