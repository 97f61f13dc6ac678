"""Ordered graphs: vertices are the positions 1..n of a fixed total order.

Neighborhoods are split into predecessor lists ``pred[i]`` (neighbors below
``i``) and successor lists ``succ[i]`` (neighbors above ``i``), both sorted.
They are built by bucketing edges by position (counting passes, never a
comparison sort), so construction is O(n + m).
"""

from __future__ import annotations

import io
from functools import cached_property
from typing import IO, Iterable, Sequence

__all__ = [
    "OrderedGraph",
    "GraphParseError",
    "MalformedLineError",
    "VertexOutOfRangeError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "EdgeCountError",
    "ScanCounter",
    "parse_ordered_graph",
    "render_ordered_graph",
    "build_neighborhoods",
    "mirror_graph",
    "complement_graph",
    "mirror_positions",
    "is_realization",
]


class GraphParseError(ValueError):
    """Base class for edge-list parse failures; ``line`` is 1-based."""

    kind = "parse error"

    def __init__(self, line: int, message: str):
        self.line = line
        self.detail = message
        super().__init__(f"{self.kind} at line {line}: {message}")


class MalformedLineError(GraphParseError):
    kind = "malformed line"


class VertexOutOfRangeError(GraphParseError):
    kind = "vertex out of range"


class SelfLoopError(GraphParseError):
    kind = "self-loop"


class DuplicateEdgeError(GraphParseError):
    kind = "duplicate edge"


class EdgeCountError(GraphParseError):
    kind = "edge count mismatch"


class ScanCounter:
    """Counts adjacency-list element visits made by an instrumented detector."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def add(self, k: int = 1) -> None:
        self.count += k

    def __repr__(self) -> str:
        return f"ScanCounter({self.count})"


class OrderedGraph:
    """An immutable simple undirected graph on positions ``1..n``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs
        Unordered pairs ``(u, v)``; each is stored as ``(min, max)``.

    Attributes
    ----------
    pred, succ : list of list of int
        ``pred[i]`` is the increasing list N⁻(i) and ``succ[i]`` the
        increasing list N⁺(i).  Index 0 is an unused empty list so that
        positions index directly.

    Raises
    ------
    ValueError
        On self-loops, duplicate edges or out-of-range endpoints.
    """

    __slots__ = ("n", "m", "pred", "succ", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        pairs = edges if isinstance(edges, list) else list(edges)
        self.n = n
        if len(pairs) >= _ARRAY_THRESHOLD:
            su, sv = _sorted_edges_array(n, pairs)
            self.m = len(su)
            self.__dict__["edge_set"] = frozenset(zip(su, sv))
            self.pred, self.succ = _lists_from_sorted(n, su, sv)
            return
        seen = set()
        for e in pairs:
            u, v = e
            u, v = _check_pair(n, u, v)
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        self.m = len(seen)
        self.__dict__["edge_set"] = frozenset(seen)
        self.pred, self.succ = _bucket_neighborhoods(n, seen)

    @classmethod
    def _from_lists(cls, n: int, pred: list, succ: list, edge_set=None) -> "OrderedGraph":
        g = cls.__new__(cls)
        g.n = n
        g.pred = pred
        g.succ = succ
        g.m = sum(len(s) for s in succ)
        if edge_set is not None:
            g.__dict__["edge_set"] = edge_set
        return g

    @cached_property
    def edge_set(self) -> frozenset:
        """All edges as ``(u, v)`` with ``u < v``."""
        return frozenset((u, v) for u in range(1, self.n + 1) for v in self.succ[u])

    def edges(self) -> list:
        """Edges sorted lexicographically."""
        return [(u, v) for u in range(1, self.n + 1) for v in self.succ[u]]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.pred[v]) + len(self.succ[v])

    @cached_property
    def adjacency_bits(self) -> list:
        """Packed adjacency rows: bit ``v`` of ``adjacency_bits[u]`` is set iff uv is an edge.

        Built lazily; the linear detectors never touch it.
        """
        rows = [0] * (self.n + 1)
        for u in range(1, self.n + 1):
            r = 0
            for v in self.pred[u]:
                r |= 1 << v
            for v in self.succ[u]:
                r |= 1 << v
            rows[u] = r
        return rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedGraph):
            return NotImplemented
        return self.n == other.n and self.succ == other.succ

    def __hash__(self) -> int:
        return hash((self.n, self.edge_set))

    def __repr__(self) -> str:
        return f"OrderedGraph(n={self.n}, m={self.m})"


def _bucket_neighborhoods(n: int, pairs: list) -> tuple:
    # Two stable bucket passes give sorted lists without comparison sorting:
    # walking edges grouped by the small endpoint fills pred lists in
    # increasing order, and walking them grouped by the large endpoint fills
    # succ lists in increasing order.
    by_low = [[] for _ in range(n + 1)]
    by_high = [[] for _ in range(n + 1)]
    for u, v in pairs:
        by_low[u].append(v)
        by_high[v].append(u)
    pred = [[] for _ in range(n + 1)]
    succ = [[] for _ in range(n + 1)]
    for u in range(1, n + 1):
        for v in by_low[u]:
            pred[v].append(u)
    for v in range(1, n + 1):
        for u in by_high[v]:
            succ[u].append(v)
    return pred, succ


# Above this many edges, construction switches to numpy radix passes.  Both
# paths are linear; the array path also allocates the neighbor lists in
# vertex order, which keeps later scans cache-friendly on large graphs.
_ARRAY_THRESHOLD = 2048


def _check_pair(n: int, u: int, v: int) -> tuple:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    if u > v:
        u, v = v, u
    if u < 1 or v > n:
        raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
    return u, v


def _radix_order(keys, order):
    """Stable reorder of ``order`` by ``keys[order]``, one 16-bit digit at a time."""
    import numpy as np

    k = keys[order]
    shift = 0
    top = int(k.max()) if len(k) else 0
    while True:
        digit = ((k >> shift) & 0xFFFF).astype(np.uint16)
        perm = np.argsort(digit, kind="stable")  # radix sort for 16-bit types
        order, k = order[perm], k[perm]
        shift += 16
        if top >> shift == 0:
            return order


def _sorted_edges_array(n: int, pairs: list) -> tuple:
    import numpy as np

    try:
        a = np.asarray(pairs, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise ValueError("edges must be pairs of integers") from exc
    if a.ndim != 2 or a.shape[1] != 2:
        raise ValueError("edges must be pairs of integers")
    u = a.min(axis=1)
    v = a.max(axis=1)
    bad = np.flatnonzero((u == v) | (u < 1) | (v > n))
    if len(bad):
        x, y = pairs[int(bad[0])]
        _check_pair(n, int(x), int(y))
    order = np.arange(len(u))
    order = _radix_order(v, order)
    order = _radix_order(u, order)
    u, v = u[order], v[order]
    dup = np.flatnonzero((u[1:] == u[:-1]) & (v[1:] == v[:-1]))
    if len(dup):
        raise ValueError(f"duplicate edge ({int(u[dup[0]])}, {int(v[dup[0]])})")
    # one shared int object per vertex id instead of one per list entry
    ids = list(range(n + 1))
    get = ids.__getitem__
    return list(map(get, u.tolist())), list(map(get, v.tolist()))


def _lists_from_sorted(n: int, su: list, sv: list) -> tuple:
    """Neighbor lists from edges in lexicographic order, allocated in vertex order."""
    m = len(su)
    succ = [[] for _ in range(n + 1)]
    start = 0
    while start < m:
        u = su[start]
        end = start
        while end < m and su[end] == u:
            end += 1
        succ[u] = sv[start:end]
        start = end
    # pred lists: walk u in increasing order, so each pred[v] fills in order
    cnt = [0] * (n + 1)
    for v in sv:
        cnt[v] += 1
    pred = [None] * (n + 1)
    pred[0] = []
    for v in range(1, n + 1):
        pred[v] = [0] * cnt[v]
    fill = [0] * (n + 1)
    for u, v in zip(su, sv):
        pred[v][fill[v]] = u
        fill[v] += 1
    return pred, succ


def build_neighborhoods(n: int, pairs: Iterable[Sequence[int]]) -> OrderedGraph:
    """Build an :class:`OrderedGraph` with sorted N⁻/N⁺ lists in O(n + m)."""
    return OrderedGraph(n, pairs)


def _read_text(source) -> str:
    if isinstance(source, (bytes, bytearray)):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    return data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data


def _content_lines(text: str):
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MalformedLineError(lineno, f"not an integer: {tok!r}") from None


def parse_ordered_graph(source: "str | bytes | IO") -> OrderedGraph:
    """Parse the edge-list format.

    The first content line is ``n m``; then exactly ``m`` lines ``u v`` with
    ``1 <= u < v <= n``.  Lines starting with ``#`` and blank lines are
    skipped.  Every error names the offending 1-based line.

    Examples
    --------
    >>> g = parse_ordered_graph("3 2\\n1 2\\n2 3\\n")
    >>> g.n, sorted(g.edge_set)
    (3, [(1, 2), (2, 3)])
    """
    text = _read_text(source)
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise MalformedLineError(1, "missing header 'n m'") from None
    toks = header.split()
    if len(toks) != 2:
        raise MalformedLineError(lineno, "header must be 'n m'")
    n, m = (_parse_int(t, lineno) for t in toks)
    if n < 0 or m < 0:
        raise MalformedLineError(lineno, "n and m must be non-negative")
    seen = set()
    pairs = []
    last = lineno
    for lineno, line in lines:
        last = lineno
        toks = line.split()
        if len(toks) != 2:
            raise MalformedLineError(lineno, "edge line must be 'u v'")
        u, v = (_parse_int(t, lineno) for t in toks)
        if u == v:
            raise SelfLoopError(lineno, f"vertex {u}")
        for x in (u, v):
            if x < 1 or x > n:
                raise VertexOutOfRangeError(lineno, f"{x} not in 1..{n}")
        if u > v:
            raise MalformedLineError(lineno, f"endpoints must be increasing, got {u} {v}")
        if (u, v) in seen:
            raise DuplicateEdgeError(lineno, f"{u} {v}")
        if len(pairs) == m:
            raise EdgeCountError(lineno, f"header declares {m} edges, found more")
        seen.add((u, v))
        pairs.append((u, v))
    if len(pairs) != m:
        raise EdgeCountError(last, f"header declares {m} edges, found {len(pairs)}")
    pred, succ = _bucket_neighborhoods(n, pairs)
    return OrderedGraph._from_lists(n, pred, succ, frozenset(seen))


def render_ordered_graph(G: OrderedGraph) -> str:
    """Canonical rendering: header then edges in lexicographic order."""
    out = [f"{G.n} {G.m}"]
    out.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(out) + "\n"


def mirror_graph(G: OrderedGraph) -> OrderedGraph:
    """Reverse the order: vertex ``i`` becomes ``n + 1 - i``.  O(n + m)."""
    n = G.n
    # N⁻ of the image of i is the reversed image of N⁺(i), and vice versa.
    pred = [[] for _ in range(n + 1)]
    succ = [[] for _ in range(n + 1)]
    for i in range(1, n + 1):
        j = n + 1 - i
        pred[j] = [n + 1 - v for v in reversed(G.succ[i])]
        succ[j] = [n + 1 - u for u in reversed(G.pred[i])]
    return OrderedGraph._from_lists(n, pred, succ)


def complement_graph(G: OrderedGraph) -> OrderedGraph:
    """Swap edges and non-edges.  Θ(n²) time and space."""
    n = G.n
    pred = [[] for _ in range(n + 1)]
    succ = [[] for _ in range(n + 1)]
    for u in range(1, n + 1):
        nb = set(G.succ[u])
        row = [v for v in range(u + 1, n + 1) if v not in nb]
        succ[u] = row
        for v in row:
            pred[v].append(u)
    return OrderedGraph._from_lists(n, pred, succ)


def mirror_positions(n: int, positions: Sequence[int]) -> tuple:
    """Translate a witness through the mirror map; the result is increasing again."""
    return tuple(n + 1 - p for p in reversed(positions))


def is_realization(G: OrderedGraph, X: Sequence[int], P) -> bool:
    """True iff the positions ``X`` realize pattern ``P`` in ``G``.

    ``X`` must be strictly increasing within ``1..n`` and have length
    ``P.k``; a length mismatch raises ``ValueError``.
    """
    if len(X) != P.k:
        raise ValueError(f"witness has {len(X)} positions, pattern has {P.k} vertices")
    prev = 0
    for x in X:
        if x <= prev or x > G.n:
            return False
        prev = x
    es = G.edge_set
    for a, b in P.mandatory:
        if (X[a - 1], X[b - 1]) not in es:
            return False
    for a, b in P.forbidden:
        if (X[a - 1], X[b - 1]) in es:
            return False
    return True
