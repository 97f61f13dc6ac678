"""Anchor-table dynamic programming over a merge tree.

The table of a node has one axis per anchor (sorted by vertex id), each of
length ``n + 1`` and indexed by graph position; index 0 is never set.  An
entry is true iff the node's sub-pattern has a realization placing the
anchors at those positions.  Anchors that a node drops are projected out
with ``any``.  A merge is a boolean tensor contraction over the active
anchors, evaluated with :func:`numpy.einsum`.
"""

from __future__ import annotations

import string
from typing import Optional

import numpy as np

from ..graph import OrderedGraph, is_realization
from ..pattern import Pattern
from ..report import DetectionReport, EngineError
from .tree import Leaf, Merge, MergeTree, VertexCreate

__all__ = ["DEFAULT_WIDTH_CAP", "DEFAULT_CELL_CAP", "AnchorTable", "compute_tables", "run_dp"]

DEFAULT_WIDTH_CAP = 6
DEFAULT_CELL_CAP = 1 << 26


class AnchorTable:
    """Dense boolean table over the anchors ``axes`` (sorted vertex ids)."""

    __slots__ = ("axes", "data")

    def __init__(self, axes: tuple, data: np.ndarray):
        self.axes = tuple(axes)
        self.data = data

    def tuples(self):
        """Stored anchor tuples, one position per anchor, in lexicographic order."""
        return [tuple(int(x) for x in t) for t in np.argwhere(self.data)]

    def __len__(self):
        return int(np.count_nonzero(self.data))

    def __repr__(self):
        return f"AnchorTable(axes={self.axes}, entries={len(self)})"


def _expand(data: np.ndarray, axes: tuple, target: tuple) -> np.ndarray:
    """View of ``data`` broadcastable over ``target`` axes (``axes`` ⊆ ``target``, both sorted)."""
    shape = [1] * len(target)
    pos = {a: i for i, a in enumerate(target)}
    for a, size in zip(axes, data.shape):
        shape[pos[a]] = size
    return data.reshape(shape)


def _gap_mask(n: int, lo: Optional[int], hi: Optional[int]):
    """Room for one unanchored position strictly between the slot neighbors."""
    idx = np.arange(n + 1)
    if lo is not None and hi is not None:
        return idx[:, None] + 2 <= idx[None, :]
    if lo is not None:
        return idx <= n - 1
    if hi is not None:
        return idx >= 2
    return None


def _leaf_table(G: OrderedGraph, node: Leaf) -> np.ndarray:
    n = G.n
    a_anch = node.a in node.anchors
    b_anch = node.b in node.anchors
    pred, succ = G.pred, G.succ
    mand = node.kind == "M"
    if a_anch and b_anch:
        T = np.zeros((n + 1, n + 1), dtype=bool)
        if mand:
            for u in range(1, n + 1):
                if succ[u]:
                    T[u, succ[u]] = True
        else:
            T[1:, 1:] = np.triu(np.ones((n, n), dtype=bool), 1)
            for u in range(1, n + 1):
                if succ[u]:
                    T[u, succ[u]] = False
        return T
    if a_anch:
        T = np.zeros(n + 1, dtype=bool)
        for u in range(1, n + 1):
            T[u] = bool(succ[u]) if mand else len(succ[u]) < n - u
        return T
    if b_anch:
        T = np.zeros(n + 1, dtype=bool)
        for v in range(1, n + 1):
            T[v] = bool(pred[v]) if mand else len(pred[v]) < v - 1
        return T
    pairs = n * (n - 1) // 2
    return np.array(G.m > 0 if mand else G.m < pairs)


def _create_full(G: OrderedGraph, node: VertexCreate, child_tab: Optional[AnchorTable]):
    """Table over child anchors plus the slot (when the slot is anchored), before projection."""
    n = G.n
    s = node.vertex
    s_anch = s in node.anchors
    if node.child is None:
        if s_anch:
            T = np.ones(n + 1, dtype=bool)
            T[0] = False
            return (s,), T
        return (), np.array(n >= 1)
    lo, hi = node.neighbors()
    axes = child_tab.axes
    data = child_tab.data
    if s_anch:
        full = tuple(sorted(axes + (s,)))
        idx = np.arange(n + 1)
        less = idx[:, None] < idx[None, :]
        out = _expand(data, axes, full) & _expand(idx >= 1, (s,), full)
        if lo is not None:
            out = out & _expand(less, (lo, s), full)
        if hi is not None:
            out = out & _expand(less, (s, hi), full)
        return full, out
    mask = _gap_mask(n, lo, hi)
    if mask is None:
        return axes, data
    mask_axes = tuple(x for x in (lo, hi) if x is not None)
    return axes, data & _expand(mask, mask_axes, axes)


def _project(axes: tuple, data: np.ndarray, keep) -> tuple:
    drop = tuple(i for i, a in enumerate(axes) if a not in keep)
    if drop:
        data = data.any(axis=drop)
    return tuple(a for a in axes if a in keep), data


def _merge_table(lt: AnchorTable, rt: AnchorTable, keep: tuple) -> np.ndarray:
    letters = {}
    for a in sorted(set(lt.axes) | set(rt.axes)):
        letters[a] = string.ascii_letters[len(letters)]
    subscripts = (
        "".join(letters[a] for a in lt.axes)
        + ","
        + "".join(letters[a] for a in rt.axes)
        + "->"
        + "".join(letters[a] for a in keep)
    )
    res = np.einsum(subscripts, lt.data.astype(np.float32), rt.data.astype(np.float32), optimize=True)
    return np.asarray(res > 0)


def compute_tables(
    G: OrderedGraph,
    T: MergeTree,
    *,
    width_cap: int = DEFAULT_WIDTH_CAP,
    cell_cap: int = DEFAULT_CELL_CAP,
) -> list:
    """Anchor tables of all nodes, indexed by post-order node id."""
    if T.width > width_cap:
        raise EngineError(f"merge tree width {T.width} exceeds the cap {width_cap}")
    n = G.n
    tables: list = [None] * len(T.nodes)
    for node in T.nodes:
        keep = tuple(sorted(node.anchors))
        cells = (n + 1) ** max(len(keep), 1)
        if cells > cell_cap:
            raise EngineError(f"anchor table with {len(keep)} axes over n={n} exceeds {cell_cap} cells")
        if isinstance(node, Leaf):
            data = _leaf_table(G, node)
            axes = tuple(x for x in (node.a, node.b) if x in node.anchors)
        elif isinstance(node, VertexCreate):
            child = tables[node.child.nid] if node.child is not None else None
            axes, data = _create_full(G, node, child)
            axes, data = _project(axes, data, keep)
        else:
            lt, rt = tables[node.left.nid], tables[node.right.nid]
            axes, data = keep, _merge_table(lt, rt, keep)
        if axes != keep:
            raise EngineError(f"node {node.nid}: table axes {axes} differ from anchors {keep}")
        tables[node.nid] = AnchorTable(axes, data)
    return tables


def _slice_to(tab_axes: tuple, data: np.ndarray, known: dict, target: tuple) -> np.ndarray:
    idx = tuple(known[a] if a in known else slice(None) for a in tab_axes)
    sub = data[idx]
    rem = tuple(a for a in tab_axes if a not in known)
    return _expand(sub, rem, target)


def _first_true(arr: np.ndarray) -> Optional[tuple]:
    hits = np.argwhere(arr)
    if len(hits) == 0:
        return None
    return tuple(int(x) for x in hits[0])


def _realize(G: OrderedGraph, node, known: dict, tables: list, out: dict) -> None:
    """Extend ``known`` (positions of the node's anchors) to all of its vertices, into ``out``."""
    n = G.n
    if isinstance(node, Leaf):
        a, b = node.a, node.b
        want = node.kind == "M"
        es = G.edge_set
        pa, pb = known.get(a), known.get(b)
        cand_a = [pa] if pa is not None else range(1, n + 1)
        for x in cand_a:
            cand_b = [pb] if pb is not None else range(x + 1, n + 1)
            for y in cand_b:
                if x < y and ((x, y) in es) == want:
                    out[a], out[b] = x, y
                    return
        raise EngineError(f"node {node.nid}: leaf has no realization at {known}")
    if isinstance(node, VertexCreate):
        s = node.vertex
        child_tab = tables[node.child.nid] if node.child is not None else None
        axes, full = _create_full(G, node, child_tab)
        free = tuple(a for a in axes if a not in known)
        pick = _first_true(_slice_to(axes, full, known, free))
        if pick is None:
            raise EngineError(f"node {node.nid}: no consistent slot at {known}")
        pos = dict(known)
        pos.update(zip(free, pick))
        if s not in pos:
            lo, hi = node.neighbors()
            if lo is not None:
                pos[s] = pos[lo] + 1
            elif hi is not None:
                pos[s] = pos[hi] - 1
            else:
                pos[s] = 1
        out[s] = pos[s]
        if node.child is not None:
            ck = {a: pos[a] for a in node.child.anchors}
            _realize(G, node.child, ck, tables, out)
        return
    lt, rt = tables[node.left.nid], tables[node.right.nid]
    free = tuple(sorted((set(lt.axes) | set(rt.axes)) - set(known)))
    joint = _slice_to(lt.axes, lt.data, known, free) & _slice_to(rt.axes, rt.data, known, free)
    pick = _first_true(np.broadcast_to(joint, tuple(n + 1 for _ in free)) if free else joint)
    if pick is None:
        raise EngineError(f"node {node.nid}: children disagree at {known}")
    pos = dict(known)
    pos.update(zip(free, pick))
    _realize(G, node.left, {a: pos[a] for a in node.left.anchors}, tables, out)
    _realize(G, node.right, {a: pos[a] for a in node.right.anchors}, tables, out)


def run_dp(G: OrderedGraph, T: MergeTree, target: Optional[Pattern] = None, **caps) -> DetectionReport:
    """Detect the root pattern of ``T`` in ``G``.

    Found iff the root table has a true entry; the witness is rebuilt top
    down from the stored tables.  Raises :class:`EngineError` when the tree
    is wider than ``width_cap`` or a table would exceed ``cell_cap`` cells.
    """
    tables = compute_tables(G, T, **caps)
    root_tab = tables[T.root.nid]
    start = _first_true(root_tab.data)
    if start is None:
        return DetectionReport(False, engine="merge", detail=f"width {T.width}")
    known = dict(zip(root_tab.axes, start))
    out: dict = {}
    _realize(G, T.root, known, tables, out)
    verts = T.root.label.vertices
    witness = tuple(out[v] for v in verts)
    P = target if target is not None else T.root.label.pattern
    if not is_realization(G, witness, P):
        raise EngineError(f"reconstructed positions {witness} do not realize the pattern")
    return DetectionReport(True, witness, engine="merge", detail=f"width {T.width}")
