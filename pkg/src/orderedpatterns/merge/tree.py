"""Anchored patterns, merge trees and their validation.

Node labels refer to the vertices of the target pattern by their ids
``1..k``, so a vertex identified during a merge simply carries the same id
on both sides.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Optional

from ..pattern import Pattern

__all__ = [
    "AnchoredPattern",
    "Leaf",
    "VertexCreate",
    "Merge",
    "MergeTree",
    "Validation",
    "validate_merge_tree",
    "tree_width",
    "dump_tree",
    "parse_tree",
]


@dataclass(frozen=True)
class AnchoredPattern:
    """A sub-pattern on some of the target's vertices, with marked anchors.

    ``edges`` holds ``((a, b), kind)`` items with ``kind`` in ``'M'``/``'F'``.
    """

    vertices: tuple
    edges: frozenset
    anchors: frozenset

    @property
    def pattern(self) -> Pattern:
        """The label as a stand-alone pattern on ``1..len(vertices)``."""
        idx = {v: i + 1 for i, v in enumerate(self.vertices)}
        m = [(idx[a], idx[b]) for (a, b), c in self.edges if c == "M"]
        f = [(idx[a], idx[b]) for (a, b), c in self.edges if c == "F"]
        return Pattern(len(self.vertices), m, f)

    @property
    def anchor_positions(self) -> tuple:
        """Anchors as 1-based positions inside :attr:`pattern`."""
        return tuple(i + 1 for i, v in enumerate(self.vertices) if v in self.anchors)


class _Node:
    label: AnchoredPattern
    nid: int = -1

    @property
    def anchors(self) -> frozenset:
        return self.label.anchors

    @property
    def children(self) -> tuple:
        return ()


class Leaf(_Node):
    """Edge creation: a single decided pair and its two endpoints."""

    def __init__(self, a: int, b: int, kind: str, anchors=()):
        if a > b:
            a, b = b, a
        self.a, self.b, self.kind = a, b, kind
        self.label = AnchoredPattern((a, b), frozenset({((a, b), kind)}), frozenset(anchors))

    def __repr__(self):
        return f"Leaf({self.a}, {self.b}, {self.kind!r}, anchors={sorted(self.anchors)})"


class VertexCreate(_Node):
    """Insert the isolated vertex ``vertex`` into the child's pattern.

    With ``child=None`` this creates a pattern consisting of the single
    vertex ``vertex``.
    """

    def __init__(self, child: Optional[_Node], vertex: int, anchors=()):
        self.child = child
        self.vertex = vertex
        if child is None:
            verts, edges = (vertex,), frozenset()
        else:
            verts = tuple(sorted(child.label.vertices + (vertex,)))
            edges = child.label.edges
        self.label = AnchoredPattern(verts, edges, frozenset(anchors))

    @property
    def children(self):
        return () if self.child is None else (self.child,)

    def neighbors(self) -> tuple:
        """The child's vertices just before and just after the slot (``None`` if absent)."""
        if self.child is None:
            return None, None
        below = [v for v in self.child.label.vertices if v < self.vertex]
        above = [v for v in self.child.label.vertices if v > self.vertex]
        return (below[-1] if below else None), (above[0] if above else None)

    def __repr__(self):
        return f"VertexCreate({self.vertex}, anchors={sorted(self.anchors)})"


class Merge(_Node):
    """Union of two labels; vertices with equal ids are identified."""

    def __init__(self, left: _Node, right: _Node, anchors=()):
        self.left, self.right = left, right
        verts = tuple(sorted(set(left.label.vertices) | set(right.label.vertices)))
        edges = left.label.edges | right.label.edges
        self.label = AnchoredPattern(verts, edges, frozenset(anchors))

    @property
    def children(self):
        return (self.left, self.right)

    @property
    def active(self) -> frozenset:
        return self.left.anchors & self.right.anchors

    def __repr__(self):
        return f"Merge(anchors={sorted(self.anchors)})"


class MergeTree:
    """A rooted merge tree; nodes are numbered in post-order."""

    def __init__(self, root: _Node):
        self.root = root
        self.nodes = list(_postorder(root))
        for i, node in enumerate(self.nodes):
            node.nid = i

    @property
    def width(self) -> int:
        return max(len(node.anchors) for node in self.nodes)

    def __repr__(self):
        return f"MergeTree(nodes={len(self.nodes)}, width={self.width})"


def _postorder(node: _Node) -> Iterator[_Node]:
    stack = [(node, False)]
    while stack:
        cur, done = stack.pop()
        if done:
            yield cur
            continue
        stack.append((cur, True))
        for ch in reversed(cur.children):
            stack.append((ch, False))


def tree_width(T: MergeTree) -> int:
    """Largest anchor count over all nodes."""
    return T.width


@dataclass
class Validation:
    ok: bool
    problems: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _check_node(node: _Node) -> list:
    out = []
    lab = node.label
    tag = f"node {node.nid}"
    if not lab.anchors <= set(lab.vertices):
        out.append(f"{tag}: anchors {sorted(lab.anchors - set(lab.vertices))} are not vertices")
    if isinstance(node, Leaf):
        if node.a == node.b:
            out.append(f"{tag}: leaf edge is a loop")
        if node.kind not in ("M", "F"):
            out.append(f"{tag}: leaf kind must be M or F")
        return out
    if isinstance(node, VertexCreate):
        if node.child is None:
            return out
        cl = node.child.label
        if node.vertex in cl.vertices:
            out.append(f"{tag}: created vertex {node.vertex} already present in child")
        if any(node.vertex in pair for pair, _ in lab.edges):
            out.append(f"{tag}: created vertex {node.vertex} is not isolated")
        prev, nxt = node.neighbors()
        for x in (prev, nxt):
            if x is not None and x not in cl.anchors:
                out.append(f"{tag}: slot neighbor {x} is not an anchor in the child")
        extra = lab.anchors - cl.anchors - {node.vertex}
        if extra:
            out.append(f"{tag}: anchors {sorted(extra)} appear without being anchors in the child")
        return out
    # merge
    L, R = node.left.label, node.right.label
    if L.edges & R.edges:
        out.append(f"{tag}: (a) children share edges {sorted(L.edges & R.edges)}")
    pairs = {}
    for pair, kind in L.edges | R.edges:
        if pair in pairs:
            out.append(f"{tag}: (a) pair {pair} receives two kinds")
        pairs[pair] = kind
    v1, v2 = set(L.vertices), set(R.vertices)
    if v1 | v2 != set(lab.vertices):
        out.append(f"{tag}: (b) vertex union differs from the label")
    shared = v1 & v2
    for x in sorted(shared):
        if x not in L.anchors or x not in R.anchors:
            out.append(f"{tag}: (c) shared vertex {x} is not an anchor on both sides")
    for x in sorted(lab.anchors):
        if (x in v1 and x not in L.anchors) or (x in v2 and x not in R.anchors):
            out.append(f"{tag}: (d) anchor {x} is not kept by the side holding it")
    verts = lab.vertices
    for x, y in zip(verts, verts[1:]):
        sx = (x in v1) - (x in v2)
        sy = (y in v1) - (y in v2)
        if sx * sy == -1:
            out.append(f"{tag}: (e) consecutive vertices {x} and {y} lie on opposite sides only")
    return out


def validate_merge_tree(T: MergeTree, target: Pattern) -> Validation:
    """Check every node against the pattern-operation rules and the root against ``target``."""
    problems = []
    for node in T.nodes:
        problems.extend(_check_node(node))
    root = T.root.label
    want = frozenset([(p, "M") for p in target.mandatory] + [(p, "F") for p in target.forbidden])
    if root.vertices != tuple(range(1, target.k + 1)):
        problems.append(f"root: vertices {list(root.vertices)} differ from 1..{target.k}")
    if root.edges != want:
        problems.append("root: decided pairs differ from the target pattern")
    return Validation(not problems, problems)


# --- textual form ----------------------------------------------------------

def dump_tree(T) -> str:
    """Indented s-expression form, one node per line.

    ``(leaf A B KIND (anchors ...))``, ``(create V (anchors ...) CHILD?)``
    and ``(merge (anchors ...) LEFT RIGHT)``.
    """
    root = T.root if isinstance(T, MergeTree) else T
    lines = []

    def anch(node):
        return "(anchors" + "".join(f" {x}" for x in sorted(node.anchors)) + ")"

    def walk(node, depth):
        pad = "  " * depth
        if isinstance(node, Leaf):
            lines.append(f"{pad}(leaf {node.a} {node.b} {node.kind} {anch(node)})")
            return
        if isinstance(node, VertexCreate):
            head = f"{pad}(create {node.vertex} {anch(node)}"
        else:
            head = f"{pad}(merge {anch(node)}"
        if not node.children:
            lines.append(head + ")")
            return
        lines.append(head)
        for ch in node.children:
            walk(ch, depth + 1)
        lines[-1] += ")"

    walk(root, 0)
    return "\n".join(lines) + "\n"


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_tree(text: str) -> MergeTree:
    """Inverse of :func:`dump_tree`."""
    toks = _TOKEN.findall(text)
    pos = 0

    def expect(t):
        nonlocal pos
        if toks[pos] != t:
            raise ValueError(f"expected {t!r}, got {toks[pos]!r}")
        pos += 1

    def anchors():
        nonlocal pos
        expect("(")
        expect("anchors")
        out = []
        while toks[pos] != ")":
            out.append(int(toks[pos]))
            pos += 1
        expect(")")
        return out

    def node():
        nonlocal pos
        expect("(")
        kind = toks[pos]
        pos += 1
        if kind == "leaf":
            a, b, c = int(toks[pos]), int(toks[pos + 1]), toks[pos + 2]
            pos += 3
            res = Leaf(a, b, c, anchors())
        elif kind == "create":
            v = int(toks[pos])
            pos += 1
            an = anchors()
            child = node() if toks[pos] == "(" else None
            res = VertexCreate(child, v, an)
        elif kind == "merge":
            an = anchors()
            left = node()
            right = node()
            res = Merge(left, right, an)
        else:
            raise ValueError(f"unknown node kind {kind!r}")
        expect(")")
        return res

    tree = MergeTree(node())
    if pos != len(toks):
        raise ValueError("trailing tokens after tree")
    return tree
