"""Seeded random ordered graphs."""

from __future__ import annotations

import math
import random
from typing import Optional

from .graph import OrderedGraph

__all__ = ["pair_from_index", "gnm_edges", "gnp_edges", "random_graph"]


def pair_from_index(t: int) -> tuple:
    """The ``t``-th pair ``(u, v)``, ``u < v``, when pairs are listed by ``v`` then ``u``."""
    v = (1 + math.isqrt(1 + 8 * t)) // 2 + 1
    base = (v - 1) * (v - 2) // 2
    if base > t:  # guards the integer square-root boundary
        v -= 1
        base = (v - 1) * (v - 2) // 2
    return t - base + 1, v


def gnm_edges(n: int, m: int, rng: random.Random) -> list:
    """``m`` distinct pairs drawn uniformly, without listing all pairs."""
    total = n * (n - 1) // 2
    if m < 0 or m > total:
        raise ValueError(f"m = {m} is not in 0..{total} for n = {n}")
    return sorted(pair_from_index(t) for t in rng.sample(range(total), m))


def gnp_edges(n: int, p: float, rng: random.Random) -> list:
    """Each pair independently with probability ``p``; geometric skips, O(n + m) expected."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"density {p} is not in [0, 1]")
    if p == 0.0:
        return []
    if p == 1.0:
        return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    out = []
    lp = math.log(1.0 - p)
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log(1.0 - rng.random()) / lp)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            out.append((w + 1, v + 1))
    return sorted(out)


def random_graph(
    n: int,
    m: Optional[int] = None,
    p: Optional[float] = None,
    seed: int = 0,
    model: str = "gnm",
) -> OrderedGraph:
    """Seeded G(n, m) or G(n, p); the same arguments always give the same graph.

    >>> random_graph(4, m=6).m
    6
    """
    rng = random.Random(seed)
    if model == "gnm":
        if m is None:
            raise ValueError("the gnm model needs m")
        return OrderedGraph(n, gnm_edges(n, m, rng))
    if model == "gnp":
        if p is None:
            raise ValueError("the gnp model needs a density p")
        return OrderedGraph(n, gnp_edges(n, p, rng))
    raise ValueError(f"unknown model {model!r}; use gnm or gnp")
