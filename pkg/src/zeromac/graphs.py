"""Confusability graphs, strong products and exact independence numbers.

Graphs are ``(vertices, adj)`` where ``adj[i]`` is a bitmask of the
neighbours of vertex ``i``.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import BudgetExceeded, ZeromacError
from .mac import Channel

Graph = tuple[list, list[int]]


def confusability_graph(ch: Channel) -> Graph:
    """Single-letter graph on X1: distinct inputs are adjacent when their outputs can coincide."""
    if len(ch.x2) != 1:
        raise ZeromacError("confusability graph needs a singleton X2 alphabet")
    b = ch.x2[0]
    verts = list(ch.x1)
    outs = [ch.letter_outputs(a, b) for a in verts]
    adj = [0] * len(verts)
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if outs[i] & outs[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return verts, adj


def strong_product(g: Graph, h: Graph) -> Graph:
    """Vertices are pairs; distinct pairs are adjacent when each coordinate is equal or adjacent."""
    gv, ga = g
    hv, ha = h
    verts = [_cat(a, b) for a in gv for b in hv]
    nh = len(hv)
    adj = [0] * len(verts)
    for i in range(len(gv)):
        close_i = ga[i] | (1 << i)
        for j in range(nh):
            close_j = ha[j] | (1 << j)
            me = i * nh + j
            mask = 0
            for k in range(len(gv)):
                if close_i >> k & 1:
                    for l in range(nh):
                        if close_j >> l & 1:
                            mask |= 1 << (k * nh + l)
            adj[me] = mask & ~(1 << me)
    return verts, adj


def _cat(a, b) -> tuple:
    a = a if isinstance(a, tuple) else (a,)
    b = b if isinstance(b, tuple) else (b,)
    return a + b


def strong_power(g: Graph, n: int) -> Graph:
    if n < 1:
        raise ZeromacError("power must be positive")
    verts, adj = g
    out: Graph = ([_cat(v, ()) for v in verts], list(adj))
    for _ in range(n - 1):
        out = strong_product(out, g)
    return out


def max_independent_set(
    adj: Sequence[int], limit: Optional[int] = None, budget: Optional[int] = None
) -> list[int]:
    """Largest independent set by branch and bound; stops early once ``limit`` is reached.

    Among optimal sets the search returns the first one found with the
    lowest-index-first branching order, so the result is deterministic.
    """
    n = len(adj)
    best: list[int] = []
    nodes = 0
    cap = n if limit is None else min(limit, n)

    def search(cand: int, chosen: list[int]):
        nonlocal best, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"independent-set search exceeded {budget} nodes")
        if len(chosen) > len(best):
            best = list(chosen)
        if len(best) >= cap:
            return
        while cand:
            if len(chosen) + cand.bit_count() <= len(best):
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            chosen.append(v)
            search(cand & ~adj[v], chosen)
            chosen.pop()
            if len(best) >= cap:
                return

    search((1 << n) - 1, [])
    return best


def independence_number(g: Graph, budget: Optional[int] = None) -> int:
    return len(max_independent_set(g[1], budget=budget))
