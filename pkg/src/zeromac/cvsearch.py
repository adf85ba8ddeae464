"""Brute-force enumeration of common variables, used as an oracle.

Every common variable is determined, up to relabelling, by the set partition
its ``f`` induces on a range.  Partitions are enumerated as restricted-growth
strings; a branch is cut as soon as it splits a set that must share a label.
Only meant for ranges of a handful of points.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .overlap import CommonVariable, NCCommonVariable
from .uv import VarSpec, World, _disjoint, conditional_sets, marginal_range


def consistent_partitions(n: int, groups: Iterable[Iterable[int]]) -> Iterator[list[int]]:
    """Yield restricted-growth strings over ``n`` items that keep each group in one block."""
    anchors: list[list[int]] = [[] for _ in range(n)]
    for g in groups:
        g = sorted(set(g))
        for j in g[1:]:
            anchors[j].append(g[0])

    labels = [0] * n

    def extend(i: int, top: int):
        if i == n:
            yield list(labels)
            return
        forced = {labels[a] for a in anchors[i]}
        if len(forced) > 1:
            return
        choices = forced if forced else range(top + 1)
        for lab in choices:
            labels[i] = lab
            yield from extend(i + 1, max(top, lab + 1))

    if n == 0:
        yield []
        return
    yield from extend(0, 0)


def _groups(points: Sequence, sets: dict) -> list[list[int]]:
    index = {p: i for i, p in enumerate(points)}
    return [[index[p] for p in xs] for xs in sets.values()]


def enumerate_cvs(w: World, a: VarSpec, b: VarSpec) -> Iterator[CommonVariable]:
    """All common variables Z = f(A) = g(B), one per induced partition of [[A]]."""
    a, b = _disjoint(w, a, b)
    points = marginal_range(w, a).points
    sets = conditional_sets(w, a, b)
    index = {p: i for i, p in enumerate(points)}
    for rgs in consistent_partitions(len(points), _groups(points, sets)):
        f = {p: rgs[i] for i, p in enumerate(points)}
        g = {y: rgs[index[next(iter(xs))]] for y, xs in sets.items()}
        yield CommonVariable(max(rgs) + 1, f, g)


def enumerate_nc_cvs(w: World, x1: VarSpec, x2: VarSpec, y: VarSpec) -> Iterator[NCCommonVariable]:
    """All common variables of the form (f1(X1), f2(X2)) = g(Y)."""
    x1, x2, y = _disjoint(w, x1, x2, y)
    pts1 = marginal_range(w, x1).points
    pts2 = marginal_range(w, x2).points
    sets1 = conditional_sets(w, x1, y)
    sets2 = conditional_sets(w, x2, y)
    parts1 = list(consistent_partitions(len(pts1), _groups(pts1, sets1)))
    parts2 = list(consistent_partitions(len(pts2), _groups(pts2, sets2)))
    idx1 = {p: i for i, p in enumerate(pts1)}
    idx2 = {p: i for i, p in enumerate(pts2)}
    for r1 in parts1:
        for r2 in parts2:
            g = {
                yy: (r1[idx1[next(iter(sets1[yy]))]], r2[idx2[next(iter(sets2[yy]))]])
                for yy in sets1
            }
            yield NCCommonVariable(
                len(set(g.values())),
                {p: r1[i] for i, p in enumerate(pts1)},
                {p: r2[i] for i, p in enumerate(pts2)},
                g,
            )


def unrelated_cv_label_counts(w: World, a: VarSpec, b: VarSpec, c: VarSpec) -> Iterator[int]:
    """Label counts of all cv's Z = f(A, C) = g(B, C) whose range is unrelated with C."""
    a, b, c = _disjoint(w, a, b, c)
    ia, ib, ic = w.indices(a), w.indices(b), w.indices(c)
    sets: dict = {}
    for o in w.outcomes:
        xw = tuple(o[i] for i in ia) + tuple(o[i] for i in ic)
        yw = tuple(o[i] for i in ib) + tuple(o[i] for i in ic)
        sets.setdefault(yw, set()).add(xw)
    points = sorted(set().union(*sets.values()))
    cvals = sorted({p[len(a):] for p in points})
    for rgs in consistent_partitions(len(points), _groups(points, sets)):
        seen: dict = {}
        for i, p in enumerate(points):
            seen.setdefault(rgs[i], set()).add(p[len(a):])
        # unrelated with C: every label co-occurs with every value of C
        if all(len(cs) == len(cvals) for cs in seen.values()):
            yield len(seen)
