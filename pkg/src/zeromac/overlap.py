"""Overlap partitions and the information measures built on them.

The overlap partition of [[X]] by [[X|Y]] is the set of connected components
of the hypergraph whose hyperedges are the conditional ranges [[X|y]].  Its
cell count is carried as an exact integer (:class:`Info`); the base-2 log is
only taken for presentation.

Cells are labelled 0..k-1 in order of their lexicographically smallest
member, so every table derived here is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .errors import InternalAssertion, ZeromacError
from .unionfind import DisjointSet
from .uv import Range, VarSpec, World, _disjoint, conditional_sets, marginal_range, restrict

__all__ = [
    "Info",
    "Partition",
    "CommonVariable",
    "NCCommonVariable",
    "overlap_partition",
    "nonstochastic_info",
    "matching_cell",
    "matching_labels",
    "maximal_cv",
    "factor_through",
    "conditional_overlap_partition",
    "conditional_info",
    "partition_join",
    "nc_partition",
    "nc_info",
    "nc_maximal_cv",
]


@dataclass(frozen=True, order=True)
class Info:
    """An information value held as the exact cell count behind it."""

    cells: int

    @property
    def bits(self) -> float:
        return math.log2(self.cells)

    def as_dict(self) -> dict:
        return {"cells": self.cells, "bits": self.bits}


@dataclass(frozen=True)
class Partition:
    ground: Range
    cells: tuple[tuple, ...]
    _label: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = {}
        for k, cell in enumerate(self.cells):
            for p in cell:
                labels[p] = k
        object.__setattr__(self, "_label", labels)

    @classmethod
    def from_groups(cls, ground: Range, groups) -> "Partition":
        cells = sorted((tuple(sorted(g)) for g in groups if g), key=lambda c: c[0])
        part = cls(ground, tuple(cells))
        if sorted(part._label) != list(ground.points) or sum(map(len, cells)) != len(ground):
            raise InternalAssertion("partition cells do not cover the ground set exactly")
        return part

    def __len__(self) -> int:
        return len(self.cells)

    def label(self, point) -> int:
        try:
            return self._label[tuple(point)]
        except KeyError:
            raise ZeromacError(f"point {point!r} is not in the partitioned range") from None

    def as_lists(self) -> list[list[list[str]]]:
        return [[list(p) for p in cell] for cell in self.cells]


@dataclass(frozen=True)
class CommonVariable:
    label_count: int
    f_table: dict  # point of [[X]] -> label
    g_table: dict  # point of [[Y]] -> label


@dataclass(frozen=True)
class NCCommonVariable:
    label_count: int
    f1_table: dict  # point of [[X1]] -> label
    f2_table: dict  # point of [[X2]] -> label
    g_table: dict   # point of [[Y]] -> (label1, label2)


def _components(points, hyperedges) -> list[list]:
    ds = DisjointSet(points)
    for edge in hyperedges:
        ds.union_all(edge)
    return ds.groups()


def overlap_partition(w: World, target: VarSpec, conditioner: VarSpec) -> Partition:
    target, conditioner = _disjoint(w, target, conditioner)
    ground = marginal_range(w, target)
    sets = conditional_sets(w, target, conditioner)
    return Partition.from_groups(ground, _components(ground.points, sets.values()))


def nonstochastic_info(w: World, a: VarSpec, b: VarSpec) -> Info:
    return Info(len(overlap_partition(w, a, b)))


def _as_point(w: World, names: tuple, y) -> tuple:
    if isinstance(y, Mapping):
        return tuple(y[v] for v in names)
    if isinstance(y, str):
        return (y,)
    return tuple(y)


def matching_labels(w: World, target: VarSpec, conditioner: VarSpec) -> dict:
    """Map every conditioner point y to the label of the [[X|Y]]*-cell it pins down."""
    part = overlap_partition(w, target, conditioner)
    out = {}
    for y, xs in conditional_sets(w, target, conditioner).items():
        labels = {part.label(x) for x in xs}
        if len(labels) != 1:
            raise InternalAssertion(f"conditional range of {y!r} straddles overlap cells")
        out[y] = labels.pop()
    return dict(sorted(out.items()))


def matching_cell(w: World, target: VarSpec, conditioner: VarSpec, y) -> int:
    target, conditioner = _disjoint(w, target, conditioner)
    labels = matching_labels(w, target, conditioner)
    point = _as_point(w, conditioner, y)
    if point not in labels:
        raise ZeromacError(f"inadmissible condition {point!r}")
    return labels[point]


def maximal_cv(w: World, a: VarSpec, b: VarSpec) -> CommonVariable:
    part = overlap_partition(w, a, b)
    f_table = {x: part.label(x) for x in part.ground.points}
    g_table = matching_labels(w, a, b)
    return CommonVariable(len(part), f_table, g_table)


def factor_through(z_star, z) -> Optional[dict]:
    """Return ``h`` with ``z = h(z_star)`` on every table, or None if none exists.

    Works for :class:`CommonVariable` and :class:`NCCommonVariable` alike.
    """
    tables = _tables(z_star)
    other = _tables(z)
    if len(tables) != len(other) or any(t.keys() != o.keys() for t, o in zip(tables, other)):
        raise ZeromacError("common variables are defined over different ranges")
    h: dict = {}
    for t, o in zip(tables, other):
        for point, label in t.items():
            target = o[point]
            if h.setdefault(label, target) != target:
                return None
    return h


def _tables(z):
    # an NC variable is determined by its value on [[Y]]
    if isinstance(z, NCCommonVariable):
        return (z.g_table,)
    return (z.f_table, z.g_table)


def conditional_overlap_partition(
    w: World, target: VarSpec, conditioner: VarSpec, given: Mapping[str, str]
) -> Partition:
    """Overlap partition of [[X|w]] induced by the conditional ranges [[X|y,w]]."""
    _disjoint(w, target, conditioner, tuple(given))
    return overlap_partition(restrict(w, given), target, conditioner)


def conditional_info(w: World, a: VarSpec, b: VarSpec, c: VarSpec) -> Info:
    """Worst case over realized values of ``c`` of the conditional overlap cell count."""
    a, b, c = _disjoint(w, a, b, c)
    aidx, bidx, cidx = w.indices(a), w.indices(b), w.indices(c)
    slices: dict = {}
    for o in w.outcomes:
        s = slices.setdefault(tuple(o[i] for i in cidx), {})
        s.setdefault(tuple(o[i] for i in bidx), set()).add(tuple(o[i] for i in aidx))
    counts = []
    for by_y in slices.values():
        points = set().union(*by_y.values())
        counts.append(len(_components(points, by_y.values())))
    return Info(min(counts))


def partition_join(p: Partition, q: Partition) -> Partition:
    """Common refinement: nonempty intersections of a p-cell with a q-cell."""
    if p.ground != q.ground:
        raise ZeromacError("cannot join partitions of different ground sets")
    groups: dict = {}
    for point in p.ground.points:
        groups.setdefault((p.label(point), q.label(point)), []).append(point)
    return Partition.from_groups(p.ground, groups.values())


def nc_partition(w: World, x1: VarSpec, x2: VarSpec, y: VarSpec) -> Partition:
    """Partition of [[X1,X2,Y]] (laid out as x1 + x2 + y) into NC-connected classes."""
    x1, x2, y = _disjoint(w, x1, x2, y)
    p1 = overlap_partition(w, x1, y)
    p2 = overlap_partition(w, x2, y)
    i1, i2, iy = w.indices(x1), w.indices(x2), w.indices(y)
    groups: dict = {}
    for o in w.outcomes:
        a = tuple(o[i] for i in i1)
        b = tuple(o[i] for i in i2)
        point = a + b + tuple(o[i] for i in iy)
        groups.setdefault((p1.label(a), p2.label(b)), set()).add(point)
    ground = Range(x1 + x2 + y, tuple(sorted(set().union(*groups.values()))))
    return Partition.from_groups(ground, groups.values())


def _y_join(w: World, x1, x2, y) -> Partition:
    return partition_join(overlap_partition(w, y, x1), overlap_partition(w, y, x2))


def nc_info(w: World, x1: VarSpec, x2: VarSpec, y: VarSpec) -> Info:
    x1, x2, y = _disjoint(w, x1, x2, y)
    return Info(len(_y_join(w, x1, x2, y)))


def _cell_matching(w: World, x, y) -> dict:
    """Map labels of [[Y|X]]* to the matching labels of [[X|Y]]*."""
    px = overlap_partition(w, x, y)
    py = overlap_partition(w, y, x)
    xi, yi = w.indices(x), w.indices(y)
    out: dict = {}
    for o in w.outcomes:
        ly = py.label(tuple(o[i] for i in yi))
        lx = px.label(tuple(o[i] for i in xi))
        if out.setdefault(ly, lx) != lx:
            raise InternalAssertion("overlap partitions fail to match")
    return out


def nc_maximal_cv(w: World, x1: VarSpec, x2: VarSpec, y: VarSpec) -> NCCommonVariable:
    x1, x2, y = _disjoint(w, x1, x2, y)
    p1 = overlap_partition(w, x1, y)
    p2 = overlap_partition(w, x2, y)
    q1 = overlap_partition(w, y, x1)
    q2 = overlap_partition(w, y, x2)
    join = partition_join(q1, q2)
    m1 = _cell_matching(w, x1, y)
    m2 = _cell_matching(w, x2, y)
    f1 = {x: p1.label(x) for x in p1.ground.points}
    f2 = {x: p2.label(x) for x in p2.ground.points}
    g = {pt: (m1[q1.label(pt)], m2[q2.label(pt)]) for pt in join.ground.points}
    # each join cell must carry exactly one label pair, and admissible triples must agree
    per_cell = {join.label(pt): g[pt] for pt in join.ground.points}
    if len(set(per_cell.values())) != len(join):
        raise InternalAssertion("join cells and label pairs are not in bijection")
    i1, i2, iy = w.indices(x1), w.indices(x2), w.indices(y)
    for o in w.outcomes:
        a, b, c = (tuple(o[i] for i in idx) for idx in (i1, i2, iy))
        if (f1[a], f2[b]) != g[c]:
            raise InternalAssertion(f"NC common variable inconsistent at {o!r}")
    return NCCommonVariable(len(join), f1, f2, g)
