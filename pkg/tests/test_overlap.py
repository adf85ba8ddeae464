import math

import networkx as nx
import pytest

from zeromac import (
    ZeromacError,
    build_world,
    conditional_info,
    conditional_overlap_partition,
    factor_through,
    matching_cell,
    maximal_cv,
    nc_info,
    nc_maximal_cv,
    nc_partition,
    nonstochastic_info,
    overlap_partition,
    partition_join,
)
from zeromac.overlap import CommonVariable, Partition
from zeromac.uv import Range, product_world

from conftest import random_worlds

W3 = build_world(["X", "Y"], [("0", "0"), ("0", "1"), ("1", "1")])
IDENT = build_world(["X", "Y"], [("0", "0"), ("1", "1")])
CONST_Y = build_world(["X", "Y"], [("0", "c"), ("1", "c")])
EQ3 = build_world(["X1", "X2", "Y"], [("0", "0", "0"), ("1", "1", "1")])
PAIR_Y = build_world(
    ["X1", "X2", "Y"], [(a, b, a + b) for a in "01" for b in "01"]
)
CONST3 = build_world(["X1", "X2", "Y"], [(a, b, "c") for a in "01" for b in "01"])
FOUR = build_world(
    ["X", "Y", "W"], [("0", "0", "a"), ("1", "1", "a"), ("0", "0", "b"), ("1", "0", "b")]
)


def test_overlap_partition_examples():
    assert overlap_partition(W3, ["X"], ["Y"]).as_lists() == [[["0"], ["1"]]]
    assert overlap_partition(IDENT, ["X"], ["Y"]).as_lists() == [[["0"]], [["1"]]]
    assert len(overlap_partition(CONST_Y, ["X"], ["Y"])) == 1


def test_info_examples():
    assert nonstochastic_info(IDENT, ["X"], ["Y"]).bits == 1.0
    assert nonstochastic_info(W3, ["X"], ["Y"]).bits == 0.0
    five = build_world(["X", "Y"], [(str(i), str(i)) for i in range(5)])
    assert nonstochastic_info(five, ["X"], ["Y"]).bits == pytest.approx(math.log2(5), abs=1e-12)


def test_matching_cell():
    assert matching_cell(IDENT, ["X"], ["Y"], ("1",)) == overlap_partition(IDENT, ["X"], ["Y"]).label(("1",))
    assert matching_cell(W3, ["X"], ["Y"], ("0",)) == 0
    with pytest.raises(ZeromacError):
        matching_cell(W3, ["X"], ["Y"], ("7",))


def test_maximal_cv_examples():
    cv = maximal_cv(IDENT, ["X"], ["Y"])
    assert cv.label_count == 2
    assert cv.f_table == {("0",): 0, ("1",): 1} and cv.g_table == {("0",): 0, ("1",): 1}
    assert maximal_cv(CONST_Y, ["X"], ["Y"]).label_count == 1
    assert maximal_cv(W3, ["X"], ["Y"]).label_count == 1


def test_factor_through_examples():
    star = maximal_cv(IDENT, ["X"], ["Y"])
    const = CommonVariable(1, {k: 0 for k in star.f_table}, {k: 0 for k in star.g_table})
    assert set(factor_through(star, const).values()) == {0}
    assert factor_through(star, star) == {0: 0, 1: 1}
    assert factor_through(const, star) is None


def test_conditional_partition_examples():
    assert len(conditional_overlap_partition(FOUR, ["X"], ["Y"], {"W": "a"})) == 2
    assert len(conditional_overlap_partition(FOUR, ["X"], ["Y"], {"W": "b"})) == 1
    with pytest.raises(ZeromacError):
        conditional_overlap_partition(FOUR, ["X"], ["Y"], {"W": "c"})


def test_conditional_info_examples():
    assert conditional_info(FOUR, ["X"], ["Y"], ["W"]).bits == 0.0
    free_w = build_world(["X", "Y", "W"], [(a, a, w) for a in "01" for w in "01"])
    assert conditional_info(free_w, ["X"], ["Y"], ["W"]).bits == 1.0
    w_is_x = build_world(["X", "Y", "W"], [(a, b, a) for a in "01" for b in "01"])
    assert conditional_info(w_is_x, ["X"], ["Y"], ["W"]).bits == 0.0


def _part(points, groups):
    ground = Range(("Z",), tuple((p,) for p in points))
    return Partition.from_groups(ground, [[(p,) for p in g] for g in groups])


def test_join_examples():
    p = _part("0123", ["01", "23"])
    q = _part("0123", ["02", "13"])
    one = _part("0123", ["0123"])
    assert partition_join(p, p).as_lists() == p.as_lists()
    assert len(partition_join(p, q)) == 4
    assert partition_join(p, one).as_lists() == p.as_lists()


def test_nc_examples():
    assert len(nc_partition(EQ3, ["X1"], ["X2"], ["Y"])) == 2
    assert len(nc_partition(PAIR_Y, ["X1"], ["X2"], ["Y"])) == 4
    assert len(nc_partition(CONST3, ["X1"], ["X2"], ["Y"])) == 1
    assert nc_info(PAIR_Y, ["X1"], ["X2"], ["Y"]).bits == 2.0
    assert nc_info(EQ3, ["X1"], ["X2"], ["Y"]).bits == 1.0
    assert nc_info(CONST3, ["X1"], ["X2"], ["Y"]).bits == 0.0
    assert nc_maximal_cv(PAIR_Y, ["X1"], ["X2"], ["Y"]).label_count == 4
    assert nc_maximal_cv(CONST3, ["X1"], ["X2"], ["Y"]).label_count == 1
    assert nc_maximal_cv(EQ3, ["X1"], ["X2"], ["Y"]).label_count == 2


def _nx_components(w, a, b):
    """Overlap cells from graph connectivity: x ~ x' when some y has both in its range."""
    ia, ib = w.variables.index(a), w.variables.index(b)
    g = nx.Graph()
    by_y = {}
    for o in w.outcomes:
        g.add_node(o[ia])
        by_y.setdefault(o[ib], []).append(o[ia])
    for xs in by_y.values():
        nx.add_path(g, xs)
    return sorted(sorted(c) for c in nx.connected_components(g))


def test_overlap_partition_matches_graph_oracle():
    for w in random_worlds(11, 300):
        a, b = w.variables[:2]
        got = sorted(sorted(p[0] for p in cell) for cell in overlap_partition(w, [a], [b]).as_lists())
        assert got == _nx_components(w, a, b)


def test_cells_listed_by_smallest_member():
    for w in random_worlds(12, 100):
        cells = overlap_partition(w, [w.variables[0]], [w.variables[1]]).as_lists()
        assert [c[0] for c in cells] == sorted(c[0] for c in cells)
        assert all(c == sorted(c) for c in cells)


def test_conditional_info_is_min_over_slices():
    for w in random_worlds(13, 200, max_vars=4):
        if len(w.variables) < 3:
            continue
        a, b, c = w.variables[:3]
        values = sorted({o[2] for o in w.outcomes})
        expect = min(
            len(conditional_overlap_partition(w, [a], [b], {c: v})) for v in values
        )
        assert conditional_info(w, [a], [b], [c]).cells == expect


def test_partition_join_laws_small():
    p = _part("012345", ["03", "14", "25"])
    q = _part("012345", ["012", "345"])
    r = _part("012345", ["01", "2345"])
    pq = partition_join(p, q).as_lists()
    assert pq == partition_join(q, p).as_lists()
    assert (
        partition_join(partition_join(p, q), r).as_lists()
        == partition_join(p, partition_join(q, r)).as_lists()
    )
    with pytest.raises(ZeromacError):
        partition_join(p, _part("01", ["01"]))


def test_product_world_has_one_cell():
    w = product_world(["X", "Y"], [["0", "1", "2"], ["0", "1"]])
    assert nonstochastic_info(w, ["X"], ["Y"]).cells == 1
