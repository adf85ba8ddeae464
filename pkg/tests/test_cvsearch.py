import pytest

from zeromac import build_world
from zeromac.cvsearch import (
    consistent_partitions,
    enumerate_cvs,
    enumerate_nc_cvs,
    unrelated_cv_label_counts,
)

from conftest import random_worlds

BELL = [1, 1, 2, 5, 15, 52, 203]


@pytest.mark.parametrize("n", range(7))
def test_unconstrained_counts_are_bell_numbers(n):
    got = list(consistent_partitions(n, []))
    assert len(got) == BELL[n]
    assert len({tuple(r) for r in got}) == BELL[n]


def test_groups_are_kept_together():
    got = list(consistent_partitions(3, [[0, 1]]))
    assert got == [[0, 0, 0], [0, 0, 1]]
    assert list(consistent_partitions(4, [[0, 1], [1, 2], [2, 3]])) == [[0, 0, 0, 0]]


def test_every_enumerated_cv_is_a_cv():
    for w in random_worlds(21, 150, max_vars=3, max_symbols=3):
        a, b = w.variables[:2]
        ia, ib = w.variables.index(a), w.variables.index(b)
        for cv in enumerate_cvs(w, [a], [b]):
            for o in w.outcomes:
                assert cv.f_table[(o[ia],)] == cv.g_table[(o[ib],)]


def test_identity_world_cv_count():
    w = build_world(["X", "Y"], [(s, s) for s in "012"])
    assert len(list(enumerate_cvs(w, ["X"], ["Y"]))) == BELL[3]


def test_nc_cvs_are_consistent():
    for w in random_worlds(22, 80, max_vars=3, max_symbols=3):
        if len(w.variables) < 3:
            continue
        for cv in enumerate_nc_cvs(w, ["V0"], ["V1"], ["V2"]):
            for o in w.outcomes:
                assert cv.g_table[(o[2],)] == (cv.f1_table[(o[0],)], cv.f2_table[(o[1],)])


def test_unrelated_label_counts_include_constant():
    w = build_world(["X", "Y", "W"], [(a, a, c) for a in "01" for c in "01"])
    counts = list(unrelated_cv_label_counts(w, ["X"], ["Y"], ["W"]))
    assert 1 in counts and max(counts) == 2
