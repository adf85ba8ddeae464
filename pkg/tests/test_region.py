import pytest

from zeromac import (
    BudgetExceeded,
    CooperationStructure,
    ZeromacError,
    build_channel,
    capacity_region,
    confusability_independence_number,
    enumerate_structures,
    oracle_region,
    rate_cuboid,
    single_user_capacity,
    synthesize_code,
    verify_zero_error,
)
from zeromac.channels import CORPUS, binary_adder, constant, identity, pentagon
from zeromac.region import Bounds, antichain, downward_closure, oracle_feasible

ADDER = binary_adder()
ADDER_N1 = {(1, 1, 2), (1, 2, 1), (3, 1, 1)}


def _s(rows):
    return CooperationStructure.make(1, rows)


def test_rate_cuboid_examples():
    three = _s([("u1", [("0",)], [("0",)]), ("u2", [("0",)], [("1",)]), ("u3", [("1",)], [("1",)])])
    assert rate_cuboid(ADDER, 1, three).mu == (3, 1, 1)
    assert rate_cuboid(ADDER, 1, _s([("u", [("0",), ("1",)], [("0",)])])).mu == (1, 2, 1)
    full = _s([("u", [("0",), ("1",)], [("0",), ("1",)])])
    assert rate_cuboid(ADDER, 1, full).mu == (1, 1, 1)


def test_enumeration_counts():
    assert len(list(enumerate_structures(ADDER, 1, Bounds(max_u=1)))) == 9
    assert len(list(enumerate_structures(pentagon(), 1, Bounds(max_u=1)))) == 31
    with pytest.raises(ZeromacError):
        Bounds(max_u=0)


def test_enumeration_has_no_duplicates():
    seen = set()
    for s in enumerate_structures(ADDER, 1, Bounds(max_u=3)):
        key = frozenset((e.a, e.b) for e in s.entries)
        assert key not in seen
        seen.add(key)


def test_adder_region_n1():
    region = capacity_region(ADDER, 1)
    assert set(region.maximal) == ADDER_N1
    assert (2, 1, 1) in region
    assert (1, 2, 2) not in region and (4, 1, 1) not in region


def test_constant_channel_region():
    assert capacity_region(constant(), 1).maximal == ((1, 1, 1),)
    assert oracle_region(constant(), 1).maximal == ((1, 1, 1),)


def test_identity_region_contains_full_pair():
    assert (1, 2, 2) in capacity_region(identity(), 1)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_reduced_equals_full_at_n1(name):
    ch = CORPUS[name]()
    full = capacity_region(ch, 1, method="full")
    reduced = capacity_region(ch, 1, method="reduced")
    assert full.maximal == reduced.maximal


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_region_witnesses_roundtrip(name):
    ch = CORPUS[name]()
    region = capacity_region(ch, 1)
    for mu, s in region.witnesses.items():
        r = synthesize_code(ch, 1, s)
        assert r.achieved == mu
        assert verify_zero_error(ch, r.code.spec, r.code).ok


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        capacity_region(ADDER, 2, Bounds(budget=5), method="full")


def test_bad_method_and_blocklength():
    with pytest.raises(ZeromacError):
        capacity_region(ADDER, 1, method="nope")
    with pytest.raises(ZeromacError):
        capacity_region(ADDER, 0)
    with pytest.raises(ZeromacError):
        oracle_region(ADDER, 0)


def test_oracle_feasible_codes():
    assert oracle_feasible(ADDER, 1, (3, 1, 1)) is not None
    assert oracle_feasible(ADDER, 1, (1, 2, 2)) is None


def test_threads_do_not_change_results():
    a = capacity_region(ADDER, 2, threads=1)
    b = capacity_region(ADDER, 2, threads=4)
    assert a.maximal == b.maximal
    assert oracle_region(ADDER, 1, threads=1).checked == oracle_region(ADDER, 1, threads=3).checked


def test_closure_helpers():
    assert downward_closure([(1, 1, 2)]) == {(1, 1, 1), (1, 1, 2)}
    assert antichain([(1, 1, 1), (1, 1, 2), (2, 1, 1)]) == ((1, 1, 2), (2, 1, 1))


def test_single_user_pentagon():
    assert single_user_capacity(pentagon(), 1).cells == 2
    r = single_user_capacity(pentagon(), 2)
    assert r.cells == 5 and len(r.codebook) == 5
    assert r.bits_per_use == pytest.approx(1.160964, abs=1e-6)


@pytest.mark.parametrize("q, n", [(2, 1), (3, 1), (3, 2)])
def test_single_user_noiseless(q, n):
    xs = [str(i) for i in range(q)]
    ch = build_channel(xs, ["0"], ["0"], xs, [(x, "0", "0", x) for x in xs])
    assert single_user_capacity(ch, n).cells == q**n
    assert confusability_independence_number(ch, n) == q**n


def test_single_user_needs_singleton_x2():
    with pytest.raises(ZeromacError):
        single_user_capacity(ADDER, 1)
