"""Zero-error n-capacity regions.

Two independent routes:

* :func:`capacity_region` takes the union of the rate cuboids
  (2^I*[U;Y], 2^I*[X1;Y|U], 2^I*[X2;Y|U]) over cooperation structures.
* :func:`oracle_region` searches encoder tables directly and keeps the message
  triples whose output-sequence sets can be made pairwise disjoint.

Regions are sets of integer message-count triples (mu0, mu1, mu2), closed
downward; rates are log2(mu)/n and never enter the comparisons.

The ``reduced`` structure search rests on a dominance argument.  Keeping one
u per [[U|Y]]*-cell keeps the first count and can only raise the minima;
shrinking A_u (or B_u) to one point per conditional cell keeps that count and
can only split the other partitions further.  So every cuboid is dominated by
one whose pairs are *clean* (every output pins down both inputs), whose
output sets are pairwise disjoint, and whose set sizes are uniform.  The
region is then given by the largest such family for each size pair, a
maximum independent set in the output-conflict graph.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceeded, InternalAssertion, ZeromacError
from .graphs import confusability_graph, max_independent_set, strong_power
from .mac import (
    DEFAULT_WORLD_CAP,
    Channel,
    Code,
    CooperationStructure,
    MessageSpec,
    build_structure_world,
    check_structure_markov,
    seq_vars,
)
from .overlap import conditional_info, nonstochastic_info
from .codec import oracle_decodable

DEFAULT_BUDGET = 2_000_000

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class Bounds:
    max_u: Optional[int] = None  # default |X1^n| * |X2^n|
    max_set_size: Optional[int] = None  # default: no limit
    budget: int = DEFAULT_BUDGET
    world_cap: int = DEFAULT_WORLD_CAP

    def __post_init__(self):
        for name in ("max_u", "max_set_size"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ZeromacError(f"{name} must be positive")
        if self.budget < 1 or self.world_cap < 1:
            raise ZeromacError("budget and world cap must be positive")


@dataclass(frozen=True)
class RateCuboid:
    mu: Triple
    n: int
    structure: CooperationStructure


@dataclass(frozen=True)
class RateRegion:
    n: int
    maximal: tuple[Triple, ...]
    witnesses: dict = field(default_factory=dict)  # maximal triple -> structure or Code
    method: str = ""
    checked: Optional[dict] = None  # oracle only: triple -> achievable

    @property
    def points(self) -> tuple[Triple, ...]:
        return tuple(sorted(downward_closure(self.maximal)))

    def __contains__(self, t) -> bool:
        return any(dominates(m, tuple(t)) for m in self.maximal)

    def witness_for(self, t) -> Optional[Triple]:
        """The first maximal point (in sorted order) dominating ``t``."""
        for m in self.maximal:
            if dominates(m, tuple(t)):
                return m
        return None


def dominates(big: Sequence[int], small: Sequence[int]) -> bool:
    return all(b >= s for b, s in zip(big, small))


def downward_closure(triples) -> set:
    out: set = set()
    for a, b, c in triples:
        out.update(itertools.product(range(1, a + 1), range(1, b + 1), range(1, c + 1)))
    return out


def antichain(triples) -> tuple[Triple, ...]:
    ts = sorted(set(triples))
    return tuple(t for t in ts if not any(o != t and dominates(o, t) for o in ts))


# -- cuboids -----------------------------------------------------------------


def rate_cuboid(
    ch: Channel, n: int, s: CooperationStructure, cap: int = DEFAULT_WORLD_CAP
) -> RateCuboid:
    w = build_structure_world(ch, n, s, cap)
    if not check_structure_markov(w):
        raise InternalAssertion("structure world violates a Markov uncertainty chain")
    x1, x2, y = seq_vars("X1", n), seq_vars("X2", n), seq_vars("Y", n)
    mu = (
        nonstochastic_info(w, "U", y).cells,
        conditional_info(w, x1, y, "U").cells,
        conditional_info(w, x2, y, "U").cells,
    )
    return RateCuboid(mu, n, s)


@dataclass(frozen=True)
class _PairInfo:
    outputs: int  # bitmask over the output sequences
    k1: int
    k2: int


class _Pairs:
    """Per-(A, B) quantities; a family's cuboid only needs these and output overlaps."""

    def __init__(self, ch: Channel, n: int, cap: int):
        self.ch, self.n, self.cap = ch, n, cap
        self.s1 = ch.inputs1(n)
        self.s2 = ch.inputs2(n)
        ys = sorted({yy for a in self.s1 for b in self.s2 for yy in ch.outputs(a, b)})
        self.y_index = {yy: i for i, yy in enumerate(ys)}
        self._cache: dict = {}
        self.evaluations = 0

    def info(self, a: tuple[int, ...], b: tuple[int, ...]) -> _PairInfo:
        key = (a, b)
        hit = self._cache.get(key)
        if hit is None:
            self.evaluations += 1
            s = self.structure([(a, b)])
            w = build_structure_world(self.ch, self.n, s, self.cap)
            x1, x2, y = seq_vars("X1", self.n), seq_vars("X2", self.n), seq_vars("Y", self.n)
            mask = 0
            for yy in _column_points(w, y):
                mask |= 1 << self.y_index[yy]
            hit = _PairInfo(
                mask,
                conditional_info(w, x1, y, "U").cells,
                conditional_info(w, x2, y, "U").cells,
            )
            self._cache[key] = hit
        return hit

    def clean(self, a, b) -> bool:
        p = self.info(a, b)
        return p.k1 == len(a) and p.k2 == len(b)

    def structure(self, pairs) -> CooperationStructure:
        width = len(str(len(pairs)))
        return CooperationStructure.make(
            self.n,
            [
                (f"u{k:0{width}d}", [self.s1[i] for i in a], [self.s2[j] for j in b])
                for k, (a, b) in enumerate(pairs, start=1)
            ],
        )


def _column_points(w, names) -> set:
    idx = w.indices(names)
    return {tuple(o[i] for i in idx) for o in w.outcomes}


def _family_cuboid(infos: Sequence[_PairInfo]) -> Triple:
    # [[U|Y]]* cells: u's joined whenever their output sets meet
    groups: list[int] = []
    for p in infos:
        merged = p.outputs
        rest = []
        for g in groups:
            if g & merged:
                merged |= g
            else:
                rest.append(g)
        rest.append(merged)
        groups = rest
    return (len(groups), min(p.k1 for p in infos), min(p.k2 for p in infos))


# -- structure enumeration ------------------------------------------------------


def _max_u(ch: Channel, n: int, bounds: Bounds) -> int:
    if bounds.max_u is not None:
        return bounds.max_u
    return len(ch.x1) ** n * len(ch.x2) ** n


def _subset_count(size: int, limit: Optional[int]) -> int:
    top = size if limit is None else min(size, limit)
    return sum(math.comb(size, k) for k in range(1, top + 1))


def structure_census(ch: Channel, n: int, bounds: Bounds) -> int:
    """Number of structures :func:`enumerate_structures` would yield."""
    pairs = _subset_count(len(ch.x1) ** n, bounds.max_set_size) * _subset_count(
        len(ch.x2) ** n, bounds.max_set_size
    )
    return sum(math.comb(pairs, k) for k in range(1, min(pairs, _max_u(ch, n, bounds)) + 1))


def _index_subsets(size: int, limit: Optional[int]) -> list[tuple[int, ...]]:
    top = size if limit is None else min(size, limit)
    return [c for k in range(1, top + 1) for c in itertools.combinations(range(size), k)]


def _candidate_pairs(ch: Channel, n: int, bounds: Bounds) -> list[tuple]:
    subs1 = _index_subsets(len(ch.x1) ** n, bounds.max_set_size)
    subs2 = _index_subsets(len(ch.x2) ** n, bounds.max_set_size)
    return [(a, b) for a in subs1 for b in subs2]


def _check_census(ch: Channel, n: int, bounds: Bounds) -> None:
    if n < 1:
        raise ZeromacError("blocklength must be positive")
    census = structure_census(ch, n, bounds)
    if census > bounds.budget:
        raise BudgetExceeded(
            f"{census} structures at n={n} exceed the budget of {bounds.budget}"
        )


def enumerate_structures(
    ch: Channel, n: int, bounds: Optional[Bounds] = None
) -> Iterator[CooperationStructure]:
    """Every family of at most ``max_u`` distinct (A, B) pairs, once each, in canonical order."""
    bounds = bounds or Bounds()
    _check_census(ch, n, bounds)
    pairs = _candidate_pairs(ch, n, bounds)
    helper = _Pairs(ch, n, bounds.world_cap)
    for k in range(1, min(len(pairs), _max_u(ch, n, bounds)) + 1):
        for combo in itertools.combinations(range(len(pairs)), k):
            yield helper.structure([pairs[i] for i in combo])


def _full_region(ch: Channel, n: int, bounds: Bounds, threads: int) -> tuple[dict, int]:
    _check_census(ch, n, bounds)
    pairs = _candidate_pairs(ch, n, bounds)
    helper = _Pairs(ch, n, bounds.world_cap)
    infos = [helper.info(a, b) for a, b in pairs]
    max_u = min(len(pairs), _max_u(ch, n, bounds))
    tasks = [(k, first) for k in range(1, max_u + 1) for first in range(len(pairs) - k + 1)]

    def run(task):
        k, first = task
        found: dict = {}
        for rest in itertools.combinations(range(first + 1, len(pairs)), k - 1):
            combo = (first,) + rest
            found.setdefault(_family_cuboid([infos[i] for i in combo]), combo)
        return found

    cuboids: dict = {}
    for found in _map(run, tasks, threads):
        for mu, combo in found.items():
            cuboids.setdefault(mu, combo)
    best = antichain(cuboids)
    witnesses = {mu: helper.structure([pairs[i] for i in cuboids[mu]]) for mu in best}
    return witnesses, len(cuboids)


def clean_pairs(ch: Channel, n: int, bounds: Optional[Bounds] = None) -> list[tuple]:
    """All (A, B) index pairs in which every output sequence pins down both inputs.

    Cleanliness is inherited by subsets, so both searches prune at the first
    unclean set.
    """
    bounds = bounds or Bounds()
    helper = _Pairs(ch, n, bounds.world_cap)
    return _clean_pairs(helper, bounds)


def _clean_pairs(helper: _Pairs, bounds: Bounds) -> list[tuple]:
    n1, n2 = len(helper.s1), len(helper.s2)
    limit = bounds.max_set_size or max(n1, n2)
    out: list = []

    def grow(current: tuple, size: int, ok) -> Iterator[tuple]:
        for i in range((current[-1] + 1) if current else 0, size):
            nxt = current + (i,)
            if len(nxt) <= limit and ok(nxt):
                if helper.evaluations > bounds.budget:
                    raise BudgetExceeded(f"clean-pair search exceeded {bounds.budget} evaluations")
                yield nxt
                yield from grow(nxt, size, ok)

    singles = [(a,) for a in range(n1)]
    for b in grow((), n2, lambda b: any(helper.clean(a, b) for a in singles)):
        for a in grow((), n1, lambda a, b=b: helper.clean(a, b)):
            out.append((a, b))
    return sorted(out, key=lambda p: (len(p[0]), len(p[1]), p))


def _reduced_region(ch: Channel, n: int, bounds: Bounds, threads: int) -> tuple[dict, int]:
    helper = _Pairs(ch, n, bounds.world_cap)
    pairs = _clean_pairs(helper, bounds)
    by_size: dict = {}
    for a, b in pairs:
        by_size.setdefault((len(a), len(b)), []).append((a, b))
    max_u = _max_u(ch, n, bounds)

    def run(size):
        group = by_size[size]
        masks = [helper.info(a, b).outputs for a, b in group]
        adj = [
            sum(1 << j for j, m in enumerate(masks) if j != i and m & mi)
            for i, mi in enumerate(masks)
        ]
        chosen = max_independent_set(adj, limit=max_u, budget=bounds.budget)
        return (len(chosen),) + size, [group[i] for i in chosen]

    cuboids = dict(_map(run, sorted(by_size), threads))
    for mu, fam in cuboids.items():
        if _family_cuboid([helper.info(a, b) for a, b in fam]) != mu:
            raise InternalAssertion(f"packing for {mu} does not realise its cuboid")
    best = antichain(cuboids)
    return {mu: helper.structure(cuboids[mu]) for mu in best}, len(pairs)


def capacity_region(
    ch: Channel,
    n: int,
    bounds: Optional[Bounds] = None,
    method: str = "auto",
    threads: int = 1,
) -> RateRegion:
    """Union of rate cuboids over cooperation structures, closed downward.

    ``method`` is ``"full"`` (every structure within the bounds), ``"reduced"``
    (dominating structures only, see the module docstring) or ``"auto"``
    (full when the census fits the budget).
    """
    bounds = bounds or Bounds()
    if n < 1:
        raise ZeromacError("blocklength must be positive")
    if method == "auto":
        method = "full" if structure_census(ch, n, bounds) <= bounds.budget else "reduced"
    if method == "full":
        witnesses, _ = _full_region(ch, n, bounds, threads)
    elif method == "reduced":
        witnesses, _ = _reduced_region(ch, n, bounds, threads)
    else:
        raise ZeromacError(f"unknown region method {method!r}")
    return RateRegion(n, tuple(sorted(witnesses)), witnesses, method)


# -- decoder-independent oracle ---------------------------------------------------


def _map(fn, items, threads: int):
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


class _CodeSearch:
    def __init__(self, ch: Channel, n: int, budget: int):
        self.ch, self.n, self.budget = ch, n, budget
        self.s1 = ch.inputs1(n)
        self.s2 = ch.inputs2(n)
        outs = {(i, j): ch.outputs(a, b) for i, a in enumerate(self.s1) for j, b in enumerate(self.s2)}
        ys = sorted(set().union(*outs.values()))
        index = {yy: k for k, yy in enumerate(ys)}
        self.n_outputs = len(ys)
        self.mask = {key: sum(1 << index[yy] for yy in v) for key, v in outs.items()}
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"code search exceeded {self.budget} nodes")

    def blocks(self, mu1: int, mu2: int) -> list[tuple]:
        """Codebook pairs (A, B) for one common message whose message pairs never collide."""
        out = []
        for b in itertools.combinations(range(len(self.s2)), mu2):
            def grow(a: tuple, used: int):
                self._tick()
                if len(a) == mu1:
                    out.append((a, b, used))
                    return
                for i in range((a[-1] + 1) if a else 0, len(self.s1)):
                    row = [self.mask[i, j] for j in b]
                    total = 0
                    ok = True
                    for m in row:
                        if m & (total | used):
                            ok = False
                            break
                        total |= m
                    if ok:
                        grow(a + (i,), used | total)

            grow((), 0)
        return out

    def find(self, mu: Triple) -> Optional[list[tuple]]:
        mu0, mu1, mu2 = mu
        blocks = self.blocks(mu1, mu2)

        def pack(chosen: list, start: int, used: int):
            self._tick()
            if len(chosen) == mu0:
                return list(chosen)
            if len(chosen) + (len(blocks) - start) < mu0:
                return None
            for k in range(start, len(blocks)):
                if blocks[k][2] & used:
                    continue
                chosen.append(blocks[k])
                got = pack(chosen, k + 1, used | blocks[k][2])
                chosen.pop()
                if got is not None:
                    return got
            return None

        return pack([], 0, 0)

    def code(self, mu: Triple, blocks: list[tuple]) -> Code:
        g1, g2 = {}, {}
        for m0, (a, b, _) in enumerate(blocks, start=1):
            for m, i in enumerate(a, start=1):
                g1[m0, m] = self.s1[i]
            for m, j in enumerate(b, start=1):
                g2[m0, m] = self.s2[j]
        return Code(self.n, mu, g1, g2)


def oracle_feasible(ch: Channel, n: int, mu: Triple, budget: int = DEFAULT_BUDGET) -> Optional[Code]:
    """A zero-error code with message counts ``mu``, or None if none exists.

    Codewords within a message index are searched as sets (their order is a
    relabelling), and the per-m0 codebooks as an increasing sequence.
    """
    search = _CodeSearch(ch, n, budget)
    return _oracle_one(search, tuple(mu))


def _oracle_one(search: _CodeSearch, mu: Triple) -> Optional[Code]:
    mu0, mu1, mu2 = mu
    # counting bounds: injective per-message codebooks, disjoint nonempty output sets
    if mu1 > len(search.s1) or mu2 > len(search.s2) or mu0 * mu1 * mu2 > search.n_outputs:
        return None
    found = search.find(mu)
    if found is None:
        return None
    code = search.code(mu, found)
    if not oracle_decodable(search.ch, MessageSpec(*mu, search.n), code):
        raise InternalAssertion(f"oracle witness for {mu} is not zero-error")
    return code


def oracle_region(
    ch: Channel,
    n: int,
    mu_bounds: Optional[Triple] = None,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> RateRegion:
    """Exhaustive code search over every triple in the box ``mu <= mu_bounds``.

    The default box is |Y|^n in each coordinate.
    """
    if n < 1:
        raise ZeromacError("blocklength must be positive")
    if mu_bounds is None:
        mu_bounds = (len(ch.y) ** n,) * 3
    if min(mu_bounds) < 1:
        raise ZeromacError("message-count bounds must be positive")
    triples = list(itertools.product(*(range(1, m + 1) for m in mu_bounds)))

    def run(mu):
        return mu, _oracle_one(_CodeSearch(ch, n, budget), mu)

    checked: dict = {}
    codes: dict = {}
    for mu, code in _map(run, triples, threads):
        checked[mu] = code is not None
        if code is not None:
            codes[mu] = code
    best = antichain(codes)
    return RateRegion(n, best, {mu: codes[mu] for mu in best}, "oracle", checked)


# -- single user ------------------------------------------------------------------


@dataclass(frozen=True)
class SingleUserCapacity:
    n: int
    cells: int
    codebook: tuple

    @property
    def bits(self) -> float:
        return math.log2(self.cells)

    @property
    def bits_per_use(self) -> float:
        return self.bits / self.n


def single_user_capacity(ch: Channel, n: int, budget: int = DEFAULT_BUDGET) -> SingleUserCapacity:
    """Largest overlap-partition cell count [[X1|Y]]* over input ranges S of X1^n.

    Any S can be thinned to one input per cell without losing a cell, so the
    search only visits sets whose partition is all singletons.  That property
    is inherited by subsets, which is what makes the pruning exact.
    """
    if len(ch.x2) != 1:
        raise ZeromacError("single-user capacity needs a singleton X2 alphabet")
    if n < 1:
        raise ZeromacError("blocklength must be positive")
    seqs = ch.inputs1(n)
    other = ch.inputs2(n)
    x1, y = seq_vars("X1", n), seq_vars("Y", n)
    best: list = []
    nodes = 0

    def cells(members: list) -> int:
        s = CooperationStructure.make(n, [("u", [seqs[i] for i in members], other)])
        w = build_structure_world(ch, n, s)
        return nonstochastic_info(w, x1, y).cells

    def grow(members: list, start: int):
        nonlocal best, nodes
        for i in range(start, len(seqs)):
            if len(members) + (len(seqs) - i) <= len(best):
                return
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"single-user search exceeded {budget} nodes")
            trial = members + [i]
            if cells(trial) == len(trial):
                if len(trial) > len(best):
                    best = trial
                grow(trial, i + 1)

    grow([], 0)
    return SingleUserCapacity(n, len(best), tuple(seqs[i] for i in best))


def confusability_independence_number(ch: Channel, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Independence number of the n-fold strong power of the confusability graph."""
    verts, adj = strong_power(confusability_graph(ch), n)
    return len(max_independent_set(adj, budget=budget))
