"""Finite uncertain variables.

A :class:`World` is an explicit outcome set: every outcome assigns one symbol
to each declared variable, so the ranges of any variable or tuple of
variables are obtained by projection.  Variable subsets may be given as a
single name or an iterable of names; tuples are always laid out in the
world's declaration order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from .errors import ZeromacError

Point = tuple  # tuple of symbols
VarSpec = Union[str, Iterable[str]]

__all__ = [
    "World",
    "Range",
    "ConditionalRangeFamily",
    "build_world",
    "marginal_range",
    "conditional_range",
    "conditional_family",
    "conditional_sets",
    "restrict",
    "product_world",
    "is_unrelated",
    "is_unrelated_chained",
    "is_markov",
    "is_conditionally_unrelated",
]


@dataclass(frozen=True)
class World:
    variables: tuple[str, ...]
    outcomes: tuple[Point, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _memo: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.variables)})
        object.__setattr__(self, "_memo", {})

    def __len__(self) -> int:
        return len(self.outcomes)

    def subset(self, names: VarSpec) -> tuple[str, ...]:
        """Validate a variable subset and return it in declaration order."""
        if isinstance(names, str):
            names = (names,)
        names = tuple(names)
        if not names:
            raise ZeromacError("empty variable subset")
        if len(set(names)) != len(names):
            raise ZeromacError(f"repeated variable in subset {names!r}")
        for name in names:
            if name not in self._index:
                raise ZeromacError(f"unknown variable {name!r}")
        return tuple(sorted(names, key=self._index.__getitem__))

    def indices(self, names: VarSpec) -> tuple[int, ...]:
        key = names if isinstance(names, (str, tuple)) else tuple(names)
        idx = self._memo.get(key)
        if idx is None:
            idx = tuple(self._index[v] for v in self.subset(key))
            self._memo[key] = idx
        return idx

    def project(self, idx: Sequence[int]) -> list[Point]:
        """Outcomes projected onto the given column indices (with repeats)."""
        return [tuple(o[i] for i in idx) for o in self.outcomes]


@dataclass(frozen=True)
class Range:
    variables: tuple[str, ...]
    points: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in set(self.points)


@dataclass(frozen=True)
class ConditionalRangeFamily:
    target: tuple[str, ...]
    conditioner: tuple[str, ...]
    entries: dict  # conditioner point -> Range

    def union(self) -> set:
        out: set = set()
        for r in self.entries.values():
            out.update(r.points)
        return out


def build_world(variables: Sequence[str], outcomes: Iterable[Sequence[str]]) -> World:
    variables = tuple(variables)
    if not variables:
        raise ZeromacError("a world needs at least one variable")
    if len(set(variables)) != len(variables):
        raise ZeromacError(f"duplicate variable names in {variables!r}")
    for v in variables:
        if not isinstance(v, str) or not v:
            raise ZeromacError(f"invalid variable name {v!r}")
    points = set()
    for o in outcomes:
        o = tuple(o)
        if len(o) != len(variables):
            raise ZeromacError(
                f"arity mismatch: outcome {o!r} has {len(o)} symbols, expected {len(variables)}"
            )
        for s in o:
            if not isinstance(s, str) or not s:
                raise ZeromacError(f"invalid symbol {s!r} in outcome {o!r}")
        points.add(o)
    if not points:
        raise ZeromacError("empty outcome set")
    return World(variables, tuple(sorted(points)))


def _sorted_range(variables, points) -> Range:
    return Range(tuple(variables), tuple(sorted(set(points))))


def marginal_range(w: World, names: VarSpec) -> Range:
    names = w.subset(names)
    return _sorted_range(names, w.project(w.indices(names)))


def _condition(w: World, cond: Mapping[str, str]) -> tuple[tuple[int, ...], Point]:
    if not cond:
        raise ZeromacError("empty condition")
    names = w.subset(cond.keys())
    return w.indices(names), tuple(cond[v] for v in names)


def conditional_range(w: World, target: VarSpec, cond: Mapping[str, str]) -> Range:
    """The range of ``target`` over outcomes agreeing with ``cond``."""
    target = w.subset(target)
    tidx = w.indices(target)
    cidx, value = _condition(w, cond)
    pts = {
        tuple(o[i] for i in tidx)
        for o in w.outcomes
        if tuple(o[i] for i in cidx) == value
    }
    if not pts:
        raise ZeromacError(f"inadmissible condition {dict(cond)!r}")
    return _sorted_range(target, pts)


def restrict(w: World, given: Mapping[str, str]) -> World:
    """Sub-world of outcomes agreeing with ``given`` (all variables kept)."""
    cidx, value = _condition(w, given)
    kept = tuple(o for o in w.outcomes if tuple(o[i] for i in cidx) == value)
    if not kept:
        raise ZeromacError(f"inadmissible condition {dict(given)!r}")
    return World(w.variables, kept)


def _disjoint(w: World, *subsets: VarSpec) -> list[tuple[str, ...]]:
    out = [w.subset(s) for s in subsets]
    seen: set = set()
    for s in out:
        if seen & set(s):
            raise ZeromacError(f"variable subsets overlap: {out!r}")
        seen.update(s)
    return out


def conditional_sets(w: World, target: VarSpec, conditioner: VarSpec) -> dict:
    """Map each conditioner point to the set of target points seen with it."""
    tidx, cidx = w.indices(target), w.indices(conditioner)
    out: dict = {}
    for o in w.outcomes:
        out.setdefault(tuple(o[i] for i in cidx), set()).add(tuple(o[i] for i in tidx))
    return out


def conditional_family(w: World, target: VarSpec, conditioner: VarSpec) -> ConditionalRangeFamily:
    target, conditioner = _disjoint(w, target, conditioner)
    sets = conditional_sets(w, target, conditioner)
    entries = {y: _sorted_range(target, xs) for y, xs in sorted(sets.items())}
    return ConditionalRangeFamily(target, conditioner, entries)


def is_unrelated(w: World, groups: Sequence[VarSpec]) -> bool:
    """Joint range equals the Cartesian product of the marginal ranges."""
    if len(groups) < 2:
        raise ZeromacError("unrelatedness needs at least two groups")
    groups = _disjoint(w, *groups)
    idxs = [w.indices(g) for g in groups]
    joint = {tuple(tuple(o[i] for i in idx) for idx in idxs) for o in w.outcomes}
    size = 1
    for idx in idxs:
        size *= len({tuple(o[i] for i in idx) for o in w.outcomes})
    return len(joint) == size


def is_unrelated_chained(w: World, groups: Sequence[VarSpec]) -> bool:
    """Conditional-range form: each group's range is unchanged by any admissible prefix."""
    if len(groups) < 2:
        raise ZeromacError("unrelatedness needs at least two groups")
    groups = _disjoint(w, *groups)
    idxs = [w.indices(g) for g in groups]
    for k in range(1, len(idxs)):
        marginal = {tuple(o[i] for i in idxs[k]) for o in w.outcomes}
        given_prefix: dict = {}
        for o in w.outcomes:
            prefix = tuple(tuple(o[i] for i in idx) for idx in idxs[:k])
            given_prefix.setdefault(prefix, set()).add(tuple(o[i] for i in idxs[k]))
        if any(xs != marginal for xs in given_prefix.values()):
            return False
    return True


def is_markov(w: World, left: VarSpec, mid: VarSpec, right: VarSpec) -> bool:
    """Test ``left <-> mid <-> right``: conditioning on ``right`` as well never shrinks [[left|mid]]."""
    left, mid, right = _disjoint(w, left, mid, right)
    lidx, midx, ridx = w.indices(left), w.indices(mid), w.indices(right)
    given_mid: dict = {}
    given_both: dict = {}
    for o in w.outcomes:
        x = tuple(o[i] for i in lidx)
        y = tuple(o[i] for i in midx)
        given_mid.setdefault(y, set()).add(x)
        given_both.setdefault((y, tuple(o[i] for i in ridx)), set()).add(x)
    return all(xs == given_mid[y] for (y, _), xs in given_both.items())


def is_conditionally_unrelated(w: World, a: VarSpec, b: VarSpec, given: VarSpec) -> bool:
    """[[a, b | y]] is the product [[a|y]] x [[b|y]] for every y in [[given]]."""
    a, b, given = _disjoint(w, a, b, given)
    aidx, bidx, gidx = w.indices(a), w.indices(b), w.indices(given)
    joint: dict = {}
    for o in w.outcomes:
        joint.setdefault(tuple(o[i] for i in gidx), set()).add(
            (tuple(o[i] for i in aidx), tuple(o[i] for i in bidx))
        )
    for pairs in joint.values():
        xs = {p[0] for p in pairs}
        ys = {p[1] for p in pairs}
        if len(pairs) != len(xs) * len(ys):
            return False
    return True


def product_world(variables: Sequence[str], alphabets: Sequence[Sequence[str]]) -> World:
    """World whose outcomes are the full product of the given alphabets."""
    return build_world(variables, itertools.product(*alphabets))
