"""Two-transmitter memoryless MAC, its codes, and the worlds they induce.

Sequences are tuples of symbols of length ``n``.  Messages are 1-based
integers; inside a :class:`~zeromac.uv.World` they appear as decimal strings.
Sequence variables are named ``X1[k]``, ``X2[k]`` and ``Y[k]`` for
``1 <= k <= n``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .errors import WorldTooLarge, ZeromacError
from .uv import World, build_world, is_markov

DEFAULT_WORLD_CAP = 10**6

Seq = tuple  # tuple of symbols


def seq_vars(prefix: str, n: int) -> tuple[str, ...]:
    return tuple(f"{prefix}[{k}]" for k in range(1, n + 1))


@dataclass(frozen=True)
class Channel:
    x1: tuple[str, ...]
    x2: tuple[str, ...]
    w: tuple[str, ...]
    y: tuple[str, ...]
    table: Mapping[tuple[str, str, str], str]

    def letter_outputs(self, a: str, b: str) -> frozenset:
        return frozenset(self.table[a, b, n] for n in self.w)

    def noise_sequences(self, n: int):
        return itertools.product(self.w, repeat=n)

    def inputs1(self, n: int) -> list[Seq]:
        return list(itertools.product(self.x1, repeat=n))

    def inputs2(self, n: int) -> list[Seq]:
        return list(itertools.product(self.x2, repeat=n))

    def apply(self, a: Seq, b: Seq, noise: Seq) -> Seq:
        return tuple(self.table[p, q, r] for p, q, r in zip(a, b, noise))

    def outputs(self, a: Seq, b: Seq) -> frozenset:
        """Every output sequence the pair of input sequences can produce."""
        per_letter = [sorted(self.letter_outputs(p, q)) for p, q in zip(a, b)]
        return frozenset(itertools.product(*per_letter))


def build_channel(
    x1: Sequence[str],
    x2: Sequence[str],
    w: Sequence[str],
    y: Sequence[str],
    transitions: Iterable,
) -> Channel:
    """Validate a transition list covering X1 x X2 x W exactly once.

    Each transition is an ``(x1, x2, w, y)`` tuple or a mapping with those keys.
    """
    alphabets = []
    for name, alpha in (("x1", x1), ("x2", x2), ("w", w), ("y", y)):
        alpha = tuple(alpha)
        if not alpha or len(set(alpha)) != len(alpha):
            raise ZeromacError(f"alphabet {name} must be nonempty and duplicate-free")
        if any(not isinstance(s, str) or not s for s in alpha):
            raise ZeromacError(f"alphabet {name} has an invalid symbol")
        alphabets.append(alpha)
    x1, x2, w, y = alphabets
    table: dict = {}
    for t in transitions:
        if isinstance(t, Mapping):
            t = (t.get("x1"), t.get("x2"), t.get("w"), t.get("y"))
        a, b, n, out = t
        key = (a, b, n)
        if a not in x1 or b not in x2 or n not in w:
            raise ZeromacError(f"transition input {key!r} outside the input alphabets")
        if out not in y:
            raise ZeromacError(f"unknown output symbol {out!r} for input {key!r}")
        if key in table:
            raise ZeromacError(f"duplicate transition for input {key!r}")
        table[key] = out
    for key in itertools.product(x1, x2, w):
        if key not in table:
            raise ZeromacError(f"missing transition for input (x1, x2, w) = {key!r}")
    return Channel(x1, x2, w, y, dict(sorted(table.items())))


@dataclass(frozen=True)
class MessageSpec:
    mu0: int
    mu1: int
    mu2: int
    n: int

    def __post_init__(self):
        if min(self.mu0, self.mu1, self.mu2) < 1 or self.n < 1:
            raise ZeromacError("message counts and blocklength must be positive")

    @property
    def mu(self) -> tuple[int, int, int]:
        return (self.mu0, self.mu1, self.mu2)

    @property
    def rates(self) -> tuple[float, float, float]:
        return tuple(math.log2(m) / self.n for m in self.mu)

    def triples(self):
        return itertools.product(
            range(1, self.mu0 + 1), range(1, self.mu1 + 1), range(1, self.mu2 + 1)
        )


@dataclass(frozen=True)
class StructureEntry:
    label: str
    a: tuple[Seq, ...]
    b: tuple[Seq, ...]


@dataclass(frozen=True)
class CooperationStructure:
    """Per auxiliary value u, the input sets A_u and B_u; joint range is the union of A_u x B_u."""

    n: int
    entries: tuple[StructureEntry, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ZeromacError("blocklength must be positive")
        if not self.entries:
            raise ZeromacError("a cooperation structure needs at least one u")
        labels = [e.label for e in self.entries]
        if len(set(labels)) != len(labels):
            raise ZeromacError("duplicate u labels")
        pairs = [(e.a, e.b) for e in self.entries]
        if len(set(pairs)) != len(pairs):
            raise ZeromacError("two u labels carry identical (A_u, B_u) pairs")
        for e in self.entries:
            if not e.a or not e.b:
                raise ZeromacError(f"empty input set for u={e.label!r}")
            for s in e.a + e.b:
                if len(s) != self.n:
                    raise ZeromacError(f"sequence {s!r} for u={e.label!r} has length != {self.n}")

    @classmethod
    def make(cls, n: int, entries: Iterable) -> "CooperationStructure":
        """Build from ``(label, A, B)`` triples; sets are sorted and deduplicated."""
        rows = []
        for label, a, b in entries:
            a = tuple(sorted({tuple(s) for s in a}))
            b = tuple(sorted({tuple(s) for s in b}))
            rows.append(StructureEntry(str(label), a, b))
        rows.sort(key=lambda e: e.label)
        return cls(n, tuple(rows))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.entries)

    def entry(self, label: str) -> StructureEntry:
        for e in self.entries:
            if e.label == label:
                return e
        raise ZeromacError(f"unknown u label {label!r}")


@dataclass(frozen=True)
class Code:
    """Encoder tables and, optionally, the three staged decoder tables.

    ``stage0`` maps y to m0; ``stage1``/``stage2`` map (m0, y) to m1/m2.
    """

    n: int
    mu: tuple[int, int, int]
    gamma1: Mapping[tuple[int, int], Seq]
    gamma2: Mapping[tuple[int, int], Seq]
    stage0: Optional[Mapping[Seq, int]] = None
    stage1: Optional[Mapping[tuple[int, Seq], int]] = None
    stage2: Optional[Mapping[tuple[int, Seq], int]] = None

    def __post_init__(self):
        spec = self.spec
        want1 = {(m0, m) for m0 in range(1, spec.mu0 + 1) for m in range(1, spec.mu1 + 1)}
        want2 = {(m0, m) for m0 in range(1, spec.mu0 + 1) for m in range(1, spec.mu2 + 1)}
        if set(self.gamma1) != want1 or set(self.gamma2) != want2:
            raise ZeromacError("encoder tables must be total on [1:mu0] x [1:mu_i]")
        for s in list(self.gamma1.values()) + list(self.gamma2.values()):
            if len(s) != self.n:
                raise ZeromacError(f"codeword {s!r} has length != {self.n}")
        staged = (self.stage0, self.stage1, self.stage2)
        if any(t is None for t in staged) and any(t is not None for t in staged):
            raise ZeromacError("decoder tables must be given for all three stages or none")

    @property
    def spec(self) -> MessageSpec:
        return MessageSpec(*self.mu, self.n)

    @property
    def has_decoder(self) -> bool:
        return self.stage0 is not None

    def encoders_only(self) -> "Code":
        return Code(self.n, self.mu, self.gamma1, self.gamma2)

    def restrict(self, mu: Sequence[int]) -> "Code":
        """Sub-code on the first ``mu`` messages of each index."""
        mu0, mu1, mu2 = mu
        if not (1 <= mu0 <= self.mu[0] and 1 <= mu1 <= self.mu[1] and 1 <= mu2 <= self.mu[2]):
            raise ZeromacError(f"cannot restrict a {self.mu} code to {tuple(mu)}")
        g1 = {k: v for k, v in self.gamma1.items() if k[0] <= mu0 and k[1] <= mu1}
        g2 = {k: v for k, v in self.gamma2.items() if k[0] <= mu0 and k[1] <= mu2}
        if not self.has_decoder:
            return Code(self.n, (mu0, mu1, mu2), g1, g2)
        s0 = {y: m for y, m in self.stage0.items() if m <= mu0}
        s1 = {k: m for k, m in self.stage1.items() if k[0] <= mu0 and m <= mu1}
        s2 = {k: m for k, m in self.stage2.items() if k[0] <= mu0 and m <= mu2}
        return Code(self.n, (mu0, mu1, mu2), g1, g2, s0, s1, s2)

    def decode(self, y: Sequence[str]) -> tuple[int, int, int]:
        if not self.has_decoder:
            raise ZeromacError("code carries no decoder tables")
        y = tuple(y)
        try:
            m0 = self.stage0[y]
            return (m0, self.stage1[m0, y], self.stage2[m0, y])
        except KeyError:
            raise ZeromacError(f"inadmissible output sequence {y!r}") from None


def _check_cap(count: int, cap: int) -> None:
    if count > cap:
        raise WorldTooLarge(f"world would have {count} outcomes, above the cap of {cap}")


def _check_alphabet(seqs, alphabet, what) -> None:
    for s in seqs:
        for sym in s:
            if sym not in alphabet:
                raise ZeromacError(f"{what} symbol {sym!r} is not in the channel alphabet")


def build_coded_world(
    ch: Channel, spec: MessageSpec, code: Code, cap: int = DEFAULT_WORLD_CAP
) -> World:
    """World over (M0, M1, M2, X1[k], X2[k], Y[k]) for all messages and noise sequences."""
    if code.mu != spec.mu or code.n != spec.n:
        raise ZeromacError("code does not match the message spec")
    _check_alphabet(code.gamma1.values(), ch.x1, "X1")
    _check_alphabet(code.gamma2.values(), ch.x2, "X2")
    n = spec.n
    _check_cap(spec.mu0 * spec.mu1 * spec.mu2 * len(ch.w) ** n, cap)
    variables = ("M0", "M1", "M2") + seq_vars("X1", n) + seq_vars("X2", n) + seq_vars("Y", n)
    noise = list(ch.noise_sequences(n))
    outcomes = []
    for m0, m1, m2 in spec.triples():
        a = code.gamma1[m0, m1]
        b = code.gamma2[m0, m2]
        for z in noise:
            outcomes.append((str(m0), str(m1), str(m2)) + a + b + ch.apply(a, b, z))
    return build_world(variables, outcomes)


def build_structure_world(
    ch: Channel, n: int, s: CooperationStructure, cap: int = DEFAULT_WORLD_CAP
) -> World:
    """World over (U, X1[k], X2[k], Y[k]) realising the union of the products A_u x B_u."""
    if s.n != n:
        raise ZeromacError(f"structure has blocklength {s.n}, expected {n}")
    for e in s.entries:
        _check_alphabet(e.a, ch.x1, "X1")
        _check_alphabet(e.b, ch.x2, "X2")
    _check_cap(sum(len(e.a) * len(e.b) for e in s.entries) * len(ch.w) ** n, cap)
    variables = ("U",) + seq_vars("X1", n) + seq_vars("X2", n) + seq_vars("Y", n)
    noise = list(ch.noise_sequences(n))
    outcomes = []
    for e in s.entries:
        for a in e.a:
            for b in e.b:
                for z in noise:
                    outcomes.append((e.label,) + a + b + ch.apply(a, b, z))
    return build_world(variables, outcomes)


def structure_vars(w: World) -> tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]:
    """The (X1, X2, Y) sequence-variable groups of a structure or coded world."""
    n = sum(1 for v in w.variables if v.startswith("Y["))
    if n == 0:
        raise ZeromacError("world has no Y[k] variables")
    return seq_vars("X1", n), seq_vars("X2", n), seq_vars("Y", n)


def check_structure_markov(w: World) -> bool:
    """Both chains X1 <-> U <-> X2 and U <-> (X1, X2) <-> Y hold in ``w``."""
    x1, x2, y = structure_vars(w)
    return is_markov(w, x1, "U", x2) and is_markov(w, "U", x1 + x2, y)
