"""Zero-error code synthesis from a cooperation structure, and code verification.

Synthesis follows the overlap-partition construction: one representative u
per cell of [[U|Y]]*, and for each representative one codeword per cell of
the conditional overlap partition [[X^i|Y, U=u]]*.  Selections are always the
lexicographically smallest member, and cells are consumed in label order, so
codebooks are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InternalAssertion, ZeromacError
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
from .overlap import conditional_info, matching_labels, overlap_partition
from .uv import restrict


@dataclass(frozen=True)
class SynthesisResult:
    code: Code
    achieved: tuple[int, int, int]
    representatives: dict  # m0 -> u label
    cell_assignments: dict  # (m0, i) -> cell label of each codeword, in message order
    structure: Optional[CooperationStructure] = None


@dataclass(frozen=True)
class Verdict:
    ok: bool
    certificate: Optional[dict] = None

    def as_dict(self) -> dict:
        out: dict = {"ok": self.ok}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def synthesize_code(
    ch: Channel, n: int, s: CooperationStructure, cap: int = DEFAULT_WORLD_CAP
) -> SynthesisResult:
    w = build_structure_world(ch, n, s, cap)
    if not check_structure_markov(w):
        raise InternalAssertion("structure world violates a Markov uncertainty chain")
    x1, x2, y = seq_vars("X1", n), seq_vars("X2", n), seq_vars("Y", n)

    u_cells = overlap_partition(w, "U", y)
    reps = [cell[0][0] for cell in u_cells.cells]
    if not reps:
        raise InternalAssertion("structure yields no common-message value")
    stage0 = {yy: label + 1 for yy, label in matching_labels(w, "U", y).items()}

    # the private message counts are the worst case over every u, not just the representatives
    mu1 = conditional_info(w, x1, y, "U").cells
    mu2 = conditional_info(w, x2, y, "U").cells

    gamma1: dict = {}
    gamma2: dict = {}
    stage1: dict = {}
    stage2: dict = {}
    assignments: dict = {}
    for m0, u in enumerate(reps, start=1):
        sub = restrict(w, {"U": u})
        for i, xs, mu_i, gamma, stage in ((1, x1, mu1, gamma1, stage1), (2, x2, mu2, gamma2, stage2)):
            part = overlap_partition(sub, xs, y)
            if len(part) < mu_i:
                raise InternalAssertion(f"u={u!r} has fewer than {mu_i} conditional cells")
            for m, cell in enumerate(part.cells[:mu_i], start=1):
                gamma[m0, m] = cell[0]
            assignments[m0, i] = tuple(range(mu_i))
            for yy, label in matching_labels(sub, xs, y).items():
                if label < mu_i:
                    stage[m0, yy] = label + 1

    code = Code(n, (len(reps), mu1, mu2), gamma1, gamma2, stage0, stage1, stage2)
    return SynthesisResult(
        code,
        code.mu,
        {m0: u for m0, u in enumerate(reps, start=1)},
        assignments,
        s,
    )


def decode(r, y) -> tuple[int, int, int]:
    """Three-stage decode of an output sequence with a synthesized (or tabled) code."""
    code = r.code if isinstance(r, SynthesisResult) else r
    return code.decode(tuple(y))


def _output_map(ch: Channel, code: Code) -> dict:
    """Output sequence -> sorted list of message triples that can produce it."""
    out: dict = {}
    for t in code.spec.triples():
        a = code.gamma1[t[0], t[1]]
        b = code.gamma2[t[0], t[2]]
        for yy in ch.outputs(a, b):
            out.setdefault(yy, []).append(t)
    return out


def derive_decoder(ch: Channel, code: Code) -> Code:
    """Attach staged tables that decode a stage only when every candidate agrees on it."""
    stage0: dict = {}
    stage1: dict = {}
    stage2: dict = {}
    for yy, triples in _output_map(ch, code).items():
        m0s = {t[0] for t in triples}
        if len(m0s) != 1:
            continue
        m0 = m0s.pop()
        stage0[yy] = m0
        m1s = {t[1] for t in triples}
        m2s = {t[2] for t in triples}
        if len(m1s) == 1:
            stage1[m0, yy] = m1s.pop()
        if len(m2s) == 1:
            stage2[m0, yy] = m2s.pop()
    return Code(code.n, code.mu, code.gamma1, code.gamma2, stage0, stage1, stage2)


def _check_code(ch: Channel, spec: MessageSpec, code: Code) -> None:
    if code.mu != spec.mu or code.n != spec.n:
        raise ZeromacError("code does not match the message spec")
    for s in code.gamma1.values():
        if any(sym not in ch.x1 for sym in s):
            raise ZeromacError(f"codeword {s!r} is outside the X1 alphabet")
    for s in code.gamma2.values():
        if any(sym not in ch.x2 for sym in s):
            raise ZeromacError(f"codeword {s!r} is outside the X2 alphabet")


def verify_zero_error(ch: Channel, spec: MessageSpec, code: Code) -> Verdict:
    """Decode every (messages, noise) realisation and compare with the messages sent.

    Codes without decoder tables are checked with :func:`derive_decoder`.  The
    certificate names the lexicographically first failing realisation.
    """
    _check_code(ch, spec, code)
    if not code.has_decoder:
        code = derive_decoder(ch, code)
    noise = list(ch.noise_sequences(spec.n))
    for t in spec.triples():
        a = code.gamma1[t[0], t[1]]
        b = code.gamma2[t[0], t[2]]
        for z in noise:
            yy = ch.apply(a, b, z)
            try:
                got = code.decode(yy)
            except ZeromacError:
                got = None
            if got != t:
                candidates = _output_map(ch, code).get(yy, [])
                reason = "ambiguous output sequence" if len(candidates) > 1 else "decoded wrong messages"
                if got is None and len(candidates) <= 1:
                    reason = "decoder has no entry for output sequence"
                return Verdict(
                    False,
                    {
                        "messages": list(t),
                        "noise": list(z),
                        "y": list(yy),
                        "decoded": list(got) if got is not None else None,
                        "reason": reason,
                        "candidates": [list(c) for c in candidates],
                    },
                )
    return Verdict(True)


def oracle_decodable(ch: Channel, spec: MessageSpec, code: Code) -> bool:
    """True iff the output-sequence sets of distinct message triples are pairwise disjoint."""
    _check_code(ch, spec, code)
    owner: dict = {}
    for t in spec.triples():
        for yy in ch.outputs(code.gamma1[t[0], t[1]], code.gamma2[t[0], t[2]]):
            if owner.setdefault(yy, t) != t:
                return False
    return True
