import itertools

import pytest

from zeromac import (
    Code,
    CooperationStructure,
    MessageSpec,
    ZeromacError,
    decode,
    oracle_decodable,
    synthesize_code,
    verify_zero_error,
)
from zeromac.channels import CORPUS, binary_adder, pentagon
from zeromac.codec import derive_decoder
from zeromac.region import Bounds, enumerate_structures

ADDER = binary_adder()
THREE = CooperationStructure.make(
    1, [("u1", [("0",)], [("0",)]), ("u2", [("0",)], [("1",)]), ("u3", [("1",)], [("1",)])]
)
A01_B0 = CooperationStructure.make(1, [("u", [("0",), ("1",)], [("0",)])])
INJECTIVE_122 = Code(1, (1, 2, 2), {(1, 1): ("0",), (1, 2): ("1",)}, {(1, 1): ("0",), (1, 2): ("1",)})


def test_synthesize_adder_three_pairs():
    r = synthesize_code(ADDER, 1, THREE)
    assert r.achieved == (3, 1, 1)
    assert r.representatives == {1: "u1", 2: "u2", 3: "u3"}
    assert verify_zero_error(ADDER, r.code.spec, r.code).ok
    assert decode(r, ["2"]) == (3, 1, 1)


def test_synthesize_adder_single_u():
    r = synthesize_code(ADDER, 1, A01_B0)
    assert r.achieved == (1, 2, 1)
    # Y = X1 here, so y=1 decodes to the message carried by codeword 1
    m1 = next(m for (m0, m), s in r.code.gamma1.items() if s == ("1",))
    assert decode(r, ["1"]) == (1, m1, 1)
    with pytest.raises(ZeromacError, match="inadmissible output sequence"):
        decode(r, ["2"])


def test_synthesize_pentagon_full_input_set():
    # every pair of adjacent symbols shares an output, so the 25 sequences form one overlap cell
    seqs = [(str(a), str(b)) for a in range(5) for b in range(5)]
    s = CooperationStructure.make(2, [("u", seqs, [("0", "0")])])
    r = synthesize_code(pentagon(), 2, s)
    assert r.achieved == (1, 1, 1)


def test_synthesize_pentagon_independent_set():
    seqs = [(str(i), str(2 * i % 5)) for i in range(5)]
    s = CooperationStructure.make(2, [("u", seqs, [("0", "0")])])
    r = synthesize_code(pentagon(), 2, s)
    assert r.achieved == (1, 5, 1)
    assert verify_zero_error(pentagon(), r.code.spec, r.code).ok


def test_verify_collision_certificate():
    v = verify_zero_error(ADDER, INJECTIVE_122.spec, INJECTIVE_122)
    assert not v.ok
    assert v.certificate["y"] == ["1"]
    assert v.certificate["reason"] == "ambiguous output sequence"
    assert v.certificate["candidates"] == [[1, 1, 2], [1, 2, 1]]


def test_verify_trivial_code():
    code = Code(1, (1, 1, 1), {(1, 1): ("1",)}, {(1, 1): ("0",)})
    assert verify_zero_error(ADDER, code.spec, code).ok


def test_verify_rejects_mismatched_spec():
    with pytest.raises(ZeromacError):
        verify_zero_error(ADDER, MessageSpec(1, 1, 1, 1), INJECTIVE_122)


def test_oracle_decodable_examples():
    r = synthesize_code(ADDER, 1, THREE)
    assert oracle_decodable(ADDER, r.code.spec, r.code)
    assert not oracle_decodable(ADDER, INJECTIVE_122.spec, INJECTIVE_122)
    code = Code(2, (1, 5, 1), {(1, i + 1): (str(i), str(2 * i % 5)) for i in range(5)}, {(1, 1): ("0", "0")})
    assert oracle_decodable(pentagon(), code.spec, code)


def test_wrong_decoder_table_is_caught():
    r = synthesize_code(ADDER, 1, THREE)
    c = r.code
    bad0 = dict(c.stage0)
    bad0[("2",)] = 1
    bad = Code(c.n, c.mu, c.gamma1, c.gamma2, bad0, c.stage1, c.stage2)
    v = verify_zero_error(ADDER, bad.spec, bad)
    assert not v.ok and v.certificate["messages"] == [3, 1, 1]


def test_verify_agrees_with_oracle_on_small_codes():
    # every (1,2,2) and (2,1,2) encoder pair on the adder at n=1
    for mu in ((1, 2, 2), (2, 1, 2), (2, 2, 1)):
        spec = MessageSpec(*mu, 1)
        keys1 = [(m0, m) for m0 in range(1, mu[0] + 1) for m in range(1, mu[1] + 1)]
        keys2 = [(m0, m) for m0 in range(1, mu[0] + 1) for m in range(1, mu[2] + 1)]
        for c1 in itertools.product("01", repeat=len(keys1)):
            for c2 in itertools.product("01", repeat=len(keys2)):
                code = Code(1, mu, {k: (s,) for k, s in zip(keys1, c1)}, {k: (s,) for k, s in zip(keys2, c2)})
                assert verify_zero_error(ADDER, spec, code).ok == oracle_decodable(ADDER, spec, code)


def test_derived_decoder_roundtrip():
    r = synthesize_code(ADDER, 1, THREE)
    code = derive_decoder(ADDER, r.code.encoders_only())
    assert verify_zero_error(ADDER, code.spec, code).ok


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_every_synthesized_code_is_zero_error(name):
    ch = CORPUS[name]()
    for s in enumerate_structures(ch, 1, Bounds(max_u=2)):
        r = synthesize_code(ch, 1, s)
        assert verify_zero_error(ch, r.code.spec, r.code).ok
        assert oracle_decodable(ch, r.code.spec, r.code)
