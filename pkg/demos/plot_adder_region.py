"""
Zero-error region of the binary adder
=====================================

"""

from zeromac import (
    CooperationStructure,
    capacity_region,
    decode,
    oracle_region,
    synthesize_code,
    verify_zero_error,
)
from zeromac.channels import binary_adder

ch = binary_adder()

# three auxiliary values, each fixing both inputs
s = CooperationStructure.make(
    1,
    [("u1", [("0",)], [("0",)]), ("u2", [("0",)], [("1",)]), ("u3", [("1",)], [("1",)])],
)
r = synthesize_code(ch, 1, s)
print("achieved", r.achieved)
print("y=2 decodes to", decode(r, ["2"]))
print(verify_zero_error(ch, r.code.spec, r.code).as_dict())

# the region from cooperation structures and from brute-force code search
for n in (1, 2):
    ours = capacity_region(ch, n)
    oracle = oracle_region(ch, n)
    print(n, ours.maximal, ours.maximal == oracle.maximal)
