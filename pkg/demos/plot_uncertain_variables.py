"""
Uncertain variables as outcome sets
===================================

"""

from zeromac import (
    build_world,
    conditional_family,
    is_markov,
    is_unrelated,
    marginal_range,
)

# a world lists every joint outcome; nothing else is assumed
w = build_world(["X", "Y"], [("0", "0"), ("0", "1"), ("1", "1")])
print(marginal_range(w, "X").points)

# conditional ranges, one per realized value of Y
for y, r in conditional_family(w, "X", "Y").entries.items():
    print(y, "->", r.points)

# three outcomes out of a 2 x 2 box, so X and Y are related
print("unrelated:", is_unrelated(w, ["X", "Y"]))

# copies of one bit form a Markov chain through any of them
eq = build_world(["A", "B", "C"], [("0", "0", "0"), ("1", "1", "1")])
print("A - C - B:", is_markov(eq, "A", "C", "B"))
