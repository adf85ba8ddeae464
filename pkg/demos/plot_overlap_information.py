"""
Overlap partitions and nonstochastic information
================================================

"""

from zeromac import (
    build_world,
    conditional_info,
    factor_through,
    maximal_cv,
    nonstochastic_info,
    overlap_partition,
)
from zeromac.cvsearch import enumerate_cvs

# X in {0..3}; Y tells which half X sits in, except that 1 and 2 share a reading
w = build_world(
    ["X", "Y"],
    [("0", "a"), ("1", "a"), ("1", "b"), ("2", "b"), ("3", "c")],
)
p = overlap_partition(w, "X", "Y")
print(p.as_lists())
print(nonstochastic_info(w, "X", "Y").as_dict())

# every common variable of X and Y is a function of the maximal one
star = maximal_cv(w, "X", "Y")
for cv in enumerate_cvs(w, "X", "Y"):
    print(cv.label_count, factor_through(star, cv))

# conditioning on W: the worst slice decides
w3 = build_world(
    ["X", "Y", "W"],
    [("0", "0", "a"), ("1", "1", "a"), ("0", "0", "b"), ("1", "0", "b")],
)
print("I*[X;Y|W] cells:", conditional_info(w3, "X", "Y", "W").cells)
