"""
Information shared by two transmitters and a receiver
=====================================================

"""

from zeromac import build_world, nc_info, nc_maximal_cv, nc_partition

# the receiver sees both bits
w = build_world(["X1", "X2", "Y"], [(a, b, a + b) for a in "01" for b in "01"])
print(len(nc_partition(w, "X1", "X2", "Y")), "NC classes")
print(nc_info(w, "X1", "X2", "Y").as_dict())

cv = nc_maximal_cv(w, "X1", "X2", "Y")
for y, pair in sorted(cv.g_table.items()):
    print(y, "->", pair)

# an adder receiver merges 01 and 10
adder = build_world(["X1", "X2", "Y"], [(a, b, str(int(a) + int(b))) for a in "01" for b in "01"])
print(nc_info(adder, "X1", "X2", "Y").as_dict())
