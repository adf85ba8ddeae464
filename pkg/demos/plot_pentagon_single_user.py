"""
Single-user zero-error codes on the pentagon channel
====================================================

"""

from zeromac import confusability_independence_number, single_user_capacity
from zeromac.channels import pentagon

ch = pentagon()

# one use admits two codewords; two uses admit five, more than 2 x 2
for n in (1, 2):
    r = single_user_capacity(ch, n)
    alpha = confusability_independence_number(ch, n)
    print(n, r.cells, alpha, [("".join(c)) for c in r.codebook], round(r.bits_per_use, 6))
