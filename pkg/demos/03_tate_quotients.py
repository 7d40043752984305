"""
Quotients of the periodic complex
=================================

The complex ... -T-> R -N-> R -T-> R -> ... computes the cohomology of the
cyclic group.  Its two quotients ker T / im N and ker N / im T vanish when a
norm-one element exists; otherwise they can be nonzero.
"""

from cyclic_homotopy.cohomology import tate_quotients
from cyclic_homotopy.rings import cyclic_product, gaussian, modular

cases = {
    "Z/4 trivial n=2": modular(4, 2),
    "Z/12 trivial n=4": modular(12, 4),
    "Z[i]/4 conjugation": gaussian(4),
    "(Z/2)^2 shift, n=4": cyclic_product(2, 2, 4),
    "(Z/2)^2 swap": cyclic_product(2, 2),
    "Z[i]/9 conjugation": gaussian(9),
}

print(f"{'ring':22s} {'kerT/imN':>9s} {'kerN/imT':>9s}  norm-one")
for name, R in cases.items():
    rep = tate_quotients(R)
    even, odd = rep.even_quotient, rep.odd_quotient
    print(f"{name:22s} {str(even.invariants):>9s} {str(odd.invariants):>9s}  {rep.norm_one}")

###############################################################################
# The element-order census of a quotient: Z/12 with trivial Z/4 action has
# both quotients cyclic of order 4.

rep = tate_quotients(modular(12, 4))
print("census of ker T / im N:", rep.even_quotient.census)
