"""
The case x = 1/n
================

If n is invertible, x = 1/n is invariant with N(x) = 1 and h_x, h'_x collapse
to weighted sums of t^j(a).
"""

from cyclic_homotopy.operators import h_special, hp_special, inverse_of_n, op_hpx, op_hx
from cyclic_homotopy.rings import cyclic_product, modular

for R in [modular(7, 3), cyclic_product(5, 4)]:
    u = inverse_of_n(R)
    agree = all(
        op_hx(R, u, a) == h_special(R, a) and op_hpx(R, u, a) == hp_special(R, a)
        for a in R.elements()
    )
    print(f"{R.describe()}: 1/n = {R.format_element(u)}, closed forms agree on all "
          f"{R.size} elements: {agree}")

a = (1, 0, 0, 0)
R = cyclic_product(5, 4)
print("h_x(a)  =", R.format_element(h_special(R, a)))
print("h'_x(a) =", R.format_element(hp_special(R, a)))
