"""
Homotopies on finite rings
==========================

With a norm-one element x, the four sums N j_x + h_x T, j_x N + T h_x and
their primed versions are all the identity map.  We find x by solving
N(x) = 1 as a linear system mod m and check every element.
"""

from cyclic_homotopy.operators import check_homotopy, check_proposition, op_N
from cyclic_homotopy.rings import cyclic_product, find_norm_one, gaussian, matrix_conj, modular

rings = {
    "(Z/3)^3, cyclic shift": cyclic_product(3, 3),
    "Z[i]/7, conjugation": gaussian(7),
    "M2(Z/3), swap conjugation": matrix_conj(3, [1, 0]),
    "Z/5, trivial, n=2": modular(5, 2),
}

for name, R in rings.items():
    x = find_norm_one(R)
    res = check_homotopy(R, x, R.elements())
    print(f"{name:28s} x = {R.format_element(x):14s} {res.checked:5d} checks, passed={res.passed}")

###############################################################################
# Without a norm-one element the sums are multiplication by N(x) instead.
# On Z/4 with trivial action N(x) = 2x is never 1.

R = modular(4, 2)
print("norm-one element in Z/4:", find_norm_one(R))
print("N(1) =", op_N(R, 1))
print("N(x) a = N j_x a + h_x T a for all x, a:",
      all(check_proposition(R, x, R.elements()).passed for x in R.elements()))
