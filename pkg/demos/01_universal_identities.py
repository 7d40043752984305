"""
Operator identities in the free ring
====================================

Every identity between T, N, j_x, j'_x, h_x and h'_x is a statement about all
rings with an order-n automorphism.  In the free ring on X0..X{n-1} and
A0..A{n-1} it becomes a polynomial identity: if the difference of the two
sides is the zero polynomial, the identity holds after every specialization.
"""

from cyclic_homotopy.freering import UniversalRing, specialize
from cyclic_homotopy.operators import GROUPS, op_hpx, op_hx, op_N
from cyclic_homotopy.rings import gaussian

# The generic x and a for n = 3.
U = UniversalRing(3)
x, a = U.x, U.a

print("h_x(a)  =", op_hx(U, x, a))
print("h'_x(a) =", op_hpx(U, x, a))

# Their difference is the sum of X_i A_j over i != j.
print("h'_x(a) - h_x(a) =", op_hpx(U, x, a) - op_hx(U, x, a))

###############################################################################
# Check every group for n = 2..8.  Each line reports the number of identities
# whose difference reduced to 0.

for n in range(2, 9):
    U = UniversalRing(n)
    zero = total = 0
    for group in ("eq1", "lemma1", "corollary1", "proposition"):
        for lhs, rhs in GROUPS[group](U, U.x, U.a).values():
            total += 1
            zero += (lhs - rhs).is_zero()
    print(f"n={n}: {zero}/{total} differences are zero")

###############################################################################
# Specialization: send X0 to x and A0 to a in Z[i]/5 with conjugation.

R = gaussian(5)
U = UniversalRing(2)
xv, av = (3, 0), (1, 2)
print("N(X) at x = 3    :", R.format_element(specialize(op_N(U, U.x), R, xv, av)))
print("h_X(A) at (3, 1+2i):", R.format_element(specialize(op_hx(U, U.x, U.a), R, xv, av)),
      "=", R.format_element(op_hx(R, xv, av)))
