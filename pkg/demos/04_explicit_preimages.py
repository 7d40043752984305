"""
Explicit preimages
==================

When N(x) = 1 every invariant a equals N(x a), and every a with N(a) = 0
equals T(h_x(a)) = T(h'_x(a)).  The two T-preimages usually differ.
"""

from cyclic_homotopy.cohomology import norm_preimage, t_preimage
from cyclic_homotopy.operators import op_N, op_T
from cyclic_homotopy.rings import cyclic_product, find_norm_one

R = cyclic_product(3, 3)
x = find_norm_one(R)
fmt = R.format_element
print("x =", fmt(x), " N(x) =", fmt(op_N(R, x)))

for a in [(1, 1, 1), (2, 2, 2)]:
    pre = norm_preimage(R, x, a)
    print(f"a = {fmt(a)} is invariant; x a = {fmt(pre)}, N(x a) = {fmt(op_N(R, pre))}")

for a in [(1, 2, 0), (2, 0, 1), (1, 1, 1)]:
    if op_N(R, a) != R.zero():
        print(f"a = {fmt(a)} has N(a) = {fmt(op_N(R, a))}, no T-preimage formula applies")
        continue
    h, hp = t_preimage(R, x, a)
    print(f"a = {fmt(a)}: h_x(a) = {fmt(h)}, h'_x(a) = {fmt(hp)}, "
          f"T of both = {fmt(op_T(R, h))}, {fmt(op_T(R, hp))}")
