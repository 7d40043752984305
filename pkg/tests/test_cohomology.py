import itertools

import pytest

from cyclic_homotopy.base import PreconditionError
from cyclic_homotopy.cohomology import (
    ConsistencyError,
    coset_census,
    image,
    kernel,
    norm_preimage,
    t_preimage,
    tate_quotients,
)
from cyclic_homotopy.operators import op_hpx, op_hx, op_N, op_T
from cyclic_homotopy.rings import cyclic_product, find_norm_one, find_norm_one_exhaustive, modular, zoo


def brute(ring, op):
    f = {"T": op_T, "N": op_N}[op]
    elems = ring.elements()
    return {a for a in elems if f(ring, a) == ring.zero()}, {f(ring, a) for a in elems}


def test_kernel_image_examples():
    Z4 = modular(4, 2)
    assert kernel(Z4, "T").elements() == {0, 1, 2, 3}
    assert kernel(Z4, "N").elements() == {0, 2}
    assert image(Z4, "N").elements() == {0, 2}
    assert image(Z4, "T").elements() == {0}
    P = cyclic_product(2, 2)
    assert kernel(P, "T").elements() == {(0, 0), (1, 1)}
    assert image(P, "N").elements() == {(0, 0), (1, 1)}


def test_subgroups_match_enumeration(small_ring):
    for op in ("T", "N"):
        ker, im = brute(small_ring, op)
        K, I = kernel(small_ring, op), image(small_ring, op)
        assert K.order == len(ker) and I.order == len(im)
        assert K.elements() == ker and I.elements() == im
        assert len(small_ring.elements()) % K.order == 0
        for a in small_ring.elements():
            assert (a in K) == (a in ker)
            assert (a in I) == (a in im)


def test_subgroup_closure(small_ring):
    R = small_ring
    for op in ("T", "N"):
        S = kernel(R, op).elements()
        for a, b in itertools.product(S, repeat=2):
            assert R.add(a, b) in S
        assert all(R.neg(a) in S for a in S)


def test_complex_property(small_ring):
    kT, _ = brute(small_ring, "T")
    kN, _ = brute(small_ring, "N")
    _, iN = brute(small_ring, "N")
    _, iT = brute(small_ring, "T")
    assert iN <= kT and iT <= kN


def test_quotients_match_coset_oracle(small_ring):
    R = small_ring
    rep = tate_quotients(R)
    kT, iT = brute(R, "T")
    kN, iN = brute(R, "N")
    even = coset_census(R, frozenset(kT), frozenset(iN))
    odd = coset_census(R, frozenset(kN), frozenset(iT))
    assert (rep.even_quotient.order, rep.even_quotient.census) == (even.order, even.census)
    assert (rep.odd_quotient.order, rep.odd_quotient.census) == (odd.order, odd.census)
    for q in (rep.even_quotient, rep.odd_quotient):
        assert sum(q.census.values()) == q.order


def test_tate_examples():
    rep = tate_quotients(modular(4, 2))
    assert (rep.even_quotient.order, rep.odd_quotient.order) == (2, 2)
    assert not rep.norm_one_found and rep.norm_one is None
    assert rep.even_quotient.census == {1: 1, 2: 1}
    assert rep.degree0 == {"invariants": 4, "coinvariants": 4}

    rep = tate_quotients(cyclic_product(2, 2))
    assert rep.vanishes and rep.norm_one == "(1,0)"
    rep = tate_quotients(modular(5, 2))
    assert rep.vanishes and rep.norm_one == "3"


def test_nonvanishing_examples():
    # trivial action on Z/m with n | m: both quotients are Z/n
    rep = tate_quotients(modular(6, 3))
    assert rep.even_quotient.invariants == [3] == rep.odd_quotient.invariants
    # Z[i]/4 with conjugation: no norm-one element
    from cyclic_homotopy.rings import gaussian

    rep = tate_quotients(gaussian(4))
    assert not rep.norm_one_found and not rep.vanishes


def test_vanishing_whenever_norm_one(small_ring):
    rep = tate_quotients(small_ring)
    if rep.norm_one_found:
        assert rep.vanishes


def test_vanishing_across_zoo():
    for R in zoo():
        rep = tate_quotients(R)
        assert rep.norm_one_found and rep.vanishes, R.describe()


def test_table_ring_tate(f4):
    rep = tate_quotients(f4)
    assert rep.vanishes and rep.norm_one == "w"


def test_broken_ring_consistency_error(broken_ring):
    with pytest.raises(ConsistencyError):
        tate_quotients(broken_ring)


def test_norm_preimage_examples():
    P = cyclic_product(2, 2)
    assert norm_preimage(P, (1, 0), (1, 1)) == (1, 0)
    assert norm_preimage(modular(5, 2), 3, 2) == 1
    with pytest.raises(PreconditionError, match="not t-invariant"):
        norm_preimage(P, (1, 0), (1, 0))
    with pytest.raises(PreconditionError, match="not 1"):
        norm_preimage(P, (1, 1), (1, 1))


def test_t_preimage_examples():
    P = cyclic_product(2, 2)
    assert t_preimage(P, (1, 0), (1, 1)) == ((0, 1), (1, 0))
    with pytest.raises(PreconditionError, match="not killed by N"):
        t_preimage(P, (1, 0), (1, 0))


def test_t_preimage_components_differ_on_z3_cubed():
    R = cyclic_product(3, 3)
    x = find_norm_one(R)
    differing = 0
    for a in R.elements():
        if op_N(R, a) == R.zero():
            h, hp = t_preimage(R, x, a)
            assert op_T(R, h) == a == op_T(R, hp)
            differing += h != hp
    assert differing > 0


def test_effectivity_exhaustive(small_ring):
    R = small_ring
    x = find_norm_one(R)
    if x is None:
        assert find_norm_one_exhaustive(R) == []
        return
    for a in R.elements():
        if op_T(R, a) == R.zero():
            assert op_N(R, norm_preimage(R, x, a)) == a
        if op_N(R, a) == R.zero():
            assert op_T(R, op_hx(R, x, a)) == a
            assert op_T(R, op_hpx(R, x, a)) == a


def test_norm_one_x_need_not_be_invariant():
    R = cyclic_product(3, 3)
    x = (1, 0, 0)
    assert op_N(R, x) == R.one() and op_T(R, x) != R.zero()
    assert norm_preimage(R, x, (2, 2, 2)) == (2, 0, 0)
