import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclic_homotopy.base import InvalidModulusError
from cyclic_homotopy.freering import (
    Family,
    FreePoly,
    IncompatibleActionError,
    Letter,
    ModulusMismatchError,
    ParseError,
    UniversalRing,
    generator,
    parse_poly,
    poly_add,
    poly_mul,
    shift_apply,
    specialize,
)
from cyclic_homotopy.operators import op_N
from cyclic_homotopy.rings import build_ring, cyclic_product, gaussian, matrix_conj, modular

from conftest import polys

X, A = Family.X, Family.A


def x(i, n=2):
    return generator("X", i, n)


def a(i, n=2):
    return generator("A", i, n)


def test_add_examples():
    assert poly_add(x(0), -x(0)).is_zero()
    s = poly_add(x(0), x(1))
    assert s.terms == {(Letter(X, 0),): 1, (Letter(X, 1),): 1}
    assert poly_add(2 * (x(0) * a(1)), 3 * (x(0) * a(1))) == 5 * (x(0) * a(1))


def test_mul_is_noncommutative():
    p, q = poly_mul(x(0), a(1)), poly_mul(a(1), x(0))
    assert p.terms == {(Letter(X, 0), Letter(A, 1)): 1}
    assert q.terms == {(Letter(A, 1), Letter(X, 0)): 1}
    assert p != q


def test_mul_hand_expansion():
    got = (x(0) + x(1)) * (a(0) + a(1))
    expected = {
        (Letter(X, i), Letter(A, j)): 1 for i in range(2) for j in range(2)
    }
    assert got.terms == expected
    assert len(got) == 4


def test_unit_law():
    p = 3 * x(0) * a(1) - a(0)
    one = FreePoly.constant(2, 1)
    assert p * one == p == one * p


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatchError):
        x(0, 2) + x(0, 3)
    with pytest.raises(ModulusMismatchError):
        x(0, 2) * x(0, 3)


def test_generator():
    assert str(generator("X", 0, 2)) == "1*X0"
    assert str(generator("X", 5, 3)) == "1*X2"
    assert str(generator(Family.A, 1, 4)) == "1*A1"
    with pytest.raises(InvalidModulusError):
        generator("X", 0, 1)


def test_shift_examples():
    assert shift_apply(x(0) * a(1), 1) == x(1) * a(0)
    assert shift_apply(x(0, 3) * a(2, 3), -1) == x(2, 3) * a(1, 3)


def test_canonical_text():
    p = x(0) * a(1) - shift_apply(x(0) * a(1), 1)
    assert str(p) == "1*X0.A1 + -1*X1.A0"
    assert str(FreePoly(2)) == "0"
    assert str(FreePoly.constant(2, 1) + x(1)) == "1*1 + 1*X1"
    # letter order: all X before all A, then length-lex on words
    q = a(0, 3) + x(2, 3) + x(0, 3) * x(0, 3)
    assert str(q) == "1*X2 + 1*A0 + 1*X0.X0"


@pytest.mark.parametrize("bad", ["1*X2", "0*X0", "X0", "1*X0 + 2*X0", "1*B0", "1*X0+1*X1"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_poly(bad, 2)


@given(st.integers(2, 5).flatmap(lambda n: polys(n)))
def test_text_round_trip(p):
    assert parse_poly(str(p), p.n) == p
    assert str(parse_poly(str(p), p.n)) == str(p)


@given(polys(3), polys(3), polys(3))
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert p + q == q + p
    assert p + 0 == p
    assert p * 1 == p == 1 * p
    assert (p - p).is_zero()


@given(polys(4), polys(4), st.integers(-10, 10), st.integers(-10, 10))
def test_shift_automorphism(p, q, j, k):
    assert shift_apply(p * q, k) == shift_apply(p, k) * shift_apply(q, k)
    assert shift_apply(p + q, k) == shift_apply(p, k) + shift_apply(q, k)
    assert shift_apply(p, 4) == p
    assert shift_apply(shift_apply(p, j), k) == shift_apply(p, j + k)


@given(polys(3))
def test_normal_form_has_no_zero_coefficients(p):
    assert all(c != 0 for c in p.terms.values())
    assert all(0 <= l.index < 3 for w in p.terms for l in w)


def test_word_concatenation_associative():
    u, v, w = x(0) * a(1), a(0), x(1) * x(1) * a(0)
    assert ((u * v) * w).terms == (u * (v * w)).terms
    one = FreePoly.constant(2, 1)
    assert (one * u).terms == u.terms


# -- specialization -----------------------------------------------------------


def test_specialize_examples():
    R = modular(5, 2)
    assert specialize(x(0) * a(1), R, 3, 2) == 1
    assert specialize(FreePoly.constant(2, 1), R, 4, 4) == 1
    assert specialize(FreePoly.constant(2, 1), cyclic_product(2, 2), (1, 0), (0, 1)) == (1, 1)


def test_specialize_norm_matches_concrete(small_ring):
    import random

    R = small_ring
    rng = random.Random(7)
    U = UniversalRing(R.n)
    Npoly = op_N(U, U.x)
    for _ in range(20):
        xv = R.random_element(rng)
        assert specialize(Npoly, R, xv, R.zero()) == op_N(R, xv)


def test_specialize_rejects_incompatible_action():
    R = cyclic_product(2, 3)  # shift of order 3
    with pytest.raises(IncompatibleActionError):
        specialize(x(0, 2), R, (1, 0, 0), R.zero())
    # fixed points of t^2 are allowed even though t has order 3
    assert specialize(x(0, 2), R, (1, 1, 1), R.zero()) == (1, 1, 1)


HOM_RINGS = [
    modular(7, 3),
    cyclic_product(3, 3),
    gaussian(5),
    matrix_conj(3, [1, 0]),
    matrix_conj(2, [1, 2, 0]),
]


@settings(max_examples=60)
@given(st.sampled_from(HOM_RINGS), st.data())
def test_specialize_is_equivariant_homomorphism(R, data):
    import random

    n = R.n
    p, q = data.draw(polys(n)), data.draw(polys(n))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    xv, av = R.random_element(rng), R.random_element(rng)
    f = lambda poly: specialize(poly, R, xv, av)
    assert f(p * q) == R.mul(f(p), f(q))
    assert f(p + q) == R.add(f(p), f(q))
    assert f(shift_apply(p, 1)) == R.t(f(p))
