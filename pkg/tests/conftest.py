import pytest
from hypothesis import strategies as st

from cyclic_homotopy.freering import Family, FreePoly, Letter
from cyclic_homotopy.rings import RingSpec, build_ring, cyclic_product, gaussian, matrix_conj, modular


def letters(n):
    return st.builds(Letter, st.sampled_from(list(Family)), st.integers(0, n - 1))


def polys(n, max_terms=4, max_len=3):
    words = st.lists(letters(n), max_size=max_len).map(tuple)
    return st.dictionaries(words, st.integers(-5, 5), max_size=max_terms).map(lambda t: FreePoly(n, t))


def broken_z3_spec():
    """Z/3 with a 't' swapping 0 and 1: a permutation, but not additive."""
    return {
        "kind": "table",
        "n": 2,
        "elements": ["0", "1", "2"],
        "add": [[(i + j) % 3 for j in range(3)] for i in range(3)],
        "mul": [[i * j % 3 for j in range(3)] for i in range(3)],
        "t": [1, 0, 2],
    }


def f4_spec():
    """GF(4) = {0, 1, w, w^2} with Frobenius, which swaps w and w^2."""
    return {
        "kind": "table",
        "n": 2,
        "elements": ["0", "1", "w", "w2"],
        "add": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
        "mul": [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]],
        "t": [0, 1, 3, 2],
    }


@pytest.fixture
def broken_ring():
    return build_ring(broken_z3_spec(), validate=False)


@pytest.fixture
def f4():
    return build_ring(f4_spec())


SMALL_RINGS = [
    ("Z/5 trivial n=2", lambda: modular(5, 2)),
    ("Z/4 trivial n=2", lambda: modular(4, 2)),
    ("Z/6 trivial n=3", lambda: modular(6, 3)),
    ("(Z/2)^2 swap", lambda: cyclic_product(2, 2)),
    ("(Z/3)^3 shift", lambda: cyclic_product(3, 3)),
    ("(Z/4)^2 shift n=4", lambda: cyclic_product(4, 2, 4)),
    ("(Z/6)^2 swap", lambda: cyclic_product(6, 2)),
    ("Z[i]/5 conj", lambda: gaussian(5)),
    ("Z[i]/4 conj", lambda: gaussian(4)),
    ("Z[i]/3 conj n=4", lambda: gaussian(3, 4)),
    ("M2(Z/2) swap", lambda: matrix_conj(2, [1, 0])),
    ("M2(Z/3) swap", lambda: matrix_conj(3, [1, 0])),
    ("M3(Z/2) 3-cycle", lambda: matrix_conj(2, [1, 2, 0])),
    ("GF(4) Frobenius", lambda: build_ring(f4_spec())),
]


@pytest.fixture(params=SMALL_RINGS, ids=[name for name, _ in SMALL_RINGS])
def small_ring(request):
    return request.param[1]()
