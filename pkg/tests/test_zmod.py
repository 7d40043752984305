import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from cyclic_homotopy import zmod


def all_vectors(m, d):
    return list(itertools.product(range(m), repeat=d))


def span_by_closure(vectors, m, d):
    seen = {(0,) * d}
    frontier = list(seen)
    while frontier:
        new = []
        for v in frontier:
            for g in vectors:
                w = tuple((a + b) % m for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    new.append(w)
        frontier = new
    return seen


@st.composite
def matrices(draw):
    m = draw(st.sampled_from([2, 3, 4, 6, 8, 9, 12]))
    rows = draw(st.integers(1, 3))
    cols = draw(st.integers(1, 3))
    M = [[draw(st.integers(-20, 20)) for _ in range(cols)] for _ in range(rows)]
    return m, M


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_kernel_and_image_match_enumeration(mM):
    m, M = mM
    rows, cols = len(M), len(M[0])
    domain = all_vectors(m, cols)
    images = {zmod.apply(M, v, m) for v in domain}
    kernel = {v for v in domain if not any(zmod.apply(M, v, m))}
    assert zmod.image_order(M, m) == len(images)
    assert zmod.kernel_order(M, m) == len(kernel)
    gens = zmod.kernel_generators(M, m)
    assert span_by_closure(gens, m, cols) == kernel
    for b in all_vectors(m, rows):
        v = zmod.solve(M, b, m)
        if b in images:
            assert v is not None and zmod.apply(M, v, m) == b
        else:
            assert v is None


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 4, 6, 9]), st.integers(1, 3), st.data())
def test_quotient_invariants_match_cosets(m, d, data):
    vec = st.tuples(*[st.integers(0, m - 1)] * d)
    big = data.draw(st.lists(vec, max_size=3))
    extra = data.draw(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 2)), max_size=3))
    # small subgroup: integer combinations of big's generators
    small = []
    for coeff, idx in extra:
        if big:
            small.append(tuple(coeff * x % m for x in big[idx % len(big)]))
    B = span_by_closure(big, m, d)
    S = span_by_closure(small, m, d)
    inv = zmod.quotient_invariants(big, small, m, d)
    order = 1
    for c in inv:
        order *= c
    assert order == len(B) // len(S)
    census = zmod.order_census(inv)
    # oracle: order of each coset of S in B
    seen, expected = set(), {}
    for v in sorted(B):
        if v in seen:
            continue
        coset = {tuple((a + b) % m for a, b in zip(v, s)) for s in S}
        seen |= coset
        k, cur = 1, v
        while cur not in S:
            cur = tuple((a + b) % m for a, b in zip(cur, v))
            k += 1
        expected[k] = expected.get(k, 0) + 1
    assert census == expected
    assert sum(census.values()) == order


def test_order_census_examples():
    assert zmod.order_census([]) == {1: 1}
    assert zmod.order_census([2, 2]) == {1: 1, 2: 3}
    assert zmod.order_census([4]) == {1: 1, 2: 1, 4: 2}
    assert zmod.order_census([2, 6]) == {1: 1, 2: 3, 3: 2, 6: 6}


def test_in_span():
    assert zmod.in_span([(2, 0)], (0, 0), 4)
    assert zmod.in_span([(2, 0)], (2, 0), 4)
    assert not zmod.in_span([(2, 0)], (1, 0), 4)
    assert not zmod.in_span([], (1, 0), 4)
