"""Linear algebra over Z/m for composite m, via the Smith form over Z.

Matrices are lists of rows of Python ints; vectors are tuples.  A matrix
``M`` (rows x cols) acts on column vectors of ``(Z/m)^cols``.  With
``S M V = D`` (``S``, ``V`` unimodular, ``D`` diagonal) the equation
``M v = b (mod m)`` decouples into ``d_i y_i = (S b)_i (mod m)`` for
``v = V y``.
"""

from __future__ import annotations

import math
from functools import lru_cache

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp


class _Smith:
    __slots__ = ("diag", "S", "V", "rows", "cols")

    def __init__(self, M, rows, cols):
        self.rows, self.cols = rows, cols
        if rows == 0 or cols == 0:
            self.diag = []
            self.S = Matrix.eye(rows)
            self.V = Matrix.eye(cols)
            return
        D, S, V = smith_normal_decomp(Matrix(M), domain=ZZ)
        self.diag = [abs(int(D[i, i])) for i in range(min(rows, cols))]
        # fold signs into S so D is nonnegative
        for i in range(min(rows, cols)):
            if D[i, i] < 0:
                S[i, :] = -S[i, :]
        self.S, self.V = S, V

    def d(self, i):
        return self.diag[i] if i < len(self.diag) else 0


@lru_cache(maxsize=256)
def _smith_cached(key):
    rows, cols, flat = key
    M = [list(flat[i * cols:(i + 1) * cols]) for i in range(rows)]
    return _Smith(M, rows, cols)


def smith(M: list[list[int]]) -> _Smith:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    return _smith_cached((rows, cols, tuple(int(v) for row in M for v in row)))


def _shape(M):
    rows = len(M)
    return rows, (len(M[0]) if rows else 0)


def image_order(M, m: int) -> int:
    """Order of the column span of ``M`` in ``(Z/m)^rows``."""
    sm = smith(M)
    order = 1
    for d in sm.diag:
        order *= m // math.gcd(d, m)
    return order


def kernel_generators(M, m: int) -> list[tuple]:
    """Generators of ``{v : M v = 0 mod m}``, one per column of ``M``."""
    sm = smith(M)
    _, cols = _shape(M)
    gens = []
    for i in range(cols):
        step = m // math.gcd(sm.d(i), m)
        col = [int(sm.V[j, i]) * step % m for j in range(cols)]
        if any(col):
            gens.append(tuple(col))
    return gens


def kernel_order(M, m: int) -> int:
    _, cols = _shape(M)
    return m**cols // image_order(M, m)


def solve(M, b, m: int) -> tuple | None:
    """Some ``v`` with ``M v = b (mod m)``, or ``None`` if no solution exists."""
    rows, cols = _shape(M)
    if len(b) != rows:
        raise ValueError("right-hand side has the wrong length")
    sm = smith(M)
    c = [sum(int(sm.S[i, j]) * b[j] for j in range(rows)) % m for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        d = sm.d(i) if i < cols else 0
        g = math.gcd(d, m)
        if c[i] % g:
            return None
        if i < cols and g != m:
            mg = m // g
            y[i] = (c[i] // g) * pow((d // g) % mg, -1, mg) % mg
    return tuple(sum(int(sm.V[j, i]) * y[i] for i in range(cols)) % m for j in range(cols))


def apply(M, v, m: int) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, v)) % m for row in M)


def columns_matrix(vectors, dim: int) -> list[list[int]]:
    """Matrix whose columns are ``vectors`` (``dim`` rows)."""
    return [[vec[i] for vec in vectors] for i in range(dim)]


def span_order(vectors, m: int, dim: int) -> int:
    if not vectors:
        return 1
    return image_order(columns_matrix(vectors, dim), m)


def in_span(vectors, v, m: int) -> bool:
    if not vectors:
        return not any(x % m for x in v)
    return solve(columns_matrix(vectors, len(v)), v, m) is not None


def quotient_invariants(big, small, m: int, dim: int) -> list[int]:
    """Invariant factors (all > 1) of ``<big> / <small>`` inside ``(Z/m)^dim``.

    Both spans are lifted to lattices containing ``m Z^dim``.  If ``S K V = D``
    for the generators ``K`` of the big lattice, then ``S^{-1} D`` is a basis and
    ``D^{-1} S`` gives coordinates; the Smith form of the small generators in
    those coordinates is the quotient.  Raises ``ValueError`` if ``small`` is
    not contained in ``big``.
    """
    eye = [tuple(m if i == j else 0 for j in range(dim)) for i in range(dim)]
    big_l = columns_matrix(list(big) + eye, dim)
    small_l = columns_matrix(list(small) + eye, dim)
    sm = smith(big_l)
    coords = []
    for i in range(dim):
        d = sm.d(i)
        row = []
        for j in range(len(small_l[0])):
            val = sum(int(sm.S[i, k]) * small_l[k][j] for k in range(dim))
            if val % d:
                raise ValueError("subgroup is not contained in the larger subgroup")
            row.append(val // d)
        coords.append(row)
    return [d for d in smith(coords).diag if d != 1]


def order_census(invariants: list[int]) -> dict[int, int]:
    """Number of elements of each order in ``Z/c_1 x ... x Z/c_r``."""
    exponent = 1
    for c in invariants:
        exponent = math.lcm(exponent, c)
    divisors = [k for k in range(1, exponent + 1) if exponent % k == 0]
    census: dict[int, int] = {}
    for k in divisors:
        at_most = math.prod(math.gcd(k, c) for c in invariants)
        census[k] = at_most - sum(v for d, v in census.items() if k % d == 0)
    return {k: v for k, v in census.items() if v}
