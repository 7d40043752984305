"""Finite rings with an automorphism of order dividing ``n``.

Five kinds, built from a :class:`RingSpec` by :func:`build_ring`:

``modular_trivial``
    ``Z/m`` with ``t = id``; elements are ints, literal ``3``.
``cyclic_product``
    ``(Z/m)^k`` with ``t`` moving coordinate ``i`` to ``i+1``; requires ``k | n``.
    Elements are tuples, literal ``(1,0,2)``.
``gaussian_conj``
    ``Z[i]/m`` with complex conjugation; requires ``n`` even.  Elements are
    pairs ``(a, b)`` for ``a + b i``, literal ``3+2i``.
``matrix_perm_conj``
    ``M_k(Z/m)`` with ``t(X) = P X P^-1`` for the permutation matrix of
    ``sigma``; requires ``ord(sigma) | n``.  Literal ``[[1,0],[0,1]]``.
``table``
    Explicit addition, multiplication and automorphism tables over named
    elements.

The first four are free ``Z/m``-modules (:class:`LinearRing`), so additive
maps such as the norm become integer matrices mod ``m``.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterator

from . import zmod
from .base import CyclicHomotopyError, CyclicRing, TooLargeError, check_order

DEFAULT_ENUM_CAP = 65536
EXHAUSTIVE_LIMIT = 4096
PAIR_LIMIT = 10**6
N_RANDOM = 1000
DEFAULT_SEED = 20040217
TABLE_TOTAL_LIMIT = 64
LINEAR_RANDOM = 200

KINDS = ("modular_trivial", "cyclic_product", "gaussian_conj", "matrix_perm_conj", "table")


class SpecValidationError(CyclicHomotopyError, ValueError):
    """A ring spec is malformed or a ring law fails.

    ``law`` names the failed law, ``witness`` the offending elements.
    """

    def __init__(self, message: str, law: str | None = None, witness: Any = None):
        super().__init__(message)
        self.law = law
        self.witness = witness


class ElementParseError(CyclicHomotopyError, ValueError):
    pass


def perm_order(sigma) -> int:
    seen = set()
    order = 1
    for start in range(len(sigma)):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = sigma[j]
            length += 1
        order = math.lcm(order, length)
    return order


@dataclass(frozen=True)
class RingSpec:
    kind: str
    n: int
    m: int | None = None
    k: int | None = None
    sigma: tuple | None = None
    elements: tuple | None = None
    add: tuple | None = None
    mul: tuple | None = None
    t: tuple | None = None

    @classmethod
    def from_dict(cls, data: dict) -> RingSpec:
        if not isinstance(data, dict):
            raise SpecValidationError("ring spec must be an object")
        kind = data.get("kind")
        if kind not in KINDS:
            raise SpecValidationError(f"unknown ring kind {kind!r}; expected one of {KINDS}")
        allowed = {
            "modular_trivial": {"m"},
            "cyclic_product": {"m", "k"},
            "gaussian_conj": {"m"},
            "matrix_perm_conj": {"m", "k", "sigma"},
            "table": {"elements", "add", "mul", "t"},
        }[kind]
        extra = set(data) - allowed - {"kind", "n"}
        if extra:
            raise SpecValidationError(f"unexpected fields for {kind}: {sorted(extra)}")
        missing = allowed - set(data)
        if kind == "matrix_perm_conj":
            missing -= {"k"}
        if "n" not in data:
            missing.add("n")
        if missing:
            raise SpecValidationError(f"missing fields for {kind}: {sorted(missing)}")

        def tup(v):
            return tuple(tup(x) for x in v) if isinstance(v, list) else v

        return cls(kind=kind, **{key: tup(val) for key, val in data.items() if key != "kind"})

    @classmethod
    def load(cls, path) -> RingSpec:
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise SpecValidationError(f"{path}: not valid JSON ({exc})") from exc
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind, "n": self.n}
        for key in ("m", "k", "sigma", "elements", "add", "mul", "t"):
            val = getattr(self, key)
            if val is not None:
                out[key] = json.loads(json.dumps(val))
        return out

    def canonical(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


class FiniteRing(CyclicRing):
    """Common machinery for finite rings: enumeration, sampling, literals."""

    spec: RingSpec
    size: int

    def elements(self, cap: int = DEFAULT_ENUM_CAP) -> list:
        if self.size > cap:
            raise TooLargeError(f"ring has {self.size} elements, enumeration cap is {cap}")
        return list(self._iter_elements())

    def _iter_elements(self) -> Iterator:
        raise NotImplementedError

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    def parse_element(self, text: str):
        raise NotImplementedError

    def describe(self) -> str:
        return self.spec.canonical()

    @property
    def t_order(self) -> int:
        """Exact order of the automorphism (computed on the elements)."""
        raise NotImplementedError


def sample(ring: FiniteRing, seed: int = DEFAULT_SEED, limit: int = EXHAUSTIVE_LIMIT,
           n_random: int = N_RANDOM) -> tuple[list, dict]:
    """Elements to check and a policy record.

    All elements when ``|R| <= limit``, else ``n_random`` seeded random draws.
    """
    if ring.size <= limit:
        return ring.elements(cap=max(limit, ring.size)), {"mode": "exhaustive", "count": ring.size}
    rng = random.Random(seed)
    elems = [ring.random_element(rng) for _ in range(n_random)]
    return elems, {"mode": "random", "count": n_random, "seed": seed}


def sample_pairs(ring: FiniteRing, seed: int = DEFAULT_SEED, limit: int = PAIR_LIMIT,
                 n_random: int = N_RANDOM) -> tuple[list, dict]:
    """Pairs ``(x, a)``: exhaustive while ``|R|^2 <= limit``, else seeded random."""
    if ring.size**2 <= limit:
        elems = ring.elements(cap=ring.size)
        return list(itertools.product(elems, elems)), {"mode": "exhaustive", "count": ring.size**2}
    rng = random.Random(seed)
    pairs = [(ring.random_element(rng), ring.random_element(rng)) for _ in range(n_random)]
    return pairs, {"mode": "random", "count": n_random, "seed": seed}


# -- linear kinds ---------------------------------------------------------------


class LinearRing(FiniteRing):
    """A ring whose additive group is ``(Z/m)^dim`` with a fixed basis."""

    m: int
    dim: int

    @property
    def characteristic(self) -> int:
        return self.m

    def to_vector(self, a) -> tuple:
        raise NotImplementedError

    def from_vector(self, v):
        raise NotImplementedError

    def basis(self) -> list:
        return [
            self.from_vector(tuple(1 if i == j else 0 for j in range(self.dim)))
            for i in range(self.dim)
        ]

    def additive_matrix(self, f) -> list[list[int]]:
        """Matrix of an additive map ``f`` in the standard basis."""
        cols = [self.to_vector(f(b)) for b in self.basis()]
        return zmod.columns_matrix(cols, self.dim)

    def add(self, a, b):
        return self.from_vector(tuple((x + y) % self.m for x, y in zip(self.to_vector(a), self.to_vector(b))))

    def neg(self, a):
        return self.from_vector(tuple(-x % self.m for x in self.to_vector(a)))

    def scale(self, c, a):
        return self.from_vector(tuple(c * x % self.m for x in self.to_vector(a)))

    def _iter_elements(self):
        for v in itertools.product(range(self.m), repeat=self.dim):
            yield self.from_vector(v)

    def random_element(self, rng):
        return self.from_vector(tuple(rng.randrange(self.m) for _ in range(self.dim)))

    @property
    def t_order(self) -> int:
        basis = self.basis()
        for k in range(1, self.n + 1):
            if self.n % k == 0 and all(self.t(b, k) == b for b in basis):
                # t is additive, so fixing a basis means fixing everything
                return k
        return 0


def _parse_int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ElementParseError(f"not an integer: {text!r}") from None


class ModularTrivial(LinearRing):
    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.n = spec.n
        self.m = spec.m
        self.dim = 1
        self.size = self.m

    def zero(self):
        return 0

    def one(self):
        return 1 % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return -a % self.m

    def sub(self, a, b):
        return (a - b) % self.m

    def mul(self, a, b):
        return a * b % self.m

    def scale(self, c, a):
        return c * a % self.m

    def t(self, a, k=1):
        return a

    def to_vector(self, a):
        return (a,)

    def from_vector(self, v):
        return v[0] % self.m

    def parse_element(self, text):
        return _parse_int(text) % self.m

    def format_element(self, a):
        return str(a)


class CyclicProduct(LinearRing):
    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.n = spec.n
        self.m = spec.m
        self.dim = spec.k
        self.size = self.m**self.dim

    def zero(self):
        return (0,) * self.dim

    def one(self):
        return (1 % self.m,) * self.dim

    def add(self, a, b):
        return tuple((x + y) % self.m for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.m for x in a)

    def mul(self, a, b):
        return tuple(x * y % self.m for x, y in zip(a, b))

    def t(self, a, k=1):
        k %= self.dim
        return a[-k:] + a[:-k] if k else a

    def to_vector(self, a):
        return a

    def from_vector(self, v):
        return tuple(x % self.m for x in v)

    def parse_element(self, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ElementParseError(f"expected a tuple like (1,0), got {text!r}")
        parts = [p for p in text[1:-1].split(",")]
        if len(parts) != self.dim:
            raise ElementParseError(f"expected {self.dim} coordinates, got {len(parts)}")
        return tuple(_parse_int(p) % self.m for p in parts)

    def format_element(self, a):
        return "(" + ",".join(map(str, a)) + ")"


_SIGNED_INT = re.compile(r"^[+-]?\d+$")


class GaussianConj(LinearRing):
    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.n = spec.n
        self.m = spec.m
        self.dim = 2
        self.size = self.m**2

    def zero(self):
        return (0, 0)

    def one(self):
        return (1 % self.m, 0)

    def mul(self, a, b):
        m = self.m
        return ((a[0] * b[0] - a[1] * b[1]) % m, (a[0] * b[1] + a[1] * b[0]) % m)

    def t(self, a, k=1):
        return (a[0], -a[1] % self.m) if k % 2 else a

    def to_vector(self, a):
        return a

    def from_vector(self, v):
        return (v[0] % self.m, v[1] % self.m)

    def parse_element(self, text):
        s = text.replace(" ", "")
        if not s:
            raise ElementParseError("empty Gaussian literal")
        if s.endswith("i"):
            cut = max(s.rfind("+", 1, -1), s.rfind("-", 1, -1))
            real, imag = (s[:cut], s[cut:-1]) if cut > 0 else ("", s[:-1])
            imag = {"": "1", "+": "1", "-": "-1"}.get(imag, imag)
        else:
            real, imag = s, "0"
        if not _SIGNED_INT.match(real or "0") or not _SIGNED_INT.match(imag):
            raise ElementParseError(f"expected a Gaussian literal like 3+2i, got {text!r}")
        return (int(real or 0) % self.m, int(imag) % self.m)

    def format_element(self, a):
        re_val, im_val = a
        if im_val == 0:
            return str(re_val)
        if re_val == 0:
            return f"{im_val}i"
        return f"{re_val}+{im_val}i"


class MatrixPermConj(LinearRing):
    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.n = spec.n
        self.m = spec.m
        self.sigma = tuple(spec.sigma)
        self.k = len(self.sigma)
        self.dim = self.k**2
        self.size = self.m**self.dim
        self._powers = {}

    def zero(self):
        return tuple((0,) * self.k for _ in range(self.k))

    def one(self):
        return tuple(tuple(1 % self.m if i == j else 0 for j in range(self.k)) for i in range(self.k))

    def mul(self, a, b):
        k, m = self.k, self.m
        return tuple(
            tuple(sum(a[i][l] * b[l][j] for l in range(k)) % m for j in range(k)) for i in range(k)
        )

    def _sigma_power(self, e):
        e %= perm_order(self.sigma)
        if e not in self._powers:
            p = list(range(self.k))
            for _ in range(e):
                p = [self.sigma[j] for j in p]
            self._powers[e] = p
        return self._powers[e]

    def t(self, a, k=1):
        s = self._sigma_power(k)
        out = [[0] * self.k for _ in range(self.k)]
        for i in range(self.k):
            for j in range(self.k):
                out[s[i]][s[j]] = a[i][j]
        return tuple(map(tuple, out))

    def to_vector(self, a):
        return tuple(v for row in a for v in row)

    def from_vector(self, v):
        k = self.k
        return tuple(tuple(v[i * k + j] % self.m for j in range(k)) for i in range(k))

    def parse_element(self, text):
        try:
            rows = json.loads(text)
        except json.JSONDecodeError:
            raise ElementParseError(f"expected a matrix like [[1,0],[0,1]], got {text!r}") from None
        if (
            not isinstance(rows, list)
            or len(rows) != self.k
            or any(not isinstance(r, list) or len(r) != self.k for r in rows)
            or any(not isinstance(v, int) for r in rows for v in r)
        ):
            raise ElementParseError(f"expected a {self.k}x{self.k} integer matrix, got {text!r}")
        return tuple(tuple(v % self.m for v in r) for r in rows)

    def format_element(self, a):
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in a) + "]"


# -- table rings ---------------------------------------------------------------


class TableRing(FiniteRing):
    """Ring given by explicit tables over element indices ``0 .. size-1``."""

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.n = spec.n
        names = spec.elements
        size = len(names) if names else 0
        if size == 0:
            raise SpecValidationError("table ring needs at least one element")
        if len(set(names)) != size or not all(isinstance(s, str) and s for s in names):
            raise SpecValidationError("element names must be distinct non-empty strings")
        for label in ("add", "mul"):
            table = getattr(spec, label)
            if len(table) != size or any(len(row) != size for row in table):
                raise SpecValidationError(f"{label} table must be {size}x{size}")
            if any(not isinstance(v, int) or not 0 <= v < size for row in table for v in row):
                raise SpecValidationError(f"{label} table entries must be indices in [0, {size})")
        if sorted(spec.t) != list(range(size)):
            raise SpecValidationError("t must be a permutation of the element indices")
        self.names = tuple(names)
        self.index = {name: i for i, name in enumerate(names)}
        self.size = size
        self.add_table = spec.add
        self.mul_table = spec.mul
        self.perm = tuple(spec.t)
        zeros = [e for e in range(size) if all(self.add_table[e][a] == a == self.add_table[a][e] for a in range(size))]
        ones = [e for e in range(size) if all(self.mul_table[e][a] == a == self.mul_table[a][e] for a in range(size))]
        if not zeros:
            raise SpecValidationError("no additive identity", law="additive identity")
        if not ones:
            raise SpecValidationError("no multiplicative identity", law="multiplicative identity")
        self._zero, self._one = zeros[0], ones[0]
        self._neg = []
        for a in range(size):
            inv = [b for b in range(size) if self.add_table[a][b] == self._zero]
            if not inv:
                raise SpecValidationError(
                    f"{names[a]} has no additive inverse", law="additive inverse", witness=[names[a]]
                )
            self._neg.append(inv[0])
        self._perm_pows = {0: tuple(range(size))}

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def add(self, a, b):
        return self.add_table[a][b]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def t(self, a, k=1):
        k %= perm_order(self.perm)
        if k not in self._perm_pows:
            p = list(range(self.size))
            for _ in range(k):
                p = [self.perm[j] for j in p]
            self._perm_pows[k] = tuple(p)
        return self._perm_pows[k][a]

    @property
    def t_order(self) -> int:
        return perm_order(self.perm)

    def _iter_elements(self):
        return iter(range(self.size))

    def random_element(self, rng):
        return rng.randrange(self.size)

    def parse_element(self, text):
        try:
            return self.index[text.strip()]
        except KeyError:
            raise ElementParseError(f"unknown element {text!r}") from None

    def format_element(self, a):
        return self.names[a]


# -- construction and validation ----------------------------------------------


def _require_int(spec, name, minimum):
    val = getattr(spec, name)
    if not isinstance(val, int) or isinstance(val, bool) or val < minimum:
        raise SpecValidationError(f"{name} must be an integer >= {minimum}, got {val!r}", law=name)
    return val


def _check_params(spec: RingSpec):
    try:
        check_order(spec.n)
    except ValueError as exc:
        raise SpecValidationError(str(exc), law="n") from None
    kind = spec.kind
    if kind != "table":
        _require_int(spec, "m", 2)
    if kind == "cyclic_product":
        k = _require_int(spec, "k", 1)
        if spec.n % k:
            raise SpecValidationError(f"cyclic shift on {k} coordinates needs k | n, n={spec.n}", law="order")
    elif kind == "gaussian_conj":
        if spec.n % 2:
            raise SpecValidationError(f"conjugation has order 2; n={spec.n} must be even", law="order")
    elif kind == "matrix_perm_conj":
        sigma = spec.sigma
        if not isinstance(sigma, tuple) or sorted(sigma) != list(range(len(sigma))) or len(sigma) < 1:
            raise SpecValidationError(f"sigma must be a permutation of 0..k-1, got {sigma!r}", law="sigma")
        if spec.k is not None and spec.k != len(sigma):
            raise SpecValidationError(f"k={spec.k} does not match len(sigma)={len(sigma)}", law="sigma")
        if spec.n % perm_order(sigma):
            raise SpecValidationError(
                f"sigma has order {perm_order(sigma)}, which does not divide n={spec.n}", law="order"
            )


_CLASSES = {
    "modular_trivial": ModularTrivial,
    "cyclic_product": CyclicProduct,
    "gaussian_conj": GaussianConj,
    "matrix_perm_conj": MatrixPermConj,
    "table": TableRing,
}


def _fail(ring, law, *elems):
    names = [ring.format_element(e) for e in elems]
    raise SpecValidationError(f"{law} fails at {names}", law=law, witness=names)


def validate_ring(ring: FiniteRing, seed: int = DEFAULT_SEED) -> None:
    """Check ring axioms and automorphism laws; raise :class:`SpecValidationError`.

    Linear kinds: every law below is multilinear, so it is checked on all
    tuples of basis vectors (which proves it everywhere) plus seeded random
    tuples.  Table rings: unary laws on every element when ``|R| <= 4096``,
    pair laws while ``|R|^2 <= 10^6``, triple laws up to 64 elements; seeded
    random samples beyond those sizes.
    """
    rng = random.Random(seed)

    def draws(k, count):
        return [tuple(ring.random_element(rng) for _ in range(k)) for _ in range(count)]

    if isinstance(ring, LinearRing):
        basis = ring.basis()
        singles = basis + [s[0] for s in draws(1, LINEAR_RANDOM)]
        pairs = list(itertools.product(basis, repeat=2)) + draws(2, LINEAR_RANDOM)
        triples = list(itertools.product(basis, repeat=3)) + draws(3, LINEAR_RANDOM)
    else:
        singles, _ = sample(ring, seed)
        pairs, _ = sample_pairs(ring, seed)
        if ring.size <= TABLE_TOTAL_LIMIT:
            triples = itertools.product(ring.elements(), repeat=3)
        else:
            triples = draws(3, N_RANDOM)

    r, n = ring, ring.n
    zero, one = r.zero(), r.one()
    if r.t(one) != one:
        _fail(r, "t(1) = 1", one)
    for a in singles:
        if r.add(a, zero) != a:
            _fail(r, "a + 0 = a", a)
        if r.add(a, r.neg(a)) != zero:
            _fail(r, "a + (-a) = 0", a)
        if r.mul(a, one) != a or r.mul(one, a) != a:
            _fail(r, "1 a = a 1 = a", a)
        if r.t(a, n) != a:
            _fail(r, f"t^{n} = id", a)
    for a, b in pairs:
        if r.add(a, b) != r.add(b, a):
            _fail(r, "a + b = b + a", a, b)
        if r.t(r.add(a, b)) != r.add(r.t(a), r.t(b)):
            _fail(r, "t(a + b) = t(a) + t(b)", a, b)
        if r.t(r.mul(a, b)) != r.mul(r.t(a), r.t(b)):
            _fail(r, "t(a b) = t(a) t(b)", a, b)
    for a, b, c in triples:
        if r.add(r.add(a, b), c) != r.add(a, r.add(b, c)):
            _fail(r, "(a + b) + c = a + (b + c)", a, b, c)
        if r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)):
            _fail(r, "(a b) c = a (b c)", a, b, c)
        if r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)):
            _fail(r, "a (b + c) = a b + a c", a, b, c)
        if r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)):
            _fail(r, "(a + b) c = a c + b c", a, b, c)


def build_ring(spec: RingSpec | dict, validate: bool = True, seed: int = DEFAULT_SEED) -> FiniteRing:
    """Construct the ring for ``spec``.

    Parameter invariants are always enforced.  With ``validate`` the ring and
    automorphism laws are also checked (see :func:`validate_ring`); pass
    ``validate=False`` only for deliberately broken negative controls.
    """
    if isinstance(spec, dict):
        spec = RingSpec.from_dict(spec)
    if spec.kind not in _CLASSES:
        raise SpecValidationError(f"unknown ring kind {spec.kind!r}")
    _check_params(spec)
    ring = _CLASSES[spec.kind](spec)
    if validate:
        validate_ring(ring, seed)
    return ring


def enumerate_ring(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP) -> list:
    return ring.elements(cap)


def find_norm_one(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP):
    """Some ``x`` with ``N(x) = 1``, or ``None`` if there is none.

    Linear kinds solve ``N x = 1`` modulo ``m``; table rings are searched
    exhaustively.
    """
    from .operators import op_N

    one = ring.one()
    if isinstance(ring, LinearRing):
        M = ring.additive_matrix(lambda b: op_N(ring, b))
        v = zmod.solve(M, ring.to_vector(one), ring.m)
        if v is None:
            return None
        x = ring.from_vector(v)
    else:
        x = next((e for e in ring.elements(cap) if op_N(ring, e) == one), None)
        if x is None:
            return None
    assert op_N(ring, x) == one
    return x


def find_norm_one_exhaustive(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP) -> list:
    """Every ``x`` with ``N(x) = 1`` (enumeration oracle)."""
    from .operators import op_N

    one = ring.one()
    return [e for e in ring.elements(cap) if op_N(ring, e) == one]


# -- named constructors used by tests and demos --------------------------------


def modular(m: int, n: int) -> FiniteRing:
    return build_ring(RingSpec("modular_trivial", n, m=m))


def cyclic_product(m: int, k: int, n: int | None = None) -> FiniteRing:
    return build_ring(RingSpec("cyclic_product", k if n is None else n, m=m, k=k))


def gaussian(m: int, n: int = 2) -> FiniteRing:
    return build_ring(RingSpec("gaussian_conj", n, m=m))


def matrix_conj(m: int, sigma, n: int | None = None) -> FiniteRing:
    sigma = tuple(sigma)
    return build_ring(
        RingSpec("matrix_perm_conj", perm_order(sigma) if n is None else n, m=m, k=len(sigma), sigma=sigma)
    )


def zoo() -> list[FiniteRing]:
    """Rings with a norm-one element used for the homotopy and vanishing suites."""
    rings = [cyclic_product(m, k) for m in (2, 3, 4, 5) for k in (2, 3, 4)]
    rings += [gaussian(m) for m in (3, 5, 7)]
    rings += [modular(m, n) for m in (2, 3, 5, 7, 11) for n in (2, 3, 4) if math.gcd(m, n) == 1]
    return rings
