"""Free noncommutative ring over the integers on shift-indexed generators.

The ring has two families of generators ``X0 .. X{n-1}`` and ``A0 .. A{n-1}``.
The shift automorphism sends ``X_i`` to ``X_{i+1}`` and ``A_i`` to ``A_{i+1}``
(indices mod ``n``).  ``X0`` plays the role of the distinguished element ``x``
and ``A0`` of a generic ring element ``a``, so an operator identity that holds
as a polynomial identity here holds in every ring with an order-``n``
automorphism: evaluate with :func:`specialize`.

Polynomials print and parse in a canonical text form::

    >>> x0, a1 = generator("X", 0, 2), generator("A", 1, 2)
    >>> str(x0 * a1 - shift_apply(x0 * a1, 1))
    '1*X0.A1 + -1*X1.A0'

Words are ordered length-lexicographically with ``X0 < ... < X{n-1} < A0 < ...``.
"""

from __future__ import annotations

import enum
import re
from typing import Any, Iterable, Mapping, NamedTuple

from .base import CyclicHomotopyError, CyclicRing, PreconditionError, check_order

__all__ = [
    "Family",
    "Letter",
    "FreePoly",
    "ModulusMismatchError",
    "IncompatibleActionError",
    "ParseError",
    "generator",
    "poly_add",
    "poly_mul",
    "shift_apply",
    "specialize",
    "parse_poly",
    "UniversalRing",
]


class ModulusMismatchError(CyclicHomotopyError, ValueError):
    """Arithmetic between polynomials with different shift orders."""


class IncompatibleActionError(PreconditionError):
    """The target automorphism does not satisfy ``t**n == id`` on the images."""


class ParseError(CyclicHomotopyError, ValueError):
    pass


class Family(enum.IntEnum):
    X = 0
    A = 1


class Letter(NamedTuple):
    family: Family
    index: int

    def __str__(self):
        return f"{self.family.name}{self.index}"


Word = tuple  # tuple[Letter, ...]; () is the unit


def _word_key(word):
    return (len(word), word)


class FreePoly:
    """Immutable element of the free ring with integer coefficients.

    ``terms`` maps words (tuples of :class:`Letter`) to nonzero ints.  Zero
    coefficients are dropped on construction so equal polynomials have equal
    term maps.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Word, int] | None = None):
        self.n = check_order(n)
        clean = {}
        for word, c in (terms or {}).items():
            if c:
                for letter in word:
                    if not 0 <= letter.index < n:
                        raise ValueError(f"letter {letter} out of range for n={n}")
                clean[tuple(word)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, terms):
        # trusted constructor: terms already normalized
        p = object.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, n: int, c: int) -> FreePoly:
        return cls(n, {(): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """(word, coefficient) pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda item: _word_key(item[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = FreePoly.constant(self.n, other)
        if not isinstance(other, FreePoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, int):
            return FreePoly.constant(self.n, other)
        if isinstance(other, FreePoly):
            if other.n != self.n:
                raise ModulusMismatchError(f"shift orders differ: {self.n} != {other.n}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for word, c in other._terms.items():
            s = terms.get(word, 0) + c
            if s:
                terms[word] = s
            else:
                terms.pop(word, None)
        return FreePoly._raw(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return FreePoly._raw(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                s = terms.get(w, 0) + c1 * c2
                if s:
                    terms[w] = s
                else:
                    terms.pop(w, None)
        return FreePoly._raw(self.n, terms)

    def __rmul__(self, other):
        if isinstance(other, int):
            return FreePoly.constant(self.n, other) * self
        return NotImplemented

    def shift(self, k: int = 1) -> FreePoly:
        k %= self.n
        if k == 0:
            return self
        n = self.n
        return FreePoly._raw(
            n,
            {
                tuple(Letter(f, (i + k) % n) for f, i in word): c
                for word, c in self._terms.items()
            },
        )

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for word, c in self.items():
            body = ".".join(map(str, word)) if word else "1"
            parts.append(f"{c}*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FreePoly(n={self.n}, {str(self)!r})"


def generator(family, i: int, n: int) -> FreePoly:
    """The one-letter polynomial ``X_i`` or ``A_i`` (index reduced mod ``n``)."""
    check_order(n)
    fam = Family[family] if isinstance(family, str) else Family(family)
    return FreePoly._raw(n, {(Letter(fam, i % n),): 1})


def poly_add(p: FreePoly, q: FreePoly) -> FreePoly:
    return p + q


def poly_mul(p: FreePoly, q: FreePoly) -> FreePoly:
    return p * q


def shift_apply(p: FreePoly, k: int) -> FreePoly:
    """``t**k`` applied to ``p``; negative ``k`` is reduced mod ``n``."""
    return p.shift(k)


_TERM_RE = re.compile(r"^(-?\d+)\*(1|[XA]\d+(?:\.[XA]\d+)*)$")


def parse_poly(text: str, n: int) -> FreePoly:
    """Inverse of ``str(FreePoly)``.

    Accepts ``0`` or terms ``<int>*<word>`` joined by `` + `` where a word is
    ``1`` or letters like ``X0``/``A3`` joined by ``.``.
    """
    check_order(n)
    text = text.strip()
    if text == "0":
        return FreePoly(n)
    terms: dict = {}
    for chunk in text.split(" + "):
        match = _TERM_RE.match(chunk)
        if not match:
            raise ParseError(f"malformed term {chunk!r}")
        coeff, body = int(match.group(1)), match.group(2)
        if body == "1":
            word = ()
        else:
            word = []
            for tok in body.split("."):
                idx = int(tok[1:])
                if idx >= n:
                    raise ParseError(f"letter {tok} out of range for n={n}")
                word.append(Letter(Family[tok[0]], idx))
            word = tuple(word)
        if coeff == 0:
            raise ParseError(f"zero coefficient in term {chunk!r}")
        if word in terms:
            raise ParseError(f"repeated word in {chunk!r}")
        terms[word] = coeff
    return FreePoly(n, terms)


def specialize(p: FreePoly, target: CyclicRing, x_val: Any, a_val: Any) -> Any:
    """Evaluate ``p`` in ``target`` along the equivariant map ``X0 -> x, A0 -> a``.

    Letter ``X_i`` goes to ``t^i(x_val)`` and ``A_i`` to ``t^i(a_val)``.  The
    map is well defined exactly when ``t^n`` fixes both values, which is
    checked.
    """
    n = p.n
    images = {}
    for family, val in ((Family.X, x_val), (Family.A, a_val)):
        if not target.eq(target.t(val, n), val):
            raise IncompatibleActionError(
                f"t^{n} does not fix the image of {family.name}", value=val
            )
        cur = val
        for i in range(n):
            images[Letter(family, i)] = cur
            cur = target.t(cur, 1)
    total = target.zero()
    for word, c in p.items():
        value = target.one()
        for letter in word:
            value = target.mul(value, images[letter])
        total = target.add(total, target.scale(c, value))
    return total


class UniversalRing(CyclicRing):
    """The free ring as a :class:`CyclicRing`, with generic ``x = X0``, ``a = A0``."""

    def __init__(self, n: int):
        self.n = check_order(n)
        self.x = generator(Family.X, 0, n)
        self.a = generator(Family.A, 0, n)
        self._zero = FreePoly(n)
        self._one = FreePoly.constant(n, 1)

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def t(self, a, k=1):
        return a.shift(k)

    def scale(self, c, a):
        return c * a

    def from_int(self, c):
        return FreePoly.constant(self.n, c)

    def is_zero(self, a):
        return a.is_zero()

    def describe(self):
        return f"U{self.n} (free ring on X0..X{self.n - 1}, A0..A{self.n - 1})"

    def generic_samples(self) -> Iterable[FreePoly]:
        return [self.a]
