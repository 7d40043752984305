"""Ring-with-automorphism interface shared by the symbolic and finite backends."""

from __future__ import annotations

import abc
from typing import Any, Iterable


class CyclicHomotopyError(Exception):
    """Base class for errors raised by this package."""


class InvalidModulusError(CyclicHomotopyError, ValueError):
    """The order ``n`` of the automorphism is not an integer >= 2."""


class PreconditionError(CyclicHomotopyError, ValueError):
    """A mathematical hypothesis of an operation does not hold.

    ``value`` carries the offending element (already computed in the ring).
    """

    def __init__(self, message: str, value: Any = None):
        super().__init__(message)
        self.value = value


class TooLargeError(CyclicHomotopyError):
    """A ring exceeds the enumeration cap."""


def check_order(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidModulusError(f"automorphism order must be an integer >= 2, got {n!r}")
    return n


class CyclicRing(abc.ABC):
    """A unital ring together with an automorphism ``t`` with ``t**n == id``.

    Subclasses supply the ring operations and ``t``; everything in
    :mod:`cyclic_homotopy.operators` is written against this interface.
    Elements must be hashable and compare with ``==``.
    """

    n: int

    @abc.abstractmethod
    def zero(self) -> Any: ...

    @abc.abstractmethod
    def one(self) -> Any: ...

    @abc.abstractmethod
    def add(self, a: Any, b: Any) -> Any: ...

    @abc.abstractmethod
    def neg(self, a: Any) -> Any: ...

    @abc.abstractmethod
    def mul(self, a: Any, b: Any) -> Any: ...

    @abc.abstractmethod
    def t(self, a: Any, k: int = 1) -> Any:
        """Apply the automorphism ``k`` times (``k`` is taken modulo ``n``)."""

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero())

    def sum(self, items: Iterable) -> Any:
        total = self.zero()
        for item in items:
            total = self.add(total, item)
        return total

    def scale(self, c: int, a):
        """Integer multiple ``c * a`` by double-and-add."""
        if c < 0:
            c, a = -c, self.neg(a)
        result = self.zero()
        while c:
            if c & 1:
                result = self.add(result, a)
            a = self.add(a, a)
            c >>= 1
        return result

    def from_int(self, c: int):
        return self.scale(c, self.one())

    def format_element(self, a) -> str:
        return str(a)

    def describe(self) -> str:
        return f"{type(self).__name__}(n={self.n})"
