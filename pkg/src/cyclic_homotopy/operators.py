"""Norm and trace-difference operators and the homotopies built from them.

For a ring ``R`` with automorphism ``t`` of order dividing ``n``::

    T = t - id                    N = id + t + ... + t^(n-1)
    j_x(a)  = x a                 j'_x(a) = x t(a)
    h_x(a)  = -sum_{i=1}^{n-1} t^i(x) (id + ... + t^(i-1))(a)
    h'_x(a) =  sum_{i=1}^{n-1} (id + ... + t^(i-1))(x t^(-i)(a))

Every function takes the ring first, so the same code runs on the free ring
(:class:`~cyclic_homotopy.freering.UniversalRing`) and on finite rings.

Identities are registered as ``(lhs, rhs)`` builders in :data:`IDENTITIES`;
the ``check_*`` functions evaluate a group of them over samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .base import CyclicHomotopyError, CyclicRing, PreconditionError

__all__ = [
    "CyclicRing",
    "CheckResult",
    "Identity",
    "IDENTITIES",
    "GROUPS",
    "NoInverseError",
    "op_T",
    "op_N",
    "partial_sum",
    "op_jx",
    "op_jpx",
    "op_hx",
    "op_hpx",
    "inverse_of_n",
    "h_special",
    "hp_special",
    "check_identities",
    "check_eq1",
    "check_lemma1",
    "check_corollary1",
    "check_proposition",
    "check_homotopy",
    "check_special_case",
]


class NoInverseError(CyclicHomotopyError, ValueError):
    """``n`` is not invertible in the ring."""


def op_T(r: CyclicRing, a):
    return r.sub(r.t(a, 1), a)


def op_N(r: CyclicRing, a):
    return partial_sum(r, r.n, a)


def partial_sum(r: CyclicRing, i: int, a):
    """``a + t(a) + ... + t^(i-1)(a)`` for ``0 <= i <= n``."""
    if not 0 <= i <= r.n:
        raise ValueError(f"partial sum length {i} outside [0, {r.n}]")
    total = r.zero()
    cur = a
    for _ in range(i):
        total = r.add(total, cur)
        cur = r.t(cur, 1)
    return total


def op_jx(r: CyclicRing, x, a):
    return r.mul(x, a)


def op_jpx(r: CyclicRing, x, a):
    return r.mul(x, r.t(a, 1))


def op_hx(r: CyclicRing, x, a):
    total = r.zero()
    tx = x
    partial = r.zero()
    ta = a
    for _ in range(1, r.n):
        # partial = (id + ... + t^(i-1))(a), tx = t^i(x)
        partial = r.add(partial, ta)
        ta = r.t(ta, 1)
        tx = r.t(tx, 1)
        total = r.add(total, r.mul(tx, partial))
    return r.neg(total)


def op_hpx(r: CyclicRing, x, a):
    n = r.n
    total = r.zero()
    for i in range(1, n):
        # t^(-i) realized as t^(n-i)
        total = r.add(total, partial_sum(r, i, r.mul(x, r.t(a, n - i))))
    return total


def _additive_order(r: CyclicRing, a, limit: int = 1 << 20) -> int | None:
    cur = a
    for k in range(1, limit + 1):
        if r.is_zero(cur):
            return k
        cur = r.add(cur, a)
    return None


def inverse_of_n(r: CyclicRing):
    """The element ``u = n^{-1} * 1``, or :class:`NoInverseError`.

    ``n`` is invertible iff it is prime to the characteristic; ``u`` is then an
    integer multiple of 1, hence central and ``t``-invariant.
    """
    char = getattr(r, "characteristic", None)
    if char is None:
        char = _additive_order(r, r.one())
    if char is None or char == 0:
        raise NoInverseError(f"cannot invert n={r.n}: characteristic unknown or zero")
    if math.gcd(r.n, char) != 1:
        raise NoInverseError(f"n={r.n} is not invertible in characteristic {char}")
    return r.from_int(pow(r.n, -1, char))


def _weighted(r: CyclicRing, weights, a):
    total = r.zero()
    cur = a
    for w in weights:
        total = r.add(total, r.scale(w, cur))
        cur = r.t(cur, 1)
    return total


def h_special(r: CyclicRing, a, u=None):
    """Closed form of ``h_x`` at ``x = 1/n``: ``-u * sum_j (n-1-j) t^j(a)``."""
    if u is None:
        u = inverse_of_n(r)
    n = r.n
    return r.neg(r.mul(u, _weighted(r, [n - 1 - j for j in range(n)], a)))


def hp_special(r: CyclicRing, a, u=None):
    """Closed form of ``h'_x`` at ``x = 1/n``: ``u * sum_j j t^j(a)``."""
    if u is None:
        u = inverse_of_n(r)
    return r.mul(u, _weighted(r, range(r.n), a))


# -- identities ---------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    name: str
    group: str
    sides: Callable[[CyclicRing, Any, Any], tuple]


def _eq1(r, x, a):
    Na = op_N(r, a)
    return {
        "t.N = N": (r.t(Na, 1), Na),
        "N.t = N": (op_N(r, r.t(a, 1)), Na),
        "T.N = 0": (op_T(r, Na), r.zero()),
        "N.T = 0": (op_N(r, op_T(r, a)), r.zero()),
    }


def _lemma1(r, x, a):
    return {
        "j'_x - j_x = x T": (r.sub(op_jpx(r, x, a), op_jx(r, x, a)), r.mul(x, op_T(r, a))),
        "h'_x - h_x = N(x)N - N(x .)": (
            r.sub(op_hpx(r, x, a), op_hx(r, x, a)),
            r.sub(r.mul(op_N(r, x), op_N(r, a)), op_N(r, r.mul(x, a))),
        ),
    }


def _corollary1(r, x, a):
    Ta = op_T(r, a)
    Na = op_N(r, a)
    return {
        "j_x.N = j'_x.N": (op_jx(r, x, Na), op_jpx(r, x, Na)),
        "T.h_x = T.h'_x": (op_T(r, op_hx(r, x, a)), op_T(r, op_hpx(r, x, a))),
        "N.j_x + h_x.T = N.j'_x + h'_x.T": (
            r.add(op_N(r, op_jx(r, x, a)), op_hx(r, x, Ta)),
            r.add(op_N(r, op_jpx(r, x, a)), op_hpx(r, x, Ta)),
        ),
    }


def _homotopy_sums(r, x, a):
    Ta = op_T(r, a)
    Na = op_N(r, a)
    return {
        "N.j_x + h_x.T": r.add(op_N(r, op_jx(r, x, a)), op_hx(r, x, Ta)),
        "j_x.N + T.h_x": r.add(op_jx(r, x, Na), op_T(r, op_hx(r, x, a))),
        "N.j'_x + h'_x.T": r.add(op_N(r, op_jpx(r, x, a)), op_hpx(r, x, Ta)),
        "j'_x.N + T.h'_x": r.add(op_jpx(r, x, Na), op_T(r, op_hpx(r, x, a))),
    }


def _proposition(r, x, a):
    lhs = r.mul(op_N(r, x), a)
    return {f"N(x) a = {name}": (lhs, value) for name, value in _homotopy_sums(r, x, a).items()}


def _homotopy(r, x, a):
    return {f"{name} = id": (value, a) for name, value in _homotopy_sums(r, x, a).items()}


GROUPS: dict[str, Callable] = {
    "eq1": _eq1,
    "lemma1": _lemma1,
    "corollary1": _corollary1,
    "proposition": _proposition,
    "homotopy": _homotopy,
}


def _registry():
    from .freering import UniversalRing

    u = UniversalRing(2)
    out = {}
    for group, builder in GROUPS.items():
        for name in builder(u, u.x, u.a):
            out[name] = Identity(
                name,
                group,
                lambda r, x, a, _b=builder, _n=name: _b(r, x, a)[_n],
            )
    return out


IDENTITIES: dict[str, Identity] = _registry()


# -- checkers -----------------------------------------------------------------


@dataclass
class CheckResult:
    """Outcome of checking one group of identities.

    ``witness`` is set on failure: the identity, its inputs and both sides.
    ``detail`` holds optional extra output (e.g. both sides of a symbolic pass).
    """

    name: str
    passed: bool
    checked: int = 0
    witness: dict | None = None
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failed CheckResult needs a witness")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "witness": self.witness,
            "detail": self.detail,
        }


def _fmt(r, value):
    return r.format_element(value) if hasattr(r, "format_element") else str(value)


def check_identities(
    r: CyclicRing, group: str, points: Iterable[tuple], echo: bool = False
) -> CheckResult:
    """Check every identity of ``group`` at each ``(x, a)`` point.

    Points are visited in order and the first failure becomes the witness.
    With ``echo`` the sides of the last point are kept in ``detail``.
    """
    builder = GROUPS[group]
    checked = 0
    detail = {}
    for x, a in points:
        for name, (lhs, rhs) in builder(r, x, a).items():
            checked += 1
            if not r.eq(lhs, rhs):
                return CheckResult(
                    group,
                    False,
                    checked,
                    witness={
                        "identity": name,
                        "x": _fmt(r, x),
                        "a": _fmt(r, a),
                        "lhs": _fmt(r, lhs),
                        "rhs": _fmt(r, rhs),
                    },
                )
            if echo:
                detail[name] = {"lhs": _fmt(r, lhs), "rhs": _fmt(r, rhs)}
    return CheckResult(group, True, checked, detail=detail)


def _points(x, samples):
    return ((x, a) for a in samples)


def check_eq1(r: CyclicRing, samples: Iterable) -> CheckResult:
    """``t N = N t = N`` and ``T N = N T = 0`` on each sample."""
    return check_identities(r, "eq1", _points(r.zero(), samples))


def check_lemma1(r: CyclicRing, x, a, echo: bool = False) -> CheckResult:
    return check_identities(r, "lemma1", [(x, a)], echo=echo)


def check_corollary1(r: CyclicRing, x, samples: Iterable) -> CheckResult:
    return check_identities(r, "corollary1", _points(x, samples))


def check_proposition(r: CyclicRing, x, samples: Iterable) -> CheckResult:
    """The four ways of writing left multiplication by ``N(x)``."""
    return check_identities(r, "proposition", _points(x, samples))


def check_homotopy(r: CyclicRing, x, samples: Iterable) -> CheckResult:
    """The four homotopy sums equal the identity; requires ``N(x) = 1``."""
    Nx = op_N(r, x)
    if not r.eq(Nx, r.one()):
        raise PreconditionError(f"N(x) = {_fmt(r, Nx)} is not 1", value=Nx)
    return check_identities(r, "homotopy", _points(x, samples))


def check_special_case(r: CyclicRing, samples: Iterable) -> CheckResult:
    """Closed forms at ``x = 1/n`` against the general ``h_x``, ``h'_x``."""
    u = inverse_of_n(r)
    checked = 0
    for a in samples:
        pairs = {
            "h_x = closed form": (op_hx(r, u, a), h_special(r, a, u)),
            "h'_x = closed form": (op_hpx(r, u, a), hp_special(r, a, u)),
        }
        for name, (lhs, rhs) in pairs.items():
            checked += 1
            if not r.eq(lhs, rhs):
                return CheckResult(
                    "special_case",
                    False,
                    checked,
                    witness={
                        "identity": name,
                        "x": _fmt(r, u),
                        "a": _fmt(r, a),
                        "lhs": _fmt(r, lhs),
                        "rhs": _fmt(r, rhs),
                    },
                )
    return CheckResult("special_case", True, checked, detail={"u": _fmt(r, u)})
