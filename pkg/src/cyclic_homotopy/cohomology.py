"""Kernels, images and quotients of the periodic complex ``... -T-> R -N-> R -T-> ...``.

Positive-degree cohomology of the cyclic group is ``ker T / im N`` (even
position) and ``ker N / im T`` (odd position).  For the linear ring kinds these
subgroups come from Smith forms over ``Z/m``; table rings are enumerated.

When ``N(x) = 1`` the complex is contractible and every cycle has an explicit
preimage: :func:`norm_preimage` and :func:`t_preimage`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from . import zmod
from .base import CyclicHomotopyError, PreconditionError
from .operators import op_N, op_T, op_hpx, op_hx
from .rings import DEFAULT_ENUM_CAP, FiniteRing, LinearRing, find_norm_one

OPS = {"T": op_T, "N": op_N}


class ConsistencyError(CyclicHomotopyError):
    """``im N`` is not inside ``ker T`` (or ``im T`` not inside ``ker N``)."""


@dataclass
class SubgroupDescriptor:
    """An additive subgroup of a finite ring.

    ``generators`` always spans the subgroup; ``members`` is filled in when the
    subgroup was obtained by enumeration or is small enough to list.
    """

    ring: FiniteRing
    label: str
    order: int
    generators: list
    members: frozenset | None = None

    def __contains__(self, a) -> bool:
        if self.members is not None:
            return a in self.members
        ring = self.ring
        vecs = [ring.to_vector(g) for g in self.generators]
        return zmod.in_span(vecs, ring.to_vector(a), ring.m)

    def elements(self, cap: int = DEFAULT_ENUM_CAP) -> frozenset:
        if self.members is None:
            if self.order > cap:
                raise CyclicHomotopyError(f"{self.label} has {self.order} elements, cap is {cap}")
            self.members = _span(self.ring, self.generators)
        return self.members


def _span(ring, gens) -> frozenset:
    seen = {ring.zero()}
    frontier = [ring.zero()]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = ring.add(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(seen)


def _op_matrix(ring: LinearRing, op: str):
    f = OPS[op]
    return ring.additive_matrix(lambda b: f(ring, b))


def kernel(ring: FiniteRing, op: str, cap: int = DEFAULT_ENUM_CAP) -> SubgroupDescriptor:
    f = OPS[op]
    label = f"ker {op}"
    if isinstance(ring, LinearRing):
        M = _op_matrix(ring, op)
        gens = [ring.from_vector(v) for v in zmod.kernel_generators(M, ring.m)]
        return SubgroupDescriptor(ring, label, zmod.kernel_order(M, ring.m), gens)
    members = frozenset(a for a in ring.elements(cap) if ring.is_zero(f(ring, a)))
    return SubgroupDescriptor(ring, label, len(members), sorted(members), members)


def image(ring: FiniteRing, op: str, cap: int = DEFAULT_ENUM_CAP) -> SubgroupDescriptor:
    f = OPS[op]
    label = f"im {op}"
    if isinstance(ring, LinearRing):
        M = _op_matrix(ring, op)
        gens = [ring.from_vector(tuple(row[j] for row in M)) for j in range(ring.dim)]
        gens = [g for g in gens if not ring.is_zero(g)]
        return SubgroupDescriptor(ring, label, zmod.image_order(M, ring.m), gens)
    members = frozenset(f(ring, a) for a in ring.elements(cap))
    return SubgroupDescriptor(ring, label, len(members), sorted(members), members)


@dataclass
class Quotient:
    label: str
    order: int
    census: dict[int, int]
    invariants: list[int] | None = None

    def to_dict(self) -> dict:
        out = {
            "label": self.label,
            "order": self.order,
            "census": {str(k): v for k, v in sorted(self.census.items())},
        }
        if self.invariants is not None:
            out["invariants"] = self.invariants
        return out


@dataclass
class TateReport:
    ring: str
    even_quotient: Quotient
    odd_quotient: Quotient
    norm_one: Any = None
    norm_one_found: bool = False
    degree0: dict = field(default_factory=dict)

    @property
    def vanishes(self) -> bool:
        return self.even_quotient.order == 1 and self.odd_quotient.order == 1

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "even_quotient": self.even_quotient.to_dict(),
            "odd_quotient": self.odd_quotient.to_dict(),
            "norm_one_found": self.norm_one_found,
            "norm_one": self.norm_one,
            "vanishes": self.vanishes,
            "degree0": self.degree0,
        }


def _quotient(ring, big: SubgroupDescriptor, small: SubgroupDescriptor, cap) -> Quotient:
    label = f"{big.label} / {small.label}"
    for g in small.generators:
        if g not in big:
            raise ConsistencyError(
                f"{small.label} is not inside {big.label}: {ring.format_element(g)}"
            )
    if isinstance(ring, LinearRing):
        inv = zmod.quotient_invariants(
            [ring.to_vector(g) for g in big.generators],
            [ring.to_vector(g) for g in small.generators],
            ring.m,
            ring.dim,
        )
        census = zmod.order_census(inv)
        order = big.order // small.order
        return Quotient(label, order, census, inv)
    return coset_census(ring, big.elements(cap), small.elements(cap), label)


def coset_census(ring, big: frozenset, small: frozenset, label: str = "") -> Quotient:
    """Quotient order and element-order census by explicit coset enumeration."""
    remaining = set(big)
    census: dict[int, int] = {}
    while remaining:
        rep = min(remaining)
        coset = {ring.add(rep, s) for s in small}
        if not coset <= remaining:
            raise ConsistencyError(f"{label}: subgroup not contained or not closed")
        remaining -= coset
        k, cur = 1, rep
        while cur not in small:
            cur = ring.add(cur, rep)
            k += 1
        census[k] = census.get(k, 0) + 1
    order = len(big) // len(small)
    return Quotient(label, order, dict(sorted(census.items())))


def tate_quotients(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP) -> TateReport:
    """Both positive-degree quotients, the norm-one witness, and degree-0 orders."""
    kT, iN = kernel(ring, "T", cap), image(ring, "N", cap)
    kN, iT = kernel(ring, "N", cap), image(ring, "T", cap)
    even = _quotient(ring, kT, iN, cap)
    odd = _quotient(ring, kN, iT, cap)
    x = find_norm_one(ring, cap)
    return TateReport(
        ring=ring.describe(),
        even_quotient=even,
        odd_quotient=odd,
        norm_one=None if x is None else ring.format_element(x),
        norm_one_found=x is not None,
        degree0={"invariants": kT.order, "coinvariants": ring.size // iT.order},
    )


def _require_norm_one(ring, x):
    Nx = op_N(ring, x)
    if not ring.eq(Nx, ring.one()):
        raise PreconditionError(f"N(x) = {ring.format_element(Nx)}, not 1", value=Nx)


def norm_preimage(ring: FiniteRing, x, a):
    """``x a``, whose norm is ``a`` for ``t``-invariant ``a`` when ``N(x) = 1``."""
    _require_norm_one(ring, x)
    Ta = op_T(ring, a)
    if not ring.is_zero(Ta):
        raise PreconditionError(
            f"a = {ring.format_element(a)} is not t-invariant: T(a) = {ring.format_element(Ta)}",
            value=Ta,
        )
    out = ring.mul(x, a)
    assert op_N(ring, out) == a
    return out


def t_preimage(ring: FiniteRing, x, a) -> tuple:
    """``(h_x(a), h'_x(a))``; each maps to ``a`` under ``T`` when ``N(a) = 0``."""
    _require_norm_one(ring, x)
    Na = op_N(ring, a)
    if not ring.is_zero(Na):
        raise PreconditionError(
            f"a = {ring.format_element(a)} is not killed by N: N(a) = {ring.format_element(Na)}",
            value=Na,
        )
    h, hp = op_hx(ring, x, a), op_hpx(ring, x, a)
    assert op_T(ring, h) == a and op_T(ring, hp) == a
    return h, hp
