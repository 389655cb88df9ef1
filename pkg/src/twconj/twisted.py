"""Twisted conjugacy by brute force.

``x`` and ``y`` are ``phi``-conjugate when ``x = g y phi(g)^-1`` for some
``g``.  The classes are the orbits of the left action
``g . y = g y phi(g)^-1``, so it is enough to follow the generators of the
group; orbits are merged with a union-find.  Everything here is exact and
serves as the reference that the formula paths elsewhere are checked against.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np

from .errors import NotAutomorphism, NotInvariant, NotNormal
from .extnat import INF, ExtNat, Spectrum, ext_product, ext_sum  # noqa: F401  (re-exported)
from .finite_group import FiniteGroup, Subgroup
from .hom_engine import (
    DEFAULT_BUDGET,
    GroupHom,
    compose,
    enumerate_automorphisms,
    inner_automorphism,
)
from .unionfind import UnionFind


@dataclass(frozen=True, eq=False)
class ReidemeisterPartition:
    """The ``phi``-twisted conjugacy classes of ``group``.

    ``classes`` are sorted tuples ordered by their minimal element, which is
    also the class representative.
    """

    group: FiniteGroup
    endo: GroupHom
    classes: tuple

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    @cached_property
    def class_of(self) -> np.ndarray:
        out = np.empty(self.group.order, dtype=np.int64)
        for i, cls in enumerate(self.classes):
            out[list(cls)] = i
        return out

    @property
    def number(self) -> ExtNat:
        return ExtNat(len(self.classes))

    def __len__(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {"reidemeister_number": len(self.classes),
                "classes": [list(c) for c in self.classes],
                "representatives": list(self.representatives)}


def _check_endo(G: FiniteGroup, phi: GroupHom) -> None:
    if phi.domain != G or phi.codomain != G:
        raise ValueError("expected an endomorphism of the given group")


def reidemeister_partition(G: FiniteGroup, phi: GroupHom) -> ReidemeisterPartition:
    _check_endo(G, phi)
    uf = UnionFind(G.order)
    for g in G.generators:
        moved = G.mul[G.mul[g], G.inv[phi.map[g]]]
        uf.union_pairs(np.arange(G.order), moved)
    return ReidemeisterPartition(G, phi, tuple(uf.blocks()))


def reidemeister_number(G: FiniteGroup, phi: GroupHom) -> ExtNat:
    return reidemeister_partition(G, phi).number


def twisted_stabilizer(G: FiniteGroup, phi: GroupHom, a: int) -> Subgroup:
    """``{b : a = b a phi(b)^-1}``."""
    _check_endo(G, phi)
    hits = G.mul[G.mul[:, a], G.inv[phi.map]] == a
    return Subgroup(G, np.flatnonzero(hits).tolist())


def fixed_points(phi: GroupHom) -> Subgroup:
    hits = phi.map == np.arange(phi.domain.order)
    return Subgroup(phi.domain, np.flatnonzero(hits).tolist())


def reidemeister_spectrum(G: FiniteGroup, automorphisms: Sequence[GroupHom] | None = None,
                          budget: int = DEFAULT_BUDGET) -> Spectrum:
    if automorphisms is None:
        automorphisms = enumerate_automorphisms(G, budget=budget)
    return Spectrum(reidemeister_number(G, f) for f in automorphisms)


def check_inner_invariance(G: FiniteGroup, phi: GroupHom, g: int) -> bool:
    """``R(tau_g o phi) == R(phi)``, both sides computed directly."""
    twisted = compose(inner_automorphism(G, g), phi)
    return reidemeister_number(G, twisted) == reidemeister_number(G, phi)


def check_conjugate_invariance(G: FiniteGroup, phi: GroupHom, psi: GroupHom) -> bool:
    """``R(phi) == R(psi^-1 o phi o psi)`` for an automorphism ``psi``."""
    if not psi.is_automorphism:
        raise NotAutomorphism("conjugating map must be an automorphism")
    conjugate = compose(psi.inverse(), compose(phi, psi))
    return reidemeister_number(G, conjugate) == reidemeister_number(G, phi)


class Quotient(NamedTuple):
    group: FiniteGroup
    endo: GroupHom
    projection: np.ndarray


def quotient_endo(G: FiniteGroup, N: Subgroup, phi: GroupHom) -> Quotient:
    """``G/N`` with the endomorphism induced by ``phi``.

    Cosets are numbered by their minimal element, so the coset ``N`` itself
    is the identity 0.  ``projection[x]`` is the coset index of ``x``.
    """
    _check_endo(G, phi)
    if not N.is_normal():
        raise NotNormal("subgroup is not normal")
    if not N.mask[phi.map[N.array]].all():
        raise NotInvariant("subgroup is not mapped into itself")
    projection = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for x in range(G.order):
        if projection[x] < 0:
            projection[G.mul[x, N.array]] = len(reps)
            reps.append(x)
    reps = np.array(reps)
    mul = projection[G.mul[np.ix_(reps, reps)]]
    label = f"{G.label}/N" if G.label else None
    Q = FiniteGroup(mul, label=label)
    induced = GroupHom(Q, Q, projection[phi.map[reps]])
    return Quotient(Q, induced, projection)


def jabara_bound(r: int) -> int:
    return 1 << (1 << r)


def jabara_bound_check(G: FiniteGroup, phi: GroupHom) -> bool:
    """``|Fix(phi)| <= 2^(2^r)`` with ``r = R(phi)``, in exact integer arithmetic."""
    if not phi.is_automorphism:
        raise NotAutomorphism("the fixed-point bound is stated for automorphisms")
    r = int(reidemeister_number(G, phi))
    fix = fixed_points(phi).order
    exponent = 1 << r
    # fix <= 2**exponent without materialising the power for large r
    return fix.bit_length() <= exponent or fix == 1 << exponent
