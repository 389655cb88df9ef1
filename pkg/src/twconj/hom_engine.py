"""Group homomorphisms between finite groups, and their enumeration.

A :class:`GroupHom` stores the full element map, so evaluation is a table
lookup.  Enumeration is a backtracking search over generator images in
lexicographic order; after each generator is assigned the partial map is
extended to the subgroup generated so far and checked there, which prunes
most branches long before all generators are placed.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DomainMismatch,
    ImagesDoNotCommute,
    NotAHomomorphism,
    SearchBudgetExceeded,
)
from .finite_group import FiniteGroup, Subgroup

DEFAULT_BUDGET = 10_000_000


class GroupHom:
    """A homomorphism ``domain -> codomain`` stored as a total element map."""

    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup, map, check: bool = True):
        arr = np.array(map, dtype=np.int64)
        if arr.shape != (domain.order,):
            raise NotAHomomorphism(message=f"map has length {arr.size}, domain has order {domain.order}")
        if arr.size and (arr.min() < 0 or arr.max() >= codomain.order):
            raise NotAHomomorphism(message="map has entries outside the codomain")
        arr.setflags(write=False)
        self.domain = domain
        self.codomain = codomain
        self.map = arr
        self._key = arr.tobytes()
        if check:
            pair = _law_violation(domain, codomain, arr)
            if pair is not None:
                raise NotAHomomorphism(pair)

    def __call__(self, x):
        if isinstance(x, (int, np.integer)):
            return int(self.map[x])
        return self.map[x]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        return (self._key == other._key and self.domain == other.domain
                and self.codomain == other.codomain)

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"GroupHom({self.domain.order}->{self.codomain.order}, {self.map.tolist()})"

    def __matmul__(self, other: "GroupHom") -> "GroupHom":
        return compose(self, other)

    @property
    def is_endomorphism(self) -> bool:
        return self.domain == self.codomain

    @cached_property
    def is_trivial(self) -> bool:
        return not self.map.any()

    @cached_property
    def is_injective(self) -> bool:
        return len(np.unique(self.map)) == self.domain.order

    @cached_property
    def is_bijective(self) -> bool:
        return self.domain.order == self.codomain.order and self.is_injective

    @property
    def is_automorphism(self) -> bool:
        return self.is_endomorphism and self.is_bijective

    def inverse(self) -> "GroupHom":
        if not self.is_bijective:
            raise ValueError("only bijective homomorphisms have an inverse")
        inv = np.empty_like(self.map)
        inv[self.map] = np.arange(self.domain.order)
        return GroupHom(self.codomain, self.domain, inv, check=False)

    def to_json(self) -> dict:
        return {"domain_order": self.domain.order, "codomain_order": self.codomain.order,
                "map": self.map.tolist()}


def _law_violation(G: FiniteGroup, H: FiniteGroup, m: np.ndarray):
    ok = H.mul[m[:, None], m[None, :]] == m[G.mul]
    if ok.all():
        return None
    x, y = np.argwhere(~ok)[0]
    return int(x), int(y)


def hom_from_json(data: dict, domain: FiniteGroup, codomain: FiniteGroup | None = None) -> GroupHom:
    codomain = domain if codomain is None else codomain
    if data.get("domain_order", domain.order) != domain.order:
        raise DomainMismatch("domain_order does not match the domain group")
    if data.get("codomain_order", codomain.order) != codomain.order:
        raise DomainMismatch("codomain_order does not match the codomain group")
    return GroupHom(domain, codomain, data["map"])


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, np.arange(G.order), check=False)


def trivial_hom(G: FiniteGroup, H: FiniteGroup) -> GroupHom:
    return GroupHom(G, H, np.zeros(G.order, dtype=np.int64), check=False)


def hom_from_generator_images(G: FiniteGroup, H: FiniteGroup, images: Sequence[int]) -> GroupHom:
    """Extend generator images along ``G.words`` and verify the result.

    Raises :class:`NotAHomomorphism` with a witnessing pair when the
    extension is not multiplicative.
    """
    images = [int(i) for i in images]
    if len(images) != len(G.generators):
        raise NotAHomomorphism(message=f"expected {len(G.generators)} generator images, got {len(images)}")
    if any(not 0 <= i < H.order for i in images):
        raise NotAHomomorphism(message="generator image outside the codomain")
    m = np.array([G.eval_word(G.words[x], images, H.mul) for x in range(G.order)], dtype=np.int64)
    gen_ok = all(m[g] == images[i] for i, g in enumerate(G.generators))
    if not gen_ok:
        # a generator whose own word differs from itself only happens for the
        # identity-as-generator of the trivial group
        bad = next(i for i, g in enumerate(G.generators) if m[g] != images[i])
        raise NotAHomomorphism(message=f"generator {G.generators[bad]} cannot map to {images[bad]}")
    return GroupHom(G, H, m)


def compose(f: GroupHom, g: GroupHom) -> GroupHom:
    """``f o g``, i.e. ``x -> f(g(x))``."""
    if g.codomain != f.domain:
        raise DomainMismatch("codomain of the inner map is not the domain of the outer map")
    return GroupHom(g.domain, f.codomain, f.map[g.map], check=False)


def images_commute(H: FiniteGroup, a: Sequence[int] | np.ndarray, b: Sequence[int] | np.ndarray) -> bool:
    """Whether every element of ``a`` commutes with every element of ``b`` in ``H``."""
    a = np.unique(np.asarray(a, dtype=np.int64))
    b = np.unique(np.asarray(b, dtype=np.int64))
    return bool(np.array_equal(H.mul[np.ix_(a, b)], H.mul[np.ix_(b, a)].T))


def pointwise_product(f: GroupHom, g: GroupHom) -> GroupHom:
    """``x -> f(x) g(x)``; requires ``[im f, im g] = 1``."""
    if f.domain != g.domain or f.codomain != g.codomain:
        raise DomainMismatch("pointwise product needs equal domains and codomains")
    H = f.codomain
    if not images_commute(H, f.map, g.map):
        raise ImagesDoNotCommute("images of the two homomorphisms do not commute")
    return GroupHom(f.domain, H, H.mul[f.map, g.map])


def inner_automorphism(G: FiniteGroup, g: int) -> GroupHom:
    """``x -> g x g^-1``."""
    return GroupHom(G, G, G.mul[G.mul[g], G.inv[g]], check=False)


def hom_image(f: GroupHom) -> Subgroup:
    return Subgroup(f.codomain, np.unique(f.map).tolist(), check=False)


def hom_kernel(f: GroupHom) -> Subgroup:
    return Subgroup(f.domain, np.flatnonzero(f.map == 0).tolist(), check=False)


# -- enumeration --------------------------------------------------------------

class _Plan:
    """Per-prefix subgroup data for the search over ``G``'s generators.

    ``levels[k]`` holds the BFS order of ``<g_0..g_k>``: for each new element
    its parent and the generator index multiplied on the right.
    """

    def __init__(self, G: FiniteGroup):
        gens = G.generators
        inside = np.zeros(G.order, dtype=bool)
        inside[0] = True
        members = [0]
        self.levels = []
        for k in range(len(gens)):
            steps = []
            queue = list(members)
            head = 0
            while head < len(queue):
                x = queue[head]
                head += 1
                for i in range(k + 1):
                    y = int(G.mul[x, gens[i]])
                    if not inside[y]:
                        inside[y] = True
                        steps.append((y, x, i))
                        queue.append(y)
            members = queue
            elems = np.array(sorted(members), dtype=np.int64)
            self.levels.append((steps, elems, G.mul[np.ix_(elems, elems)]))


def enumerate_homs(G: FiniteGroup, H: FiniteGroup, budget: int = DEFAULT_BUDGET,
                   automorphisms: bool = False, injective: bool = False) -> Iterator[GroupHom]:
    """Yield every homomorphism ``G -> H`` once, lexicographic in generator images.

    A generator's image must have order dividing the generator's order (equal
    order with ``injective=True``).  ``budget`` caps the number of candidate
    nodes visited; exceeding it raises :class:`SearchBudgetExceeded`.
    """
    injective = injective or automorphisms
    if automorphisms and G.order != H.order:
        return
    gens = G.generators
    plan = _Plan(G)
    g_orders = [G.element_order(g) for g in gens]
    h_orders = H.element_orders
    candidates = []
    for o in g_orders:
        ok = (h_orders == o) if injective else (o % h_orders == 0)
        candidates.append(np.flatnonzero(ok).tolist())

    m = np.full(G.order, -1, dtype=np.int64)
    m[0] = 0
    images = [0] * len(gens)
    nodes = 0

    def extend(k: int) -> bool:
        steps, elems, sub_mul = plan.levels[k]
        for y, x, i in steps:
            m[y] = H.mul[m[x], images[i]]
        sub = m[elems]
        if injective and len(np.unique(sub)) != len(sub):
            return False
        return bool((H.mul[sub[:, None], sub[None, :]] == m[sub_mul]).all())

    def search(k: int):
        nonlocal nodes
        if k == len(gens):
            yield GroupHom(G, H, m.copy(), check=False)
            return
        for c in candidates[k]:
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(
                    f"homomorphism search {G.order}->{H.order} exceeded {budget} candidate nodes")
            images[k] = c
            if extend(k):
                yield from search(k + 1)
        for y, _, _ in plan.levels[k][0]:
            m[y] = -1

    if G.order == 1:
        yield GroupHom(G, H, np.zeros(1, dtype=np.int64), check=False)
        return
    yield from search(0)


def enumerate_endomorphisms(G: FiniteGroup, budget: int = DEFAULT_BUDGET) -> list[GroupHom]:
    return list(enumerate_homs(G, G, budget=budget))


_AUT_CACHE: dict = {}


def enumerate_automorphisms(G: FiniteGroup, budget: int = DEFAULT_BUDGET,
                            verify: bool = True) -> list[GroupHom]:
    """All automorphisms of ``G``, identity first when it is lexicographically first.

    With ``verify`` the result is checked to be closed under composition and
    inverses.  Results are cached per group table.
    """
    key = (G, G.generators)
    if key in _AUT_CACHE:
        return list(_AUT_CACHE[key])
    auts = list(enumerate_homs(G, G, budget=budget, automorphisms=True))
    if verify:
        _verify_closed(G, auts)
    _AUT_CACHE[key] = tuple(auts)
    return auts


def _verify_closed(G: FiniteGroup, auts: list[GroupHom]) -> None:
    """Check that ``auts`` is a group under composition.

    Picks generators ``T`` greedily until the closure of ``T`` has ``|auts|``
    elements, then checks ``auts o T`` stays inside ``auts``.  Together these
    give closure without the quadratic all-pairs check.
    """
    members = {f.map.tobytes() for f in auts}
    if len(members) != len(auts) or identity_hom(G).map.tobytes() not in members:
        raise AssertionError("automorphism list misses the identity or has duplicates")
    gens: list[np.ndarray] = []
    reached = {identity_hom(G).map.tobytes(): identity_hom(G).map}
    for f in auts:
        if f.map.tobytes() in reached:
            continue
        gens.append(f.map)
        frontier = list(reached.values())
        while frontier:
            fresh = []
            for m in frontier:
                for t in gens:
                    c = m[t]
                    k = c.tobytes()
                    if k not in reached:
                        reached[k] = c
                        fresh.append(c)
            frontier = fresh
    if set(reached) != members:
        raise AssertionError("automorphism list is not closed under composition")
    for f in auts:
        for t in gens:
            if f.map[t].tobytes() not in members:
                raise AssertionError("automorphism list is not closed under composition")


def is_inner(f: GroupHom) -> bool:
    G = f.domain
    return any(inner_automorphism(G, g) == f for g in range(G.order))


def find_isomorphism(G: FiniteGroup, H: FiniteGroup, budget: int = DEFAULT_BUDGET) -> GroupHom | None:
    """An isomorphism ``G -> H`` or ``None``, cheap invariants checked first."""
    if G.order != H.order:
        return None
    if not np.array_equal(np.sort(G.element_orders), np.sort(H.element_orders)):
        return None
    if G.is_abelian != H.is_abelian:
        return None
    from .finite_group import conjugacy_classes
    if sorted(map(len, conjugacy_classes(G))) != sorted(map(len, conjugacy_classes(H))):
        return None
    for f in enumerate_homs(G, H, budget=budget, injective=True):
        return f
    return None


def is_isomorphic(G: FiniteGroup, H: FiniteGroup, budget: int = DEFAULT_BUDGET) -> bool:
    return find_isomorphism(G, H, budget) is not None
