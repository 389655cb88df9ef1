"""Finite groups given by Cayley tables.

Every group in the package is a :class:`FiniteGroup`: elements are the
integers ``0 .. order-1``, the identity is always ``0`` and the group law is
a dense ``order x order`` numpy table.  Subgroups are sorted tuples of element
indices tied to their parent group.
"""
from __future__ import annotations

import itertools
import json
import os
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    OrderCapExceeded,
    SearchBudgetExceeded,
    UnknownPreset,
)

DEFAULT_MAX_ORDER = 5040


def max_order() -> int:
    """Order cap for constructed groups; ``TWCONJ_MAX_ORDER`` overrides it."""
    value = os.environ.get("TWCONJ_MAX_ORDER")
    return int(value) if value else DEFAULT_MAX_ORDER


def _check_cap(order: int, cap: int | None) -> None:
    cap = max_order() if cap is None else cap
    if order > cap:
        raise OrderCapExceeded(f"group order {order} exceeds the cap {cap}")


class FiniteGroup:
    """A finite group with elements ``0 .. order-1`` and identity ``0``.

    Instances are immutable; the tables are read-only numpy arrays.  Use
    :func:`from_cayley_table` to ingest an arbitrary table, this constructor
    assumes an already valid one.

    Parameters
    ----------
    mul : array_like
        ``mul[x, y]`` is the index of ``x*y``.  Row and column 0 must be the
        identity row/column.
    generators : sequence of int, optional
        A generating set.  Found greedily when omitted.
    names : sequence of str, optional
        Display names for the elements.
    label : str, optional
        Short display name of the group, e.g. ``"S3"``.
    """

    def __init__(self, mul, generators: Sequence[int] | None = None,
                 names: Sequence[str] | None = None, label: str | None = None):
        mul = np.array(mul, dtype=np.int64)
        mul.setflags(write=False)
        self.mul = mul
        self.order = int(mul.shape[0])
        self.identity = 0
        inv = np.argmin(mul, axis=1)  # the 0 entry of each row
        inv.setflags(write=False)
        self.inv = inv
        self.names = tuple(names) if names is not None else None
        self.label = label
        if generators is None:
            generators = greedy_generators(mul)
        generators = [int(g) for g in generators]
        if not generators:
            generators = [0]
        self.generators = tuple(generators)
        self.words = _bfs_words(mul, self.generators)
        if any(w is None for w in self.words):
            raise ValueError("generators do not generate the group")

    # -- basic arithmetic -------------------------------------------------

    def op(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def inverse(self, x: int) -> int:
        return int(self.inv[x])

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def eval_word(self, word: Iterable[int], images: Sequence[int] | None = None,
                  table: np.ndarray | None = None) -> int:
        """Evaluate a word in the generators.

        With ``images``/``table`` given the word is evaluated in another group,
        the ``i``-th generator being replaced by ``images[i]``.
        """
        if images is None:
            images, table = self.generators, self.mul
        x = 0
        for i in word:
            x = int(table[x, images[i]])
        return x

    def name(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def __repr__(self) -> str:
        label = f"{self.label}, " if self.label else ""
        return f"FiniteGroup({label}order={self.order})"

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.mul, other.mul)

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.order, self.mul.tobytes()))

    # -- derived data -------------------------------------------------------

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        elems = np.arange(n)
        power = elems.copy()
        for k in range(1, n + 1):
            hit = (power == 0) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
            power = self.mul[power, elems]
        orders.setflags(write=False)
        return orders

    def element_order(self, x: int) -> int:
        return int(self.element_orders[x])

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders))

    def closure(self, elements: Iterable[int]) -> tuple[int, ...]:
        """Sorted elements of the subgroup generated by ``elements``."""
        gens = sorted({int(e) for e in elements} - {0})
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        frontier = [0]
        while frontier:
            block = self.mul[np.ix_(frontier, gens)].ravel() if gens else np.array([], dtype=np.int64)
            fresh = np.unique(block[~seen[block]])
            seen[fresh] = True
            frontier = fresh.tolist()
        return tuple(np.flatnonzero(seen).tolist())

    def subgroup(self, elements: Iterable[int], check: bool = True) -> "Subgroup":
        return Subgroup(self, elements, check=check)

    def generated_subgroup(self, elements: Iterable[int]) -> "Subgroup":
        return Subgroup(self, self.closure(elements), check=False)

    def whole(self) -> "Subgroup":
        return Subgroup(self, range(self.order), check=False)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (0,), check=False)

    def to_json(self) -> dict:
        out = {"order": self.order, "table": self.mul.tolist()}
        if self.names is not None:
            out["names"] = list(self.names)
        return out


def greedy_generators(mul: np.ndarray) -> list[int]:
    """Smallest-index-first generating set: add ``x`` whenever it extends the closure."""
    n = mul.shape[0]
    gens: list[int] = []
    inside = np.zeros(n, dtype=bool)
    inside[0] = True
    for x in range(1, n):
        if inside[x]:
            continue
        gens.append(x)
        # closure of gens, built by right multiplication from the identity
        inside[:] = False
        inside[0] = True
        frontier = [0]
        while frontier:
            block = mul[np.ix_(frontier, gens)].ravel()
            fresh = np.unique(block[~inside[block]])
            inside[fresh] = True
            frontier = fresh.tolist()
        if inside.all():
            break
    return gens


def _bfs_words(mul: np.ndarray, generators: Sequence[int]) -> tuple:
    n = mul.shape[0]
    words: list = [None] * n
    words[0] = ()
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for i, g in enumerate(generators):
            y = int(mul[x, g])
            if words[y] is None:
                words[y] = words[x] + (i,)
                queue.append(y)
    return tuple(words)


def from_cayley_table(table, names: Sequence[str] | None = None, cap: int | None = None,
                      label: str | None = None) -> FiniteGroup:
    """Validate a Cayley table and build the group it describes.

    The identity is moved to index 0 (other elements keep their relative
    order).  Error messages quote indices of the table as given.

    Raises
    ------
    NotClosed, NoIdentity, NoInverse, NotAssociative
        Naming the first witnessing element or triple.
    OrderCapExceeded
        If the table is larger than the order cap.
    """
    try:
        t = np.array(table, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise NotClosed(f"table is not a rectangular integer matrix: {exc}") from None
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotClosed(f"table must be a non-empty square matrix, got shape {t.shape}")
    n = t.shape[0]
    _check_cap(n, cap)
    bad = np.argwhere((t < 0) | (t >= n))
    if len(bad):
        i, j = bad[0]
        raise NotClosed(f"entry table[{i}][{j}] = {t[i, j]} is not an element index")
    if names is not None and len(names) != n:
        raise ValueError(f"expected {n} names, got {len(names)}")

    elems = np.arange(n)
    identity = None
    for e in range(n):
        if np.array_equal(t[e], elems) and np.array_equal(t[:, e], elems):
            identity = e
            break
    if identity is None:
        raise NoIdentity("table has no two-sided identity element")
    for x in range(n):
        right = np.flatnonzero(t[x] == identity)
        if not any(t[y, x] == identity for y in right):
            raise NoInverse(f"element {x} has no two-sided inverse")
    for a in range(n):
        left = t[t[a]]          # (a*b)*c  indexed [b, c]
        right = t[a][t]         # a*(b*c)  indexed [b, c]
        diff = np.argwhere(left != right)
        if len(diff):
            b, c = diff[0]
            raise NotAssociative((a, b, c))

    order = [identity] + [x for x in range(n) if x != identity]
    relabel = np.empty(n, dtype=np.int64)
    relabel[order] = elems
    mul = relabel[t[np.ix_(order, order)]]
    if names is not None:
        names = [names[x] for x in order]
    return FiniteGroup(mul, names=names, label=label)


def load_group_json(source) -> FiniteGroup:
    """Read the ``{"order", "table", "names"?}`` Cayley-table format.

    ``source`` is a path or an already parsed dict.
    """
    if isinstance(source, (str, Path)):
        data = json.loads(Path(source).read_text())
    else:
        data = source
    if not isinstance(data, dict) or "table" not in data or "order" not in data:
        raise NotClosed('group JSON needs the fields "order" and "table"')
    table = data["table"]
    if len(table) != int(data["order"]):
        raise NotClosed(f'"order" is {data["order"]} but the table has {len(table)} rows')
    return from_cayley_table(table, names=data.get("names"))


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of ``parent``, stored as a sorted tuple of element indices."""

    parent: FiniteGroup
    elements: tuple

    def __init__(self, parent: FiniteGroup, elements: Iterable[int], check: bool = True):
        elems = tuple(sorted({int(e) for e in elements}))
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "elements", elems)
        if check:
            if not elems or elems[0] != 0:
                raise ValueError("subgroup must contain the identity")
            idx = np.array(elems)
            mask = self.mask
            if not mask[parent.mul[np.ix_(idx, idx)]].all():
                raise ValueError("elements are not closed under multiplication")
            if not mask[parent.inv[idx]].all():
                raise ValueError("elements are not closed under inverses")

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.elements)] = True
        return m

    @property
    def array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64)

    def __contains__(self, x) -> bool:
        return bool(self.mask[int(x)])

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.elements == other.elements and self.parent == other.parent

    def __hash__(self) -> int:
        return hash((self.parent, self.elements))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent!r})"

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_normal(self) -> bool:
        G = self.parent
        conj = G.mul[G.mul[:, self.array], G.inv[:, None]]
        return bool(self.mask[conj].all())

    def commutes_with(self, other: "Subgroup") -> bool:
        G = self.parent
        a, b = np.ix_(self.array, other.array)
        return bool(np.array_equal(G.mul[a, b], G.mul[b, a]))

    def as_group(self, label: str | None = None) -> tuple[FiniteGroup, np.ndarray]:
        """The subgroup as a standalone group plus its inclusion map."""
        G = self.parent
        idx = self.array
        local = np.full(G.order, -1, dtype=np.int64)
        local[idx] = np.arange(len(idx))
        mul = local[G.mul[np.ix_(idx, idx)]]
        names = [G.name(x) for x in idx] if G.names is not None else None
        return FiniteGroup(mul, names=names, label=label), idx


def set_product(G: FiniteGroup, parts: Sequence[Subgroup]) -> np.ndarray:
    """Sorted elements of the product set ``N_1 N_2 ... N_k``."""
    acc = np.array([0], dtype=np.int64)
    for N in parts:
        acc = np.unique(G.mul[np.ix_(acc, N.array)])
    return acc


# -- structural queries -----------------------------------------------------

def center(G: FiniteGroup) -> Subgroup:
    central = (G.mul == G.mul.T).all(axis=1)
    return Subgroup(G, np.flatnonzero(central).tolist(), check=False)


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Conjugacy classes ordered by their minimal element."""
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        cls = np.unique(G.mul[G.mul[:, x], G.inv])
        seen[cls] = True
        classes.append(tuple(cls.tolist()))
    return classes


def internal_direct_product_check(G: FiniteGroup, parts: Sequence[Subgroup]) -> bool:
    """True iff ``G`` is the internal direct product of ``parts``.

    Each part must be normal, distinct parts must commute elementwise, the
    parts must multiply out to ``G`` and every part must meet the product of
    the others only in the identity.
    """
    if any(not N.is_normal() for N in parts):
        return False
    for N, M in itertools.combinations(parts, 2):
        if not N.commutes_with(M):
            return False
    if len(set_product(G, parts)) != G.order:
        return False
    for i, N in enumerate(parts):
        rest = set_product(G, [M for j, M in enumerate(parts) if j != i])
        if np.count_nonzero(N.mask[rest]) != 1:
            return False
    return True


def normal_closure(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    gens = set(int(e) for e in elements)
    for x in list(gens):
        gens.update(np.unique(G.mul[G.mul[:, x], G.inv]).tolist())
    return G.generated_subgroup(gens)


def normal_subgroups(G: FiniteGroup, budget: int = 100_000) -> list[Subgroup]:
    """All normal subgroups, sorted by order then elements.

    Every normal subgroup is a join of normal closures of single classes, so
    the lattice is built by closing the set of those under joins.
    """
    atoms = {normal_closure(G, [cls[0]]).elements for cls in conjugacy_classes(G)}
    found = {(0,)} | atoms
    frontier = set(found)
    work = 0
    while frontier:
        fresh = set()
        for N in frontier:
            for A in atoms:
                if set(A) <= set(N):
                    continue
                work += 1
                if work > budget:
                    raise SearchBudgetExceeded("normal subgroup search exceeded its budget")
                joined = tuple(set_product(G, [Subgroup(G, N, check=False),
                                               Subgroup(G, A, check=False)]).tolist())
                if joined not in found:
                    found.add(joined)
                    fresh.add(joined)
        frontier = fresh
    subs = [Subgroup(G, e, check=False) for e in found]
    return sorted(subs, key=lambda N: (N.order, N.elements))


# -- direct products ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ProductGroup:
    """``G_1 x ... x G_n`` with its canonical injections and projections.

    Elements are encoded lexicographically, the first factor most significant,
    so ``coords[x]`` is the coordinate tuple of element ``x``.
    """

    factors: tuple
    group: FiniteGroup
    coords: np.ndarray
    strides: tuple
    embed: tuple
    project: tuple

    @property
    def n(self) -> int:
        return len(self.factors)

    def encode(self, coordinates: Sequence[int]) -> int:
        return int(sum(c * s for c, s in zip(coordinates, self.strides)))

    def decode(self, x: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.coords[x])

    def embedded_factor(self, i: int) -> Subgroup:
        return Subgroup(self.group, self.embed[i].tolist(), check=False)

    def __repr__(self) -> str:
        return f"ProductGroup({' x '.join(_label(F) for F in self.factors)})"


def _label(G: FiniteGroup) -> str:
    return G.label or f"<order {G.order}>"


def direct_product(factors: Sequence[FiniteGroup], cap: int | None = None) -> ProductGroup:
    factors = tuple(factors)
    if not factors:
        raise ValueError("direct_product needs at least one factor")
    orders = [F.order for F in factors]
    total = int(np.prod(orders))
    _check_cap(total, cap)
    n = len(factors)
    strides = tuple(int(np.prod(orders[i + 1:])) for i in range(n))
    elems = np.arange(total)
    coords = np.stack([(elems // strides[i]) % orders[i] for i in range(n)], axis=1)
    coords.setflags(write=False)

    mul = np.zeros((total, total), dtype=np.int64)
    inv = np.zeros(total, dtype=np.int64)
    for i, F in enumerate(factors):
        c = coords[:, i]
        mul += strides[i] * F.mul[c[:, None], c[None, :]]
        inv += strides[i] * F.inv[c]

    gens = []
    for i, F in enumerate(factors):
        gens.extend(g * strides[i] for g in F.generators if g != 0)
    names = None
    if all(F.names is not None for F in factors):
        names = ["(" + ",".join(factors[i].name(int(c)) for i, c in enumerate(row)) + ")"
                 for row in coords]
    label = " x ".join(_label(F) for F in factors)
    group = FiniteGroup(mul, generators=gens or [0], names=names, label=label)
    embed = tuple(np.arange(F.order, dtype=np.int64) * strides[i] for i, F in enumerate(factors))
    project = tuple(np.ascontiguousarray(coords[:, i]) for i in range(n))
    for arr in embed + project:
        arr.setflags(write=False)
    return ProductGroup(factors, group, coords, strides, embed, project)


# -- presets ----------------------------------------------------------------

def _from_operation(elements: list, op, label: str, names=None, generators=None) -> FiniteGroup:
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    mul = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            mul[i, j] = index[op(a, b)]
    gens = None if generators is None else [index[g] for g in generators]
    return FiniteGroup(mul, generators=gens, names=names, label=label)


def _cycle_notation(p: tuple) -> str:
    seen, parts = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def _perm_group(perms: list, label: str, generators: list) -> FiniteGroup:
    # (p*q)(i) = p(q(i)): apply q first
    def op(p, q):
        return tuple(p[q[i]] for i in range(len(q)))
    return _from_operation(perms, op, label, names=[_cycle_notation(p) for p in perms],
                           generators=generators)


def _cycle_perm(n: int, cycle: Sequence[int]) -> tuple:
    p = list(range(n))
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        p[a] = b
    return tuple(p)


def _is_even(p: tuple) -> bool:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inversions % 2 == 0


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise UnknownPreset("cyclic group needs n >= 1")
    mul = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return FiniteGroup(mul, generators=[1] if n > 1 else [0], names=[str(i) for i in range(n)],
                       label=f"Z{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order ``2n``; element ``k + n*e`` is ``r^k s^e``."""
    if n < 1:
        raise UnknownPreset("dihedral group needs n >= 1")
    elements = [(k, e) for e in (0, 1) for k in range(n)]

    def op(a, b):
        (k1, e1), (k2, e2) = a, b
        return ((k1 + (-k2 if e1 else k2)) % n, (e1 + e2) % 2)

    names = [("r^%d" % k if k else "1") if not e else ("r^%ds" % k if k else "s")
             for k, e in elements]
    gens = [(1 % n, 0), (0, 1)] if n > 1 else [(0, 1)]
    return _from_operation(elements, op, f"D{n}", names=names,
                           generators=[g for g in gens if g != (0, 0)])


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise UnknownPreset("symmetric group preset supports 1 <= n <= 5")
    perms = sorted(itertools.permutations(range(n)))
    if n == 1:
        gens = [perms[0]]
    elif n == 2:
        gens = [(1, 0)]
    else:
        gens = [_cycle_perm(n, [0, 1]), _cycle_perm(n, list(range(n)))]
    return _perm_group(perms, f"S{n}", gens)


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise UnknownPreset("alternating group preset supports 1 <= n <= 5")
    perms = [p for p in sorted(itertools.permutations(range(n))) if _is_even(p)]
    if n < 3:
        gens = [perms[0]]
    elif n == 3:
        gens = [_cycle_perm(n, [0, 1, 2])]
    elif n % 2:
        gens = [_cycle_perm(n, [0, 1, 2]), _cycle_perm(n, list(range(n)))]
    else:
        gens = [_cycle_perm(n, [0, 1, 2]), _cycle_perm(n, list(range(1, n)))]
    return _perm_group(perms, f"A{n}", gens)


def quaternion8() -> FiniteGroup:
    units = ["1", "i", "j", "k"]
    # unit products: table[a][b] = (sign, unit)
    prod = {
        ("1", u): (1, u) for u in units
    }
    prod.update({(u, "1"): (1, u) for u in units})
    prod.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elements = [(s, u) for s in (1, -1) for u in units]

    def op(a, b):
        sign, unit = prod[(a[1], b[1])]
        return (a[0] * b[0] * sign, unit)

    names = [("" if s > 0 else "-") + u for s, u in elements]
    return _from_operation(elements, op, "Q8", names=names, generators=[(1, "i"), (1, "j")])


def klein4() -> FiniteGroup:
    mul = np.arange(4)[:, None] ^ np.arange(4)[None, :]
    return FiniteGroup(mul, generators=[1, 2], names=["e", "a", "b", "ab"], label="V4")


_PRESETS = {
    "trivial": (lambda: cyclic(1), 0),
    "cyclic": (cyclic, 1),
    "dihedral": (dihedral, 1),
    "symmetric": (symmetric, 1),
    "alternating": (alternating, 1),
    "quaternion8": (quaternion8, 0),
    "klein4": (klein4, 0),
}

_PRESET_ORDER = {
    "trivial": lambda: 1,
    "cyclic": lambda n: n,
    "dihedral": lambda n: 2 * n,
    "symmetric": lambda n: _factorial(n),
    "alternating": lambda n: max(1, _factorial(n) // 2),
    "quaternion8": lambda: 8,
    "klein4": lambda: 4,
}

_SHORT = {"Z": "cyclic", "C": "cyclic", "D": "dihedral", "S": "symmetric", "A": "alternating"}
_ALIASES = {"Q8": "quaternion8", "V4": "klein4", "K4": "klein4", "1": "trivial"}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def preset(name: str, *params: int, cap: int | None = None) -> FiniteGroup:
    """Build one of the named groups.

    ``preset("cyclic", 4)``, ``preset("dihedral", 4)`` (order 8),
    ``preset("symmetric", 3)``, ``preset("alternating", 4)``,
    ``preset("quaternion8")``, ``preset("klein4")``, ``preset("trivial")``.
    """
    if name not in _PRESETS:
        raise UnknownPreset(f"unknown preset {name!r}; known: {', '.join(sorted(_PRESETS))}")
    build, arity = _PRESETS[name]
    if len(params) != arity:
        raise UnknownPreset(f"preset {name!r} takes {arity} integer parameter(s), got {len(params)}")
    params = tuple(int(p) for p in params)
    if arity and params[0] < 1:
        raise UnknownPreset(f"preset {name!r} needs a positive parameter")
    if name in ("symmetric", "alternating") and params[0] > 5:
        raise UnknownPreset(f"{name} preset supports n <= 5")
    _check_cap(_PRESET_ORDER[name](*params), cap)
    return build(*params)


def parse_group_spec(spec: str, cap: int | None = None) -> FiniteGroup:
    """Parse ``"cyclic:3"``, ``"S3"``, ``"Q8"``, a JSON file path, or a ``*``-joined product.

    A product such as ``"S3*Z4"`` returns the product's underlying group.
    """
    if "*" in spec:
        return direct_product([parse_group_spec(p.strip(), cap) for p in spec.split("*")],
                              cap=cap).group
    if spec.endswith(".json") or os.path.sep in spec or Path(spec).is_file():
        return load_group_json(spec)
    if ":" in spec:
        name, _, rest = spec.partition(":")
        params = [int(p) for p in rest.split(",") if p]
        return preset(name, *params, cap=cap)
    if spec in _PRESETS:
        return preset(spec, cap=cap)
    if spec in _ALIASES:
        return preset(_ALIASES[spec], cap=cap)
    if spec[:1] in _SHORT and spec[1:].isdigit():
        return preset(_SHORT[spec[0]], int(spec[1:]), cap=cap)
    raise UnknownPreset(f"cannot parse group spec {spec!r}")


def catalog(max_order_: int = 24) -> dict[str, FiniteGroup]:
    """The named groups used by exhaustive sweeps, up to the given order."""
    entries: dict[str, tuple] = {"trivial": ("trivial",)}
    for n in range(2, max_order_ + 1):
        entries[f"Z{n}"] = ("cyclic", n)
    entries["V4"] = ("klein4",)
    entries["Q8"] = ("quaternion8",)
    for n in range(3, max_order_ // 2 + 1):
        entries[f"D{n}"] = ("dihedral", n)
    entries["S3"] = ("symmetric", 3)
    entries["A4"] = ("alternating", 4)
    entries["S4"] = ("symmetric", 4)
    entries["A5"] = ("alternating", 5)
    entries["S5"] = ("symmetric", 5)
    out = {}
    for key, args in entries.items():
        if _PRESET_ORDER[args[0]](*args[1:]) <= max_order_:
            out[key] = preset(*args)
    return out
