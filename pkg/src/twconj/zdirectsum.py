"""An automorphism of the countable direct sum of copies of Z.

Sequences are finitely supported and 1-indexed.  The map ``phi`` sends odd
position ``2k-1`` to ``a_{2k-1} + a_{2k} + a_{2k+1}`` and even position ``2k``
to ``a_{2k} + a_{2k+1}``; ``psi`` is its inverse.  ``phi`` fixes the first
unit vector, yet ``phi - id`` is onto, so all elements are ``phi``-conjugate
to zero.
"""
from __future__ import annotations

import json
import random
from typing import Mapping


class FinSuppIntSeq:
    """A finitely supported integer sequence ``a_1, a_2, ...`` stored sparsely."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[int, int] | None = None):
        clean = {}
        for k, v in (entries or {}).items():
            k, v = int(k), int(v)
            if k < 1:
                raise ValueError(f"indices start at 1, got {k}")
            if v:
                clean[k] = v
        self.entries = dict(sorted(clean.items()))

    @classmethod
    def unit(cls, k: int) -> "FinSuppIntSeq":
        return cls({k: 1})

    @classmethod
    def from_list(cls, values) -> "FinSuppIntSeq":
        return cls({i + 1: v for i, v in enumerate(values)})

    def __getitem__(self, k: int) -> int:
        return self.entries.get(k, 0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self.entries)

    @property
    def max_index(self) -> int:
        return max(self.entries, default=0)

    def __add__(self, other: "FinSuppIntSeq") -> "FinSuppIntSeq":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return FinSuppIntSeq(out)

    def __neg__(self) -> "FinSuppIntSeq":
        return FinSuppIntSeq({k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "FinSuppIntSeq") -> "FinSuppIntSeq":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, FinSuppIntSeq) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(tuple(self.entries.items()))

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __repr__(self) -> str:
        return f"FinSuppIntSeq({self.entries})"

    def to_json(self) -> dict:
        return {str(k): v for k, v in self.entries.items()}

    @classmethod
    def from_json(cls, data) -> "FinSuppIntSeq":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(k): v for k, v in data.items()})


def phi_example(a: FinSuppIntSeq) -> FinSuppIntSeq:
    out = {}
    for k in range(1, a.max_index + 1):
        if k % 2:
            out[k] = a[k] + a[k + 1] + a[k + 2]
        else:
            out[k] = a[k] + a[k + 1]
    return FinSuppIntSeq(out)


def psi_example(a: FinSuppIntSeq) -> FinSuppIntSeq:
    out = {}
    for k in range(1, a.max_index + 1):
        if k % 2:
            out[k] = a[k] - a[k + 1]
        else:
            out[k] = a[k] - a[k + 1] + a[k + 2]
    return FinSuppIntSeq(out)


def phi_minus_id(a: FinSuppIntSeq) -> FinSuppIntSeq:
    """Odd position ``2k-1`` gets ``a_{2k} + a_{2k+1}``, even position ``2k`` gets ``a_{2k+1}``."""
    out = {}
    for k in range(1, a.max_index + 1):
        out[k] = a[k + 1] + a[k + 2] if k % 2 else a[k + 1]
    return FinSuppIntSeq(out)


def solve_phi_minus_id(t: FinSuppIntSeq, check: bool = True) -> FinSuppIntSeq:
    """A preimage of ``t`` under ``phi - id``, taking ``a_1 = 0``.

    Back-substitution: ``a_{2k+1} = t_{2k}`` and ``a_{2k} = t_{2k-1} - t_{2k}``.
    """
    a = {}
    for k in range(1, t.max_index + 2):
        if k % 2:
            if k > 1:
                a[k] = t[k - 1]
        else:
            a[k] = t[k - 1] - t[k]
    a = FinSuppIntSeq(a)
    if check and phi_minus_id(a) != t:
        raise AssertionError("back-substitution did not invert phi - id")
    return a


def random_sequence(rng: random.Random, max_support: int = 30, max_index: int = 60,
                    max_abs: int = 50) -> FinSuppIntSeq:
    size = rng.randint(0, max_support)
    indices = rng.sample(range(1, max_index + 1), min(size, max_index))
    return FinSuppIntSeq({k: rng.choice([-1, 1]) * rng.randint(1, max_abs) for k in indices})
