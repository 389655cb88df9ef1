"""Natural numbers extended by infinity, and finite sets of them."""
from __future__ import annotations

import math
from functools import total_ordering
from typing import Iterable


@total_ordering
class ExtNat:
    """A value in ``{0, 1, 2, ...} U {inf}``.

    ``a * inf == inf`` for every ``a`` (including 0) and ``a + inf == inf``.
    Finite values compare and hash like the corresponding ``int``.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        if isinstance(value, ExtNat):
            value = value.value
        elif value is None or value == math.inf or value == "inf":
            value = None
        else:
            if int(value) != value or value < 0:
                raise ValueError(f"ExtNat needs a nonnegative integer or inf, got {value!r}")
            value = int(value)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("ExtNat is immutable")

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __mul__(self, other):
        other = ExtNat(other)
        if self.is_infinite or other.is_infinite:
            return INF
        return ExtNat(self.value * other.value)

    __rmul__ = __mul__

    def __add__(self, other):
        other = ExtNat(other)
        if self.is_infinite or other.is_infinite:
            return INF
        return ExtNat(self.value + other.value)

    __radd__ = __add__

    def __eq__(self, other):
        try:
            other = ExtNat(other)
        except (ValueError, TypeError):
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other):
        other = ExtNat(other)
        if self.is_infinite:
            return False
        return other.is_infinite or self.value < other.value

    def __hash__(self):
        return hash(math.inf) if self.is_infinite else hash(self.value)

    def __int__(self):
        if self.is_infinite:
            raise OverflowError("cannot convert infinity to int")
        return self.value

    def __repr__(self):
        return "ExtNat(inf)" if self.is_infinite else f"ExtNat({self.value})"

    def __str__(self):
        return "inf" if self.is_infinite else str(self.value)

    def to_json(self):
        return "inf" if self.is_infinite else self.value


INF = ExtNat(None)


def ext_product(values: Iterable) -> ExtNat:
    out = ExtNat(1)
    for v in values:
        out = out * v
    return out


def ext_sum(values: Iterable) -> ExtNat:
    out = ExtNat(0)
    for v in values:
        out = out + v
    return out


class Spectrum:
    """A finite, deduplicated set of :class:`ExtNat`, sorted with ``inf`` last.

    Prints as ``{1, 3, 9}`` and serialises to a JSON list with ``"inf"``.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable = ()):
        object.__setattr__(self, "values", tuple(sorted({ExtNat(v) for v in values})))

    def __setattr__(self, name, value):
        raise AttributeError("Spectrum is immutable")

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __contains__(self, item):
        return ExtNat(item) in self.values

    def __eq__(self, other):
        if isinstance(other, Spectrum):
            return self.values == other.values
        try:
            return self.values == Spectrum(other).values
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __le__(self, other):
        return self.issubset(other)

    def issubset(self, other) -> bool:
        other = other if isinstance(other, Spectrum) else Spectrum(other)
        return set(self.values) <= set(other.values)

    def union(self, other) -> "Spectrum":
        return Spectrum(self.values + tuple(other))

    def __or__(self, other):
        return self.union(other)

    def __str__(self):
        return "{" + ", ".join(str(v) for v in self.values) + "}"

    def __repr__(self):
        return f"Spectrum({self})"

    def to_json(self) -> list:
        return [v.to_json() for v in self.values]

    @classmethod
    def from_json(cls, data) -> "Spectrum":
        return cls(data)
