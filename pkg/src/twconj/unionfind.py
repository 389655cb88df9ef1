"""Disjoint-set forest over ``0 .. n-1``."""
from __future__ import annotations

import numpy as np


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]

    def union_pairs(self, xs, ys) -> None:
        for x, y in zip(np.asarray(xs).tolist(), np.asarray(ys).tolist()):
            if x != y:
                self.union(x, y)

    def blocks(self) -> list[tuple[int, ...]]:
        """Blocks as sorted tuples, ordered by their minimal element."""
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted((tuple(b) for b in groups.values()), key=lambda b: b[0])

    def count(self) -> int:
        return sum(1 for x in range(len(self.parent)) if self.parent[x] == x)
