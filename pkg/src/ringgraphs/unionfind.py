"""Plain union-find with path halving; kept as an independent second route
for connected-component counting."""

from __future__ import annotations


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.count -= 1

    def labels(self) -> list[int]:
        """Component label per element: the root index of its set."""
        return [self.find(x) for x in range(len(self.parent))]
