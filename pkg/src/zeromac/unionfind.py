"""Disjoint-set forest over arbitrary hashable items."""

from __future__ import annotations

from typing import Hashable, Iterable


class DisjointSet:
    """Union-find with path halving and union by size.

    Items are registered lazily by :meth:`add` or on first :meth:`union`.
    """

    def __init__(self, items: Iterable[Hashable] = ()):
        self._parent: dict = {}
        self._size: dict = {}
        for item in items:
            self.add(item)

    def add(self, item) -> None:
        if item not in self._parent:
            self._parent[item] = item
            self._size[item] = 1

    def __contains__(self, item) -> bool:
        return item in self._parent

    def __len__(self) -> int:
        return len(self._parent)

    def find(self, item):
        parent = self._parent
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    def union(self, first, second) -> bool:
        """Merge the sets holding ``first`` and ``second``; False if already merged."""
        self.add(first)
        self.add(second)
        a, b = self.find(first), self.find(second)
        if a == b:
            return False
        if self._size[a] < self._size[b]:
            a, b = b, a
        self._parent[b] = a
        self._size[a] += self._size[b]
        return True

    def union_all(self, items: Iterable) -> None:
        it = iter(items)
        try:
            head = next(it)
        except StopIteration:
            return
        self.add(head)
        for other in it:
            self.union(head, other)

    def groups(self) -> list[list]:
        """Components as sorted lists, ordered by their smallest member."""
        buckets: dict = {}
        for item in self._parent:
            buckets.setdefault(self.find(item), []).append(item)
        return sorted((sorted(g) for g in buckets.values()), key=lambda g: g[0])
