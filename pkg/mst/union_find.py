"""Disjoint-set forest over arbitrary hashable vertex labels."""


class UnionFind:
    """Union-find with path halving and union by size."""

    def __init__(self):
        self.forest = {}
        self.size = {}

    def add(self, k):
        if k not in self.forest:
            self.forest[k] = k
            self.size[k] = 1
        return k

    def find(self, k):
        forest = self.forest
        if k not in forest:
            return self.add(k)
        while forest[k] != k:
            forest[k] = forest[forest[k]]
            k = forest[k]
        return k

    def union(self, a, b) -> bool:
        """Merges the sets of a and b; False when they were already joined."""
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return False
        if self.size[root_a] < self.size[root_b]:
            root_a, root_b = root_b, root_a
        self.forest[root_b] = root_a
        self.size[root_a] += self.size[root_b]
        return True

    def connected(self, a, b) -> bool:
        return self.find(a) == self.find(b)
