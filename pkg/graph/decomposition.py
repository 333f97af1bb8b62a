"""Threshold decomposition of an integer-weighted graph into 0-1 level graphs.

With distinct positive weights 0 < g_1 < ... < g_H (g_0 = 0), level h keeps an
edge at weight 1 iff g_h <= w(i, j). Every weight recomposes exactly as
sum_h (g_h - g_{h-1}) * w^[h](i, j), and the MCST cost and saving games
decompose the same way.
"""

import dataclasses
from typing import Iterator

from core.exceptions import InvalidParameterError
from graph.model import RootedWeightedGraph


@dataclasses.dataclass(frozen=True)
class ThresholdDecomposition:
    """Distinct positive weight levels of a graph.

    Attributes:
      levels: Strictly increasing distinct positive weights (empty for an
        all-zero graph).
      source: The decomposed graph.
    """

    levels: tuple[int, ...]
    source: RootedWeightedGraph

    @property
    def h_count(self) -> int:
        return len(self.levels)

    def gap(self, h: int) -> int:
        """g_h - g_{h-1} for 1 <= h <= H."""
        self._check_level(h)
        previous = self.levels[h - 2] if h > 1 else 0
        return self.levels[h - 1] - previous

    def gaps(self) -> list[int]:
        return [self.gap(h) for h in range(1, self.h_count + 1)]

    def level_graph(self, h: int) -> RootedWeightedGraph:
        """The 0-1 graph w^[h]; pointwise non-increasing in h."""
        self._check_level(h)
        threshold = self.levels[h - 1]
        rows = tuple(
            tuple(1 if w >= threshold else 0 for w in row) for row in self.source.matrix
        )
        # the diagonal stays 0 because threshold > 0
        return RootedWeightedGraph(self.source.n, rows)

    def level_graphs(self) -> Iterator[RootedWeightedGraph]:
        for h in range(1, self.h_count + 1):
            yield self.level_graph(h)

    def recompose(self, i: int, j: int) -> int:
        """sum_h (g_h - g_{h-1}) * w^[h](i, j); equals w(i, j)."""
        w = self.source.weight(i, j)
        return sum(self.gap(h) for h in range(1, self.h_count + 1) if self.levels[h - 1] <= w)

    def _check_level(self, h: int) -> None:
        if not 1 <= h <= self.h_count:
            raise InvalidParameterError(
                f"level {h} out of range 1..{self.h_count}", details={"h": h, "H": self.h_count}
            )


def threshold_decompose(graph: RootedWeightedGraph) -> ThresholdDecomposition:
    """Collects the sorted distinct positive weights of `graph`."""
    return ThresholdDecomposition(tuple(sorted(graph.positive_weights())), graph)


def level_graph(decomp: ThresholdDecomposition, h: int) -> RootedWeightedGraph:
    return decomp.level_graph(h)
