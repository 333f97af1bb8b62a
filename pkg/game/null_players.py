"""Null players of the saving game and dummy players of the cost game.

Player i is null in (N, v) iff w(r, i) <= w(i, j) >= w(r, j) for every other
player j, an O(n) test. The same predicate characterizes dummy players of
(N, c). A null player has Shapley value 0 and can be deleted from the graph
without changing the other players' values.
"""

import dataclasses
from fractions import Fraction
from typing import Sequence

from core.exceptions import InvalidParameterError
from core.logger import get_logger
from game.characteristic import cost_value, saving_value
from graph.model import Coalition, RootedWeightedGraph

logger = get_logger(__name__)

# (w(r,i), w(i,j), w(r,j)) triples that make i non-null in a 0-1 graph.
NON_NULL_TRIPLES = frozenset({(1, 0, 0), (1, 0, 1), (0, 0, 1)})


def is_null_player(graph: RootedWeightedGraph, i: int) -> bool:
    """True iff for all j != i: w(r, i) <= w(i, j) >= w(r, j)."""
    graph.check_player(i)
    matrix = graph.matrix
    w_ri = matrix[0][i]
    row = matrix[i]
    return all(
        w_ri <= row[j] >= matrix[0][j] for j in graph.players() if j != i
    )


def is_null_player_pairwise(graph: RootedWeightedGraph, i: int) -> bool:
    """True iff v({i, j}) = v({j}) for every j != i (pairwise null test)."""
    graph.check_player(i)
    return all(
        saving_value(graph, Coalition.of((i, j))) == saving_value(graph, Coalition.of((j,)))
        for j in graph.players()
        if j != i
    )


def is_non_null_simple(graph: RootedWeightedGraph, i: int) -> bool:
    """Triple test on a 0-1 graph: some j gives a listed (w(r,i), w(i,j), w(r,j)).

    Raises:
      InvalidParameterError: If the graph is not 0-1 or i is out of range.
    """
    if not graph.is_simple():
        raise InvalidParameterError("triple test requires a 0-1 weighted graph")
    graph.check_player(i)
    w_ri = graph.root_weight(i)
    return any(
        (w_ri, graph.weight(i, j), graph.root_weight(j)) in NON_NULL_TRIPLES
        for j in graph.players()
        if j != i
    )


def is_dummy_player_cost(graph: RootedWeightedGraph, i: int) -> bool:
    """Dummy in (N, c) coincides with null in (N, v)."""
    return is_null_player(graph, i)


def is_dummy_player_pairwise(graph: RootedWeightedGraph, i: int) -> bool:
    """True iff c({i, j}) = c({i}) + c({j}) for every j != i."""
    graph.check_player(i)
    c_i = graph.root_weight(i)
    return all(
        cost_value(graph, Coalition.of((i, j))) == c_i + graph.root_weight(j)
        for j in graph.players()
        if j != i
    )


def null_players(graph: RootedWeightedGraph) -> list[int]:
    """Null players of the current graph, single scan."""
    return [i for i in graph.players() if is_null_player(graph, i)]


@dataclasses.dataclass(frozen=True)
class EliminationResult:
    """Outcome of repeated null-player deletion.

    Attributes:
      reduced: Graph on the surviving players, relabelled 1..n'.
      kept: kept[k - 1] is the original label of reduced player k.
      removed: Original labels in removal order.
    """

    reduced: RootedWeightedGraph
    kept: tuple[int, ...]
    removed: tuple[int, ...]

    @property
    def original_n(self) -> int:
        return len(self.kept) + len(self.removed)

    def expand(self, values: Sequence[Fraction]) -> list[Fraction]:
        """Maps per-player values on `reduced` back to original labels; removed players get 0."""
        if len(values) != len(self.kept):
            raise InvalidParameterError(
                f"expected {len(self.kept)} values for the reduced game, got {len(values)}"
            )
        out = [Fraction(0)] * self.original_n
        for label, value in zip(self.kept, values):
            out[label - 1] = Fraction(value)
        return out


def eliminate_null_players(graph: RootedWeightedGraph) -> EliminationResult:
    """Deletes the lowest-labelled null player and re-tests until none is left.

    The scan restarts on the reduced graph after every deletion, so a player
    that only becomes null once another is gone is also removed. The sole
    remaining player of a one-player game is always null.
    """
    kept = list(graph.players())
    removed: list[int] = []
    current = graph
    while kept:
        victim = next((k for k in current.players() if is_null_player(current, k)), None)
        if victim is None:
            break
        removed.append(kept.pop(victim - 1))
        current = graph.induced(kept)

    logger.debug(
        "空玩家消去完成",
        extra={"n": graph.n, "kept": len(kept), "removed": removed},
    )
    return EliminationResult(current, tuple(kept), tuple(removed))
