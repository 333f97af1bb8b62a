"""Characteristic functions of the MCST cost game (N, c) and saving game (N, v)."""

import enum
from typing import Callable

from graph.model import Coalition, RootedWeightedGraph
from mst.oracle import mst_cost


class GameKind(enum.Enum):
    """Which characteristic function an oracle evaluates."""

    COST = "cost"
    SAVING = "saving"

    @classmethod
    def parse(cls, value: "str | GameKind") -> "GameKind":
        return value if isinstance(value, cls) else cls(str(value).lower())


def cost_value(graph: RootedWeightedGraph, s: Coalition) -> int:
    """c(S)."""
    return mst_cost(graph, s)


def saving_value(graph: RootedWeightedGraph, s: Coalition) -> int:
    """v(S) = sum_{j in S} w(r, j) - c(S); zero on the empty set and on singletons."""
    return sum(graph.root_weight(j) for j in s.members()) - mst_cost(graph, s)


def characteristic(kind: GameKind) -> Callable[[RootedWeightedGraph, Coalition], int]:
    return cost_value if GameKind.parse(kind) is GameKind.COST else saving_value
