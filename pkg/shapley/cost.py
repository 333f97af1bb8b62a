"""Cost-game estimates and error measures.

Shapley values of the cost and saving games are linked player by player:
phi_i(c) = w(r, i) - phi_i(v).
"""

from fractions import Fraction
from typing import Sequence

from core.exceptions import InvalidParameterError
from graph.decomposition import threshold_decompose
from graph.model import RootedWeightedGraph
from shapley.types import EstimateReport


def cost_estimates_from_saving(
    graph: RootedWeightedGraph,
    estimates: "EstimateReport | Sequence[Fraction]",
) -> list[Fraction]:
    """w(r, i) - estimate_i for every player.

    Raises:
      InvalidParameterError: If the estimate vector does not have n entries.
    """
    values = estimates.estimates if isinstance(estimates, EstimateReport) else tuple(estimates)
    if len(values) != graph.n:
        raise InvalidParameterError(
            f"dimension mismatch: {len(values)} estimates for n={graph.n}"
        )
    return [graph.root_weight(i) - Fraction(values[i - 1]) for i in graph.players()]


def cost_levels_from_saving(graph: RootedWeightedGraph, report: EstimateReport) -> list[list[Fraction]]:
    """Per-level cost-game estimates w^[h](r, i) - estimate^[h]_i.

    Weighted by the level gaps they recompose to `cost_estimates_from_saving`.

    Raises:
      InvalidParameterError: If the report was produced without per-level mode.
    """
    if report.per_level is None:
        raise InvalidParameterError("report has no per-level estimates")
    levels = list(threshold_decompose(graph).level_graphs())
    return [cost_estimates_from_saving(level, row) for level, row in zip(levels, report.per_level)]


def relative_error(estimate: Fraction, exact: Fraction) -> Fraction:
    """|estimate - exact| / exact.

    Raises:
      InvalidParameterError: If the exact value is 0 (null player).
    """
    if exact == 0:
        raise InvalidParameterError("relative error is undefined for an exact value of 0")
    return abs(Fraction(estimate) - Fraction(exact)) / abs(Fraction(exact))


def cost_relative_error(
    graph: RootedWeightedGraph,
    i: int,
    saving_estimate: Fraction,
    saving_exact: Fraction,
) -> Fraction:
    """Relative error of the derived cost-game estimate of player i.

    Equals |saving error| / (w(r, i) - phi_i(v)); on a 0-1 graph it is at most
    the saving-game relative error times (n(n-1) - 1).
    """
    graph.check_player(i)
    cost_exact = graph.root_weight(i) - Fraction(saving_exact)
    cost_estimate = graph.root_weight(i) - Fraction(saving_estimate)
    return relative_error(cost_estimate, cost_exact)
