"""Cost-game estimates derived from saving-game estimates, and error measures."""

from fractions import Fraction

import pytest

from core.exceptions import InvalidParameterError
from game.characteristic import GameKind
from shapley.cost import (
    cost_estimates_from_saving,
    cost_levels_from_saving,
    cost_relative_error,
    relative_error,
)
from shapley.exact import exact_shapley
from shapley.monte_carlo import monte_carlo_shapley
from shapley.types import EstimateReport, render_decimal, render_rational


def test_cost_estimates_from_report(example_graph):
    report = monte_carlo_shapley(example_graph, 40, 3)
    cost = cost_estimates_from_saving(example_graph, report)
    assert sum(cost) == 3  # c(N)
    assert cost == [example_graph.root_weight(i) - report.player(i) for i in (1, 2)]


def test_cost_estimates_from_exact(example_graph):
    exact = exact_shapley(example_graph, GameKind.SAVING)
    assert cost_estimates_from_saving(example_graph, exact.values) == [Fraction(0), Fraction(3)]


def test_dimension_mismatch(example_graph):
    report = EstimateReport(estimates=(Fraction(1),), sample_count=1, seed=0)
    with pytest.raises(InvalidParameterError, match="dimension mismatch"):
        cost_estimates_from_saving(example_graph, report)


def test_relative_error():
    assert relative_error(Fraction(3, 2), Fraction(1)) == Fraction(1, 2)
    assert relative_error(Fraction(1, 2), Fraction(1)) == Fraction(1, 2)
    with pytest.raises(InvalidParameterError):
        relative_error(Fraction(1), Fraction(0))


def test_cost_relative_error(simple_graph):
    # phi_1 = 1/2, so the cost-game value of player 1 is 1 - 1/2
    assert cost_relative_error(simple_graph, 1, Fraction(3, 4), Fraction(1, 2)) == Fraction(1, 2)
    saving_error = relative_error(Fraction(3, 4), Fraction(1, 2))
    n = simple_graph.n
    assert cost_relative_error(simple_graph, 1, Fraction(3, 4), Fraction(1, 2)) <= saving_error * (n * (n - 1) - 1)


def test_renderings():
    assert render_rational(Fraction(0)) == "0/1"
    assert render_rational(Fraction(3)) == "3/1"
    assert render_rational(Fraction(-2, 6)) == "-1/3"
    assert render_decimal(Fraction(1, 3)) == "0.33333333333333333"
    assert render_decimal(Fraction(100)) == "100"
    assert render_decimal(Fraction(0)) == "0"
    assert render_decimal(Fraction(5, 2)) == "2.5"


def test_cost_levels_require_per_level_report(example_graph):
    plain = monte_carlo_shapley(example_graph, 20, 1)
    with pytest.raises(InvalidParameterError, match="per-level"):
        cost_levels_from_saving(example_graph, plain)
    levelled = monte_carlo_shapley(example_graph, 20, 1, per_level=True)
    rows = cost_levels_from_saving(example_graph, levelled)
    assert len(rows) == 3
    # level 1 has every root edge at weight 1
    assert rows[0] == [1 - v for v in levelled.per_level[0]]
