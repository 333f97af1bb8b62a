"""Hoeffding sample-size prescriptions and value bounds."""

import math
from fractions import Fraction

import pytest

from core.exceptions import InvalidParameterError
from graph.model import RootedWeightedGraph
from shapley.bounds import (
    SampleScope,
    marginal_bound,
    required_samples,
    required_samples_for,
    simple_cost_upper_bound,
    simple_shapley_lower_bound,
)


@pytest.mark.parametrize(
    "n, eps, delta, h, scope, weighted, expected",
    [
        (3, 0.1, 0.25, 1, "single", False, 14972),
        (3, 0.1, 0.25, 1, "all", False, 22882),
        (5, 0.5, 0.25, 1, "single", False, 26617),
        (4, 0.5, 0.25, 1, "single", False, 5390),
        (2, 0.1, 0.25, 3, "single", True, 636),
        (1, 0.1, 0.25, 1, "all", False, 1),
    ],
)
def test_required_samples_values(n, eps, delta, h, scope, weighted, expected):
    assert required_samples(n, eps, delta, h, scope, weighted) == expected


def test_required_samples_matches_formula():
    for n in range(2, 11):
        for scope, factor in ((SampleScope.SINGLE, 2), (SampleScope.ALL, 2 * n)):
            value = required_samples(n, 0.3, 0.1, scope=scope)
            exact = n**2 * (n - 1) ** 4 * math.log(factor / 0.1) / (2 * 0.3**2)
            assert value == math.ceil(exact)


def test_required_samples_monotone():
    values = [required_samples(n, 0.1, 0.25) for n in range(2, 11)]
    assert values == sorted(set(values))
    assert required_samples(5, 0.2, 0.25) > required_samples(5, 0.4, 0.25)
    assert required_samples(5, 0.2, 0.05) > required_samples(5, 0.2, 0.25)


def test_unweighted_ignores_h():
    assert required_samples(4, 0.2, 0.25, 7) == required_samples(4, 0.2, 0.25, 1)
    assert required_samples(4, 0.2, 0.25, 7, weighted=True) > required_samples(4, 0.2, 0.25, 7)


@pytest.mark.parametrize(
    "n, eps, delta, h",
    [(3, 0.0, 0.25, 1), (3, -0.1, 0.25, 1), (3, 0.1, 0.0, 1), (3, 0.1, 1.0, 1), (0, 0.1, 0.25, 1), (3, 0.1, 0.25, 0)],
)
def test_required_samples_rejects_bad_input(n, eps, delta, h):
    with pytest.raises(InvalidParameterError):
        required_samples(n, eps, delta, h)


def test_required_samples_for_instances(example_graph, simple_graph):
    # example weights {1, 2, 4}: H = 3, weighted bound on n = 2
    assert required_samples_for(example_graph, 0.1, 0.25, "single") == 636
    ones = RootedWeightedGraph.from_pairs(2, {(0, 1): 1, (0, 2): 1, (1, 2): 1})
    assert required_samples_for(ones, 0.1, 0.25) == 416
    assert required_samples_for(simple_graph, 0.5, 0.25) == 5390


def test_marginal_bound(example_graph, simple_graph):
    assert marginal_bound(simple_graph) == 3
    assert marginal_bound(example_graph) == 4


def test_simple_value_bounds(simple_graph):
    assert simple_shapley_lower_bound(4) == Fraction(1, 12)
    assert simple_cost_upper_bound(simple_graph, 1) == Fraction(11, 12)
    with pytest.raises(InvalidParameterError):
        simple_shapley_lower_bound(1)
