"""Shapley engine: exact oracles, Monte Carlo estimator and sample-size bounds."""

from shapley.types import (
    DECIMAL_DIGITS,
    EstimateReport,
    ShapleyVector,
    render_decimal,
    render_rational,
)
from shapley.exact import (
    coalition_cost_table,
    exact_shapley,
    exact_shapley_permutations,
    exact_shapley_subsets,
    level_exact_shapley,
)
from shapley.bounds import (
    SampleScope,
    marginal_bound,
    required_samples,
    required_samples_for,
    simple_cost_upper_bound,
    simple_shapley_lower_bound,
)
from shapley.seeding import block_generator, derive_seed, random_permutations
from shapley.monte_carlo import monte_carlo_shapley
from shapley.cost import (
    cost_estimates_from_saving,
    cost_levels_from_saving,
    cost_relative_error,
    relative_error,
)

__all__ = [
    "DECIMAL_DIGITS",
    "EstimateReport",
    "ShapleyVector",
    "render_decimal",
    "render_rational",
    "coalition_cost_table",
    "exact_shapley",
    "exact_shapley_permutations",
    "exact_shapley_subsets",
    "level_exact_shapley",
    "SampleScope",
    "marginal_bound",
    "required_samples",
    "required_samples_for",
    "simple_cost_upper_bound",
    "simple_shapley_lower_bound",
    "block_generator",
    "derive_seed",
    "random_permutations",
    "monte_carlo_shapley",
    "cost_estimates_from_saving",
    "cost_levels_from_saving",
    "cost_relative_error",
    "relative_error",
]
