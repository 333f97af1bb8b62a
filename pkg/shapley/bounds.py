"""Sample-size prescriptions and value bounds for the Monte Carlo FPRAS.

With per-permutation marginal contributions in [0, n-1] on 0-1 graphs and
every non-null value at least 1/(n(n-1)), Hoeffding's inequality gives

    M >= n^2 (n-1)^4 ln(A / delta) / (2 eps^2)

for relative error eps with probability 1 - delta, where A is 2 (one player),
2n (all players), 2H or 2nH (integer weights with H distinct positive levels).
"""

import enum
import math
from fractions import Fraction

from core.exceptions import InvalidParameterError
from graph.decomposition import threshold_decompose
from graph.model import RootedWeightedGraph


class SampleScope(enum.Enum):
    """Whether the guarantee covers one player or all players at once."""

    SINGLE = "single"
    ALL = "all"

    @classmethod
    def parse(cls, value: "str | SampleScope") -> "SampleScope":
        return value if isinstance(value, cls) else cls(str(value).lower())


def required_samples(
    n: int,
    eps: float,
    delta: float,
    h_levels: int = 1,
    scope: SampleScope | str = SampleScope.SINGLE,
    weighted: bool = False,
) -> int:
    """Smallest M meeting the Hoeffding prescription.

    Args:
      n: Player count.
      eps: Relative error, > 0.
      delta: Failure probability in (0, 1).
      h_levels: Number of distinct positive weights H (>= 1); ignored when
        `weighted` is False.
      scope: SINGLE or ALL players.
      weighted: Use the integer-weight bound (ln argument scaled by H).

    Returns:
      ceil(n^2 (n-1)^4 ln(A/delta) / (2 eps^2)); 1 when n = 1 since the
      one-player saving game is identically 0.

    Raises:
      InvalidParameterError: On eps <= 0, delta outside (0, 1), n < 1 or
        h_levels < 1.
    """
    if not eps > 0:
        raise InvalidParameterError(f"eps must be > 0, got {eps}")
    if not 0 < delta < 1:
        raise InvalidParameterError(f"delta must be in (0, 1), got {delta}")
    if n < 1:
        raise InvalidParameterError(f"player count must be >= 1, got {n}")
    if h_levels < 1:
        raise InvalidParameterError(f"h_levels must be >= 1, got {h_levels}")
    if n == 1:
        return 1

    scope = SampleScope.parse(scope)
    factor = 2 * (n if scope is SampleScope.ALL else 1) * (h_levels if weighted else 1)
    numerator = n**2 * (n - 1) ** 4 * math.log(factor / delta)
    return math.ceil(numerator / (2 * eps**2))


def required_samples_for(
    graph: RootedWeightedGraph,
    eps: float,
    delta: float,
    scope: SampleScope | str = SampleScope.SINGLE,
) -> int:
    """Prescription for a concrete instance: 0-1 graphs use the unweighted bound."""
    if graph.is_simple():
        return required_samples(graph.n, eps, delta, 1, scope, weighted=False)
    h_levels = threshold_decompose(graph).h_count
    return required_samples(graph.n, eps, delta, h_levels, scope, weighted=True)


def marginal_bound(graph: RootedWeightedGraph) -> int:
    """Upper bound on any marginal contribution to the saving game.

    n - 1 on a 0-1 graph; (n - 1) * max weight in general, since each of the
    H level games contributes at most n - 1 times its gap.
    """
    top = max(graph.positive_weights(), default=0)
    return max(graph.n - 1, 0) * top


def simple_shapley_lower_bound(n: int) -> Fraction:
    """1/(n(n-1)): least Shapley value of a non-null player in a 0-1 saving game."""
    if n < 2:
        raise InvalidParameterError(f"lower bound needs n >= 2, got {n}")
    return Fraction(1, n * (n - 1))


def simple_cost_upper_bound(graph: RootedWeightedGraph, i: int) -> Fraction:
    """w(r, i) - 1/(n(n-1)): bound on a non-dummy player's cost-game value (0-1 graph)."""
    graph.check_player(i)
    return graph.root_weight(i) - simple_shapley_lower_bound(graph.n)
