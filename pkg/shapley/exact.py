"""Exact Shapley values of MCST cost and saving games.

Two independent oracles:

* subsets      phi_i = sum_{S not containing i} |S|! (n-|S|-1)! / n! * (g(S+i) - g(S))
* permutations phi_i = (1/n!) * sum over all orderings of i's marginal contribution

Both accumulate integer numerators over the common denominator n!, so the
results are exact rationals. Coalition costs are produced by extending MSTs
one player at a time (mst.oracle.extend_edges), walking the subset lattice or
the permutation tree depth first so every prefix is computed once.
"""

from fractions import Fraction
from math import factorial

from config.settings import get_settings
from core.exceptions import OracleBudgetExceeded
from core.logger import get_logger
from game.characteristic import GameKind
from graph.decomposition import ThresholdDecomposition
from graph.model import ROOT, RootedWeightedGraph
from mst.oracle import extend_edges
from shapley.types import ShapleyVector

logger = get_logger(__name__)


def coalition_cost_table(graph: RootedWeightedGraph) -> list[int]:
    """c(S) for every coalition, indexed by compact mask (bit k-1 = player k)."""
    n = graph.n
    matrix = graph.matrix
    costs = [0] * (1 << n)

    def visit(mask, tree, vertices, first):
        for i in range(first, n + 1):
            edges, cost = extend_edges(matrix, tree, vertices, i)
            child = mask | (1 << (i - 1))
            costs[child] = cost
            if i < n:
                visit(child, edges, vertices + [i], i + 1)

    visit(0, [], [ROOT], 1)
    return costs


def _game_table(graph: RootedWeightedGraph, kind: GameKind) -> list[int]:
    costs = coalition_cost_table(graph)
    if kind is GameKind.COST:
        return costs
    # v(S) = sum of root weights in S - c(S)
    star = [0] * len(costs)
    for mask in range(1, len(costs)):
        low = mask & -mask
        star[mask] = star[mask ^ low] + graph.root_weight(low.bit_length())
    return [s - c for s, c in zip(star, costs)]


def _check_budget(oracle: str, n: int, limit: int) -> None:
    if n > limit:
        raise OracleBudgetExceeded(oracle, n, limit)


def exact_shapley_subsets(graph: RootedWeightedGraph, kind: GameKind | str) -> ShapleyVector:
    """Subset-weighted Shapley formula.

    Raises:
      OracleBudgetExceeded: If n exceeds the subset oracle budget.
    """
    kind = GameKind.parse(kind)
    n = graph.n
    _check_budget("subset", n, get_settings().oracle.subset_max_players)
    if n == 0:
        return ShapleyVector((), kind)

    g = _game_table(graph, kind)
    coef = [factorial(k) * factorial(n - k - 1) for k in range(n)]
    sizes = [bin(mask).count("1") for mask in range(1 << n)]
    numerators = [0] * n
    for mask in range(1 << n):
        weight = coef[sizes[mask]] if sizes[mask] < n else 0
        if not weight:
            continue
        base = g[mask]
        for k in range(n):
            bit = 1 << k
            if not mask & bit:
                numerators[k] += weight * (g[mask | bit] - base)

    denominator = factorial(n)
    logger.debug("子集枚举精确 Shapley 完成", extra={"n": n, "kind": kind.value})
    return ShapleyVector(tuple(Fraction(num, denominator) for num in numerators), kind)


def exact_shapley_permutations(graph: RootedWeightedGraph, kind: GameKind | str) -> ShapleyVector:
    """Average marginal contribution over all n! orderings.

    A node of the permutation tree at depth d is the prefix of (n - d)!
    orderings, so its marginal contribution is counted with that multiplicity.

    Raises:
      OracleBudgetExceeded: If n exceeds the permutation oracle budget.
    """
    kind = GameKind.parse(kind)
    n = graph.n
    _check_budget("permutation", n, get_settings().oracle.permutation_max_players)
    if n == 0:
        return ShapleyVector((), kind)

    matrix = graph.matrix
    multiplicity = [factorial(n - d) for d in range(n + 1)]
    numerators = [0] * (n + 1)
    saving = kind is GameKind.SAVING

    def visit(tree, vertices, remaining, prev_cost):
        depth = len(vertices)  # after adding one more player
        for i in remaining:
            edges, cost = extend_edges(matrix, tree, vertices, i)
            marginal = cost - prev_cost
            if saving:
                marginal = matrix[ROOT][i] - marginal
            numerators[i] += multiplicity[depth] * marginal
            if len(remaining) > 1:
                visit(edges, vertices + [i], [j for j in remaining if j != i], cost)

    visit([], [ROOT], list(range(1, n + 1)), 0)
    denominator = factorial(n)
    return ShapleyVector(tuple(Fraction(num, denominator) for num in numerators[1:]), kind)


def exact_shapley(graph: RootedWeightedGraph, kind: GameKind | str = GameKind.SAVING) -> ShapleyVector:
    """Default exact oracle (subset enumeration)."""
    return exact_shapley_subsets(graph, kind)


def level_exact_shapley(decomp: ThresholdDecomposition, kind: GameKind | str) -> list[ShapleyVector]:
    """Exact Shapley vector of every level game, level 1 first."""
    return [exact_shapley_subsets(level, kind) for level in decomp.level_graphs()]
