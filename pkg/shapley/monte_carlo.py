"""Monte Carlo estimation of saving-game Shapley values.

Each sample draws a uniform permutation, computes the cost profile of its
prefixes incrementally and adds every player's integer marginal contribution

    Merg(pi, i) = w(r, i) - (c(prefix + i) - c(prefix))

to an exact accumulator. In per-level mode the same permutation is replayed on
every 0-1 level graph of the threshold decomposition, which yields the
per-level estimates as well; the combined estimate is unchanged.

Samples are cut into fixed-size blocks. Block b draws its permutations from a
counter-based stream keyed by (seed, b), and block sums are integers, so the
report depends only on (graph, m, seed, per_level), never on how many
workers ran the blocks.
"""

from fractions import Fraction
from typing import Optional, Sequence

from joblib import Parallel, delayed

from config.settings import get_settings
from core.exceptions import EstimatorInvariantError, InvalidParameterError
from core.logger import get_logger
from game.characteristic import saving_value
from game.null_players import eliminate_null_players
from graph.decomposition import threshold_decompose
from graph.model import RootedWeightedGraph
from mst.oracle import profile_costs
from shapley.bounds import marginal_bound
from shapley.seeding import block_generator, check_seed, random_permutations
from shapley.types import EstimateReport

logger = get_logger(__name__)

Matrix = tuple[tuple[int, ...], ...]

# Samples per independently seeded block; part of the seed-to-permutation mapping.
BLOCK_SIZE = 256


def _accumulate(
    matrix: Matrix,
    perm: Sequence[int],
    totals: list[int],
    bound: int,
) -> None:
    """Adds Merg(pi, i) for every player of one permutation into `totals`."""
    root_row = matrix[0]
    previous = 0
    for i, cost in zip(perm, profile_costs(matrix, perm)):
        marginal = root_row[i] - (cost - previous)
        previous = cost
        if not 0 <= marginal <= bound:
            raise EstimatorInvariantError(
                f"marginal contribution {marginal} outside [0, {bound}]",
                details={"player": i, "permutation": list(perm)},
            )
        totals[i - 1] += marginal


def _run_block(
    matrix: Matrix,
    level_matrices: Sequence[Matrix],
    n: int,
    seed: int,
    block: int,
    count: int,
    bound: int,
) -> tuple[list[int], list[list[int]]]:
    """Integer sums of marginal contributions over one block of samples."""
    rng = block_generator(seed, block)
    totals = [0] * n
    level_totals = [[0] * n for _ in level_matrices]
    level_bound = max(n - 1, 0)
    for perm in random_permutations(rng, n, count):
        _accumulate(matrix, perm, totals, bound)
        for level_matrix, row in zip(level_matrices, level_totals):
            _accumulate(level_matrix, perm, row, level_bound)
    return totals, level_totals


def _blocks(m: int, block_size: int) -> list[tuple[int, int]]:
    """(block index, sample count) pairs covering m samples."""
    return [
        (b, min(block_size, m - b * block_size))
        for b in range((m + block_size - 1) // block_size)
    ]


def monte_carlo_shapley(
    graph: RootedWeightedGraph,
    m: int,
    seed: int,
    per_level: bool = False,
    n_jobs: Optional[int] = None,
    eliminate_nulls: bool = False,
) -> EstimateReport:
    """Estimates the saving-game Shapley value from m random permutations.

    Args:
      graph: The instance.
      m: Number of sampled permutations, >= 1.
      seed: Unsigned 64-bit master seed.
      per_level: Also estimate every level game of the threshold decomposition.
      n_jobs: joblib worker count; defaults to SamplingConfig.n_jobs.
      eliminate_nulls: Remove null players first and sample the reduced game;
        removed players get exactly 0.

    Returns:
      EstimateReport with exact rational estimates that sum to v(N).

    Raises:
      InvalidParameterError: If m < 1 or the seed is invalid.
      EstimatorInvariantError: If a marginal contribution leaves its bound or
        the estimates fail to sum to v(N).
    """
    if m < 1:
        raise InvalidParameterError(f"sample count must be >= 1, got {m}")
    seed = check_seed(seed)
    n_jobs = get_settings().sampling.n_jobs if n_jobs is None else n_jobs

    decomp = threshold_decompose(graph)
    elimination = eliminate_null_players(graph) if eliminate_nulls else None
    work = elimination.reduced if elimination else graph
    kept = elimination.kept if elimination else tuple(graph.players())

    level_matrices: list[Matrix] = []
    if per_level:
        for level in decomp.level_graphs():
            level_matrices.append(level.induced(kept).matrix if elimination else level.matrix)

    n = work.n
    totals = [0] * n
    level_totals = [[0] * n for _ in level_matrices]
    if n > 0:
        bound = marginal_bound(work)
        blocks = _blocks(m, BLOCK_SIZE)
        job = delayed(_run_block)
        tasks = (job(work.matrix, level_matrices, n, seed, b, count, bound) for b, count in blocks)
        if n_jobs == 1:
            results = [fn(*args, **kwargs) for fn, args, kwargs in tasks]
        else:
            results = Parallel(n_jobs=n_jobs)(tasks)
        for block_totals, block_levels in results:
            for k in range(n):
                totals[k] += block_totals[k]
            for row, block_row in zip(level_totals, block_levels):
                for k in range(n):
                    row[k] += block_row[k]

    grand = saving_value(work, work.grand_coalition())
    if sum(totals) != m * grand:
        raise EstimatorInvariantError(
            "marginal contributions do not telescope to v(N)",
            details={"sum": sum(totals), "expected": m * grand},
        )

    estimates = [Fraction(t, m) for t in totals]
    level_rows = [[Fraction(t, m) for t in row] for row in level_totals]
    if elimination:
        estimates = elimination.expand(estimates)
        level_rows = [elimination.expand(row) for row in level_rows]

    logger.debug(
        "蒙特卡洛估计完成",
        extra={
            "n": graph.n,
            "samples": m,
            "seed": seed,
            "per_level": per_level,
            "n_jobs": n_jobs,
            "removed": list(elimination.removed) if elimination else [],
        },
    )
    return EstimateReport(
        estimates=tuple(estimates),
        sample_count=m,
        seed=seed,
        per_level=tuple(tuple(row) for row in level_rows) if per_level else None,
        levels=decomp.levels if per_level else (),
        removed=elimination.removed if elimination else (),
    )
