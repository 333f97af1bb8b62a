"""Wall-time scaling of the sampler in the player count.

For each n a uniform-int instance is drawn and `samples` permutations are
timed `repeats` times; the median seconds per permutation and the growth
factor against the previous n are reported. A factor above
GROWTH_WARNING_FACTOR at a doubling of n is logged as a warning only.
"""

import sys
import time
from typing import Optional, Sequence, TextIO

import numpy as np

from core.exceptions import InvalidParameterError
from core.logger import get_logger
from graph.weight_models import random_instance
from shapley.monte_carlo import monte_carlo_shapley
from shapley.seeding import check_seed, derive_seed

logger = get_logger(__name__)

DEFAULT_SCALING_NS = (64, 128, 256)
# n^2 log n grows by ~4.6 at n = 64 -> 128
GROWTH_WARNING_FACTOR = 5.5
SCALING_MODEL = "uniform-int:0:9"


def time_per_permutation(
    ns: Sequence[int],
    samples: int,
    seed: int,
    repeats: int = 3,
) -> list[tuple[int, float, Optional[float]]]:
    """(n, median seconds per permutation, growth vs previous n or None)."""
    if samples < 1 or repeats < 1:
        raise InvalidParameterError("samples and repeats must be >= 1")
    seed = check_seed(seed)
    rows: list[tuple[int, float, Optional[float]]] = []
    previous = None
    for n in ns:
        graph = random_instance(n, SCALING_MODEL, derive_seed(seed, n))
        timings = []
        for r in range(repeats):
            start = time.perf_counter()
            monte_carlo_shapley(graph, samples, derive_seed(seed, n, r), n_jobs=1)
            timings.append((time.perf_counter() - start) / samples)
        median = float(np.median(timings))
        growth = None
        if previous is not None:
            growth = median / previous[1] if previous[1] > 0 else None
            if growth is not None and n == 2 * previous[0] and growth > GROWTH_WARNING_FACTOR:
                logger.warning(
                    "采样耗时增长超过预期",
                    extra={"n": n, "growth": round(growth, 3), "limit": GROWTH_WARNING_FACTOR},
                )
        rows.append((n, median, growth))
        previous = (n, median)
        logger.info("规模测试", extra={"n": n, "seconds_per_permutation": median})
    return rows


def cmd_scaling(
    ns: Sequence[int] = DEFAULT_SCALING_NS,
    samples: int = 10,
    seed: int = 0,
    repeats: int = 3,
    out: Optional[TextIO] = None,
) -> int:
    """Prints `n seconds_per_permutation growth` rows."""
    stream = out or sys.stdout
    stream.write("n seconds_per_permutation growth\n")
    for n, median, growth in time_per_permutation(ns, samples, seed, repeats):
        stream.write(f"{n} {median:.6g} {'-' if growth is None else format(growth, '.3f')}\n")
    return 0
