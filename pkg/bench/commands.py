"""Sub-commands `exact`, `estimate` and `generate`.

Every command writes its payload to `out` (stdout by default) and returns the
process exit code; failures surface as core.exceptions types and are turned
into exit codes by bench.error_handler.
"""

import sys
from typing import Optional, TextIO

from config.settings import get_settings
from core.exceptions import GenerationCapExceeded, UsageException
from core.logger import get_logger
from game.characteristic import GameKind
from game.null_players import is_null_player
from graph.instance_io import read_instance, render_instance
from graph.model import RootedWeightedGraph
from graph.weight_models import parse_weight_model, random_instance
from shapley.bounds import SampleScope, required_samples_for
from shapley.cost import cost_estimates_from_saving, cost_levels_from_saving
from shapley.exact import exact_shapley
from shapley.monte_carlo import monte_carlo_shapley
from shapley.seeding import check_seed, derive_seed
from shapley.types import render_decimal, render_rational

logger = get_logger(__name__)


def _emit(out: Optional[TextIO], *lines: str) -> None:
    stream = out or sys.stdout
    for line in lines:
        stream.write(line + "\n")


def _join_rational(values) -> str:
    return " ".join(render_rational(v) for v in values)


def _join_decimal(values) -> str:
    return " ".join(render_decimal(v) for v in values)


def cmd_exact(instance: str, kind: str = "saving", out: Optional[TextIO] = None) -> int:
    """Prints exact Shapley values: a rational line, then a decimal line."""
    graph = read_instance(instance)
    vector = exact_shapley(graph, GameKind.parse(kind))
    _emit(out, _join_rational(vector.values), _join_decimal(vector.values))
    logger.info("精确 Shapley 计算完成", extra={"n": graph.n, "kind": vector.kind.value})
    return 0


def resolve_sample_count(
    graph: RootedWeightedGraph,
    samples: Optional[int],
    eps: Optional[float],
    delta: Optional[float],
    scope: str = "single",
) -> int:
    """M from --samples, or from --eps/--delta via the Hoeffding prescription.

    Raises:
      UsageException: Unless exactly one of --samples or the (--eps, --delta)
        pair is given.
    """
    has_bound = eps is not None or delta is not None
    if samples is not None and has_bound:
        raise UsageException("--samples cannot be combined with --eps/--delta")
    if samples is None and not has_bound:
        raise UsageException("either --samples or --eps and --delta is required")
    if samples is not None:
        if samples < 1:
            raise UsageException(f"--samples must be >= 1, got {samples}")
        return samples
    if eps is None or delta is None:
        raise UsageException("--eps and --delta must be given together")
    return required_samples_for(graph, eps, delta, SampleScope.parse(scope))


def cmd_estimate(
    instance: str,
    samples: Optional[int] = None,
    eps: Optional[float] = None,
    delta: Optional[float] = None,
    scope: str = "single",
    seed: int = 0,
    per_level: bool = False,
    workers: Optional[int] = None,
    eliminate_nulls: bool = False,
    kind: str = "saving",
    out: Optional[TextIO] = None,
) -> int:
    """Prints M, the estimates and, in per-level mode, one line per level.

    The sampler always estimates the saving game; with kind="cost" every value
    printed is the derived cost-game estimate w(r, i) - phi_i.

    Output lines:
      M <m>
      seed <seed>
      phi <p/q ...>
      decimal <d ...>
      level <g_h> <p/q ...>      (per-level mode only)
    """
    game = GameKind.parse(kind)
    graph = read_instance(instance)
    m = resolve_sample_count(graph, samples, eps, delta, scope)
    report = monte_carlo_shapley(
        graph,
        m,
        check_seed(seed),
        per_level=per_level,
        n_jobs=workers,
        eliminate_nulls=eliminate_nulls,
    )
    values = list(report.estimates)
    level_rows = report.per_level
    if game is GameKind.COST:
        values = cost_estimates_from_saving(graph, report)
        if level_rows is not None:
            level_rows = cost_levels_from_saving(graph, report)
    lines = [
        f"M {report.sample_count}",
        f"seed {report.seed}",
        f"phi {_join_rational(values)}",
        f"decimal {_join_decimal(values)}",
    ]
    if level_rows is not None:
        lines.extend(
            f"level {gamma} {_join_rational(row)}"
            for gamma, row in zip(report.levels, level_rows)
        )
    _emit(out, *lines)
    logger.info("蒙特卡洛估计输出完成", extra={"n": graph.n, "M": m, "kind": game.value})
    return 0


def generate_instance(
    n: int,
    model,
    master_seed: int,
    keys: tuple[int, ...] = (),
    require_nonnull: Optional[int] = None,
    max_attempts: Optional[int] = None,
) -> tuple[RootedWeightedGraph, int]:
    """Draws instances until `require_nonnull` (if any) is not a null player.

    Attempt k uses the seed derived from (master_seed, *keys, k).

    Returns:
      The accepted instance and the number of attempts it took.

    Raises:
      GenerationCapExceeded: After max_attempts rejected draws.
    """
    if isinstance(model, str):
        model = parse_weight_model(model)
    limit = get_settings().generation.max_attempts if max_attempts is None else max_attempts
    for attempt in range(limit):
        graph = random_instance(n, model, derive_seed(master_seed, *keys, attempt))
        if require_nonnull is None:
            return graph, attempt + 1
        graph.check_player(require_nonnull)
        if not is_null_player(graph, require_nonnull):
            return graph, attempt + 1
    raise GenerationCapExceeded(limit, require_nonnull)


def cmd_generate(
    n: int,
    model: str = "binary:0.5",
    seed: int = 0,
    require_nonnull: Optional[int] = None,
    output: Optional[str] = None,
    out: Optional[TextIO] = None,
) -> int:
    """Writes a random instance to `output` (or `out`), with provenance comments."""
    weight_model = parse_weight_model(model)
    graph, attempts = generate_instance(n, weight_model, check_seed(seed), (), require_nonnull)
    comments = [f"model {weight_model.spec()} seed {seed}", f"attempts {attempts}"]
    text = render_instance(graph, comments)
    if output:
        with open(output, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        (out or sys.stdout).write(text)
    logger.info(
        "实例生成完成",
        extra={"n": n, "model": weight_model.spec(), "attempts": attempts, "output": output},
    )
    return 0
