"""
实验流程 - 经验最小样本量搜索

功能：
1. ExperimentConfig（pydantic）从 key=value 配置文件加载
2. 为每个 n 生成玩家 1 非空的实例，并以精确 Shapley 值作为真值
3. 以 m_step 递增 M，对每个 (实例, M) 运行 trials 次独立估计
4. 记录所有实例同时满足成功率 >= 1 - delta 的最小 M
5. 输出 success.csv 与 mmin.csv（排序后写出，结果与调度无关）

Seeds: instance generation uses derive_seed(master_seed, 0, n, instance_id,
attempt); the estimate of trial t at sample count M uses
derive_seed(master_seed, 1, n, instance_id, M, t). One estimate per trial is
scored against every eps of the grid.
"""

import csv
import dataclasses
import os
from fractions import Fraction
from typing import Optional

from joblib import Parallel, delayed
from pydantic import BaseModel, ValidationError, field_validator, model_validator

from core.exceptions import InvalidParameterError
from core.logger import get_logger
from game.characteristic import GameKind
from graph.model import RootedWeightedGraph
from graph.weight_models import parse_weight_model
from bench.commands import generate_instance
from shapley.bounds import SampleScope, required_samples
from shapley.exact import exact_shapley_subsets
from shapley.monte_carlo import monte_carlo_shapley
from shapley.seeding import derive_seed

logger = get_logger(__name__)

GENERATION_PURPOSE = 0
ESTIMATE_PURPOSE = 1

SUCCESS_HEADER = ["n", "instance_id", "eps", "M", "successes", "trials"]
MMIN_HEADER = ["n", "eps", "inv_eps_sq", "M_min", "theoretical_M"]
CAP = "CAP"


class ExperimentConfig(BaseModel):
    """Parameters of the minimum-sample-size experiment."""

    n_range: list[int] = list(range(3, 11))
    eps_grid: list[float] = [0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1]
    delta: float = 0.25
    trials: int = 20
    m_step: int = 100
    m_cap: int = 1_000_000
    instances_per_n: int = 3
    weight_model: str = "binary:0.5"
    master_seed: int = 0
    n_jobs: int = 1  # joblib workers over trials

    @field_validator("n_range", mode="before")
    @classmethod
    def _parse_n_range(cls, value):
        if isinstance(value, str):
            text = value.strip()
            if ".." in text:
                low, high = text.split("..", 1)
                return list(range(int(low), int(high) + 1))
            return [int(part) for part in text.split(",") if part.strip()]
        return value

    @field_validator("eps_grid", mode="before")
    @classmethod
    def _parse_eps_grid(cls, value):
        if isinstance(value, str):
            return [float(part) for part in value.split(",") if part.strip()]
        return value

    @field_validator("weight_model")
    @classmethod
    def _check_weight_model(cls, value: str) -> str:
        parse_weight_model(value)
        return value

    @model_validator(mode="after")
    def _check_ranges(self) -> "ExperimentConfig":
        if not self.n_range or any(n < 1 for n in self.n_range):
            raise ValueError("n_range must list player counts >= 1")
        if not self.eps_grid or any(not 0 < e < 1 for e in self.eps_grid):
            raise ValueError("eps_grid entries must lie in (0, 1)")
        if self.eps_grid != sorted(self.eps_grid, reverse=True):
            raise ValueError("eps_grid must be sorted in descending order")
        if not 0 < self.delta < 1:
            raise ValueError("delta must lie in (0, 1)")
        for name in ("trials", "m_step", "m_cap", "instances_per_n", "n_jobs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must be an unsigned 64-bit integer")
        return self


def parse_config_text(text: str) -> ExperimentConfig:
    """Parses flat `key = value` lines; '#' starts a comment line.

    Raises:
      InvalidParameterError: On malformed lines, unknown keys or invalid values.
    """
    values: dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InvalidParameterError(f"config line {line_no}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in ExperimentConfig.model_fields:
            raise InvalidParameterError(f"config line {line_no}: unknown key {key!r}")
        values[key] = value
    try:
        return ExperimentConfig(**values)
    except (ValidationError, InvalidParameterError) as exc:
        raise InvalidParameterError(f"invalid experiment config: {exc}") from exc


def load_config(path: str) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config_text(fh.read())


def format_real(value: float) -> str:
    """12 significant digits, '.' separator."""
    return format(value, ".12g")


def _trial_estimate(graph: RootedWeightedGraph, m: int, seed: int) -> Fraction:
    return monte_carlo_shapley(graph, m, seed, n_jobs=1).player(1)


@dataclasses.dataclass
class ExperimentResult:
    """Rows of both output tables, already sorted.

    Attributes:
      success_rows: (n, instance_id, eps, M, successes, trials).
      mmin_rows: (n, eps, 1/eps^2, M_min or None at the cap, theoretical_M).
      anomalies: (n, eps) cells where theoretical_M < M_min.
    """

    success_rows: list[tuple[int, int, float, int, int, int]]
    mmin_rows: list[tuple[int, float, float, Optional[int], int]]
    anomalies: list[tuple[int, float]] = dataclasses.field(default_factory=list)


def _instances(config: ExperimentConfig, n: int) -> list[tuple[RootedWeightedGraph, Fraction]]:
    model = parse_weight_model(config.weight_model)
    out = []
    for instance_id in range(config.instances_per_n):
        graph, attempts = generate_instance(
            n,
            model,
            config.master_seed,
            (GENERATION_PURPOSE, n, instance_id),
            require_nonnull=1,
        )
        exact = exact_shapley_subsets(graph, GameKind.SAVING).player(1)
        logger.info(
            "实验实例已生成",
            extra={"n": n, "instance_id": instance_id, "attempts": attempts, "phi_1": str(exact)},
        )
        out.append((graph, exact))
    return out


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Runs the protocol and returns both tables.

    For every n the sample count grows by m_step until each eps of the grid
    has a M at which every instance reaches success rate >= 1 - delta, or the
    cap is hit (M_min recorded as None).
    """
    success_rows = []
    mmin_rows = []
    anomalies = []
    required = (1 - Fraction(str(config.delta))) * config.trials

    with Parallel(n_jobs=config.n_jobs) as parallel:
        for n in config.n_range:
            instances = _instances(config, n)
            m_min: dict[float, Optional[int]] = {eps: None for eps in config.eps_grid}
            m = config.m_step
            while m <= config.m_cap and any(v is None for v in m_min.values()):
                satisfied = {eps: True for eps in config.eps_grid}
                for instance_id, (graph, exact) in enumerate(instances):
                    seeds = [
                        derive_seed(config.master_seed, ESTIMATE_PURPOSE, n, instance_id, m, t)
                        for t in range(config.trials)
                    ]
                    if config.n_jobs == 1:
                        estimates = [_trial_estimate(graph, m, s) for s in seeds]
                    else:
                        estimates = parallel(delayed(_trial_estimate)(graph, m, s) for s in seeds)
                    errors = [abs(e - exact) / exact for e in estimates]
                    for eps in config.eps_grid:
                        bound = Fraction(str(eps))
                        successes = sum(1 for err in errors if err <= bound)
                        success_rows.append((n, instance_id, eps, m, successes, config.trials))
                        if successes < required:
                            satisfied[eps] = False
                for eps, ok in satisfied.items():
                    if ok and m_min[eps] is None:
                        m_min[eps] = m
                logger.debug("样本量搜索进度", extra={"n": n, "M": m, "resolved": sum(v is not None for v in m_min.values())})
                m += config.m_step

            for eps in config.eps_grid:
                theoretical = required_samples(n, eps, config.delta, scope=SampleScope.SINGLE)
                found = m_min[eps]
                if found is not None and theoretical < found:
                    anomalies.append((n, eps))
                    logger.warning(
                        "理论样本量小于经验最小样本量",
                        extra={"n": n, "eps": eps, "M_min": found, "theoretical_M": theoretical},
                    )
                if found is None:
                    logger.warning("样本量搜索达到上限", extra={"n": n, "eps": eps, "m_cap": config.m_cap})
                mmin_rows.append((n, eps, 1 / eps**2, found, theoretical))
            logger.info("n 完成", extra={"n": n, "M_min": {str(k): v for k, v in m_min.items()}})

    success_rows.sort(key=lambda r: (r[0], r[1], r[2], r[3]))
    mmin_rows.sort(key=lambda r: (r[0], r[1]))
    return ExperimentResult(success_rows=success_rows, mmin_rows=mmin_rows, anomalies=anomalies)


def write_tables(result: ExperimentResult, out_dir: str) -> tuple[str, str]:
    """Writes success.csv and mmin.csv (UTF-8, LF) and returns their paths."""
    os.makedirs(out_dir, exist_ok=True)
    success_path = os.path.join(out_dir, "success.csv")
    mmin_path = os.path.join(out_dir, "mmin.csv")

    with open(success_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SUCCESS_HEADER)
        for n, instance_id, eps, m, successes, trials in result.success_rows:
            writer.writerow([n, instance_id, format_real(eps), m, successes, trials])

    with open(mmin_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(MMIN_HEADER)
        for n, eps, inv_eps_sq, m_min, theoretical in result.mmin_rows:
            writer.writerow([
                n,
                format_real(eps),
                format_real(inv_eps_sq),
                CAP if m_min is None else m_min,
                theoretical,
            ])
    return success_path, mmin_path


def cmd_experiment(config_path: str, out_dir: str = ".") -> int:
    """Loads the config, runs the protocol and writes both CSV files."""
    config = load_config(config_path)
    logger.info("开始实验", extra=config.model_dump())
    result = run_experiment(config)
    success_path, mmin_path = write_tables(result, out_dir)
    logger.info(
        "实验完成",
        extra={"success_csv": success_path, "mmin_csv": mmin_path, "anomalies": len(result.anomalies)},
    )
    return 0
