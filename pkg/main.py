"""
MCST Shapley 工具命令行入口

子命令：
1. exact       精确 Shapley 值（成本博弈 / 节约博弈）
2. estimate    蒙特卡洛估计（给定 M 或 eps/delta）
3. generate    随机实例生成（可要求指定玩家非空）
4. experiment  经验最小样本量实验，输出 success.csv / mmin.csv
5. plotdata    从 mmin.csv 导出绘图坐标
6. scaling     采样耗时随 n 的增长
"""

import argparse
import sys
from typing import Optional, Sequence

from dotenv import load_dotenv

# .env must be loaded before settings and logging read the environment
load_dotenv()

from bench.commands import cmd_estimate, cmd_exact, cmd_generate  # noqa: E402
from bench.error_handler import run_with_error_handling  # noqa: E402
from bench.experiment import cmd_experiment  # noqa: E402
from bench.plotdata import PLOT_MODES, cmd_plotdata  # noqa: E402
from bench.scaling import DEFAULT_SCALING_NS, cmd_scaling  # noqa: E402
from core.logger import get_logger, set_log_level  # noqa: E402
from core.run_context import run_scope  # noqa: E402

logger = get_logger(__name__)


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="main.py",
        description="Exact and Monte Carlo Shapley values of minimum cost spanning tree games.",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Override LOG_LEVEL for this run",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # -- exact --
    p_exact = subparsers.add_parser("exact", help="Exact Shapley values")
    p_exact.add_argument("instance", help="Instance file")
    p_exact.add_argument("--kind", choices=["saving", "cost"], default="saving")

    # -- estimate --
    p_est = subparsers.add_parser("estimate", help="Monte Carlo Shapley estimate")
    p_est.add_argument("instance", help="Instance file")
    p_est.add_argument("--samples", type=int, help="Number of sampled permutations M")
    p_est.add_argument("--eps", type=float, help="Relative error (M from the Hoeffding bound)")
    p_est.add_argument("--delta", type=float, help="Failure probability")
    p_est.add_argument("--scope", choices=["single", "all"], default="single")
    p_est.add_argument("--seed", type=int, default=0)
    p_est.add_argument("--per-level", action="store_true", help="Also estimate every level game")
    p_est.add_argument("--workers", type=int, help="joblib workers (default MCST_N_JOBS)")
    p_est.add_argument("--eliminate-nulls", action="store_true", help="Remove null players first")
    p_est.add_argument(
        "--kind", choices=["saving", "cost"], default="saving", help="Report saving or derived cost-game values"
    )

    # -- generate --
    p_gen = subparsers.add_parser("generate", help="Random instance")
    p_gen.add_argument("n", type=int, help="Number of players")
    p_gen.add_argument("--model", default="binary:0.5", help="binary:P or uniform-int:L:U")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--require-nonnull", type=int, metavar="PLAYER")
    p_gen.add_argument("--output", help="Output path (stdout when absent)")

    # -- experiment --
    p_exp = subparsers.add_parser("experiment", help="Minimum sample size experiment")
    p_exp.add_argument("config", help="key=value config file")
    p_exp.add_argument("--out-dir", default=".", help="Directory for success.csv and mmin.csv")

    # -- plotdata --
    p_plot = subparsers.add_parser("plotdata", help="Plot coordinates from mmin.csv")
    p_plot.add_argument("mmin", help="mmin.csv path")
    p_plot.add_argument("--mode", choices=PLOT_MODES, required=True)
    p_plot.add_argument("--n", type=int, help="Fixed n for --mode eps")
    p_plot.add_argument("--eps", type=float, help="Fixed eps for --mode players")

    # -- scaling --
    p_scale = subparsers.add_parser("scaling", help="Seconds per sampled permutation against n")
    p_scale.add_argument(
        "--ns", type=_int_list, default=list(DEFAULT_SCALING_NS), help="Comma list of n"
    )
    p_scale.add_argument("--samples", type=int, default=10)
    p_scale.add_argument("--seed", type=int, default=0)
    p_scale.add_argument("--repeats", type=int, default=3)

    return parser


def dispatch(args: argparse.Namespace) -> int:
    if args.command == "exact":
        return cmd_exact(args.instance, args.kind)
    if args.command == "estimate":
        return cmd_estimate(
            args.instance,
            samples=args.samples,
            eps=args.eps,
            delta=args.delta,
            scope=args.scope,
            seed=args.seed,
            per_level=args.per_level,
            workers=args.workers,
            eliminate_nulls=args.eliminate_nulls,
            kind=args.kind,
        )
    if args.command == "generate":
        return cmd_generate(
            args.n,
            model=args.model,
            seed=args.seed,
            require_nonnull=args.require_nonnull,
            output=args.output,
        )
    if args.command == "experiment":
        return cmd_experiment(args.config, args.out_dir)
    if args.command == "plotdata":
        return cmd_plotdata(args.mmin, args.mode, n=args.n, eps=args.eps)
    return cmd_scaling(args.ns, samples=args.samples, seed=args.seed, repeats=args.repeats)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level:
        set_log_level(args.log_level)
    with run_scope():
        logger.debug("执行子命令", extra={"command": args.command})
        return run_with_error_handling(lambda: dispatch(args))


if __name__ == "__main__":
    sys.exit(main())
