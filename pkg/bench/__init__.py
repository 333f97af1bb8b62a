"""Command-line driver: exact/estimate/generate commands, experiment protocol, plot data, scaling."""

from bench.commands import (
    cmd_estimate,
    cmd_exact,
    cmd_generate,
    generate_instance,
    resolve_sample_count,
)
from bench.error_handler import ErrorReport, run_with_error_handling
from bench.experiment import (
    ExperimentConfig,
    ExperimentResult,
    cmd_experiment,
    load_config,
    parse_config_text,
    run_experiment,
    write_tables,
)
from bench.plotdata import cmd_plotdata, plot_rows, read_mmin
from bench.scaling import cmd_scaling, time_per_permutation

__all__ = [
    "cmd_estimate",
    "cmd_exact",
    "cmd_generate",
    "generate_instance",
    "resolve_sample_count",
    "ErrorReport",
    "run_with_error_handling",
    "ExperimentConfig",
    "ExperimentResult",
    "cmd_experiment",
    "load_config",
    "parse_config_text",
    "run_experiment",
    "write_tables",
    "cmd_plotdata",
    "plot_rows",
    "read_mmin",
    "cmd_scaling",
    "time_per_permutation",
]
