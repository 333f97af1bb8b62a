"""
实验流程、配置解析与绘图坐标导出测试
"""

import csv
import io
import math

import pytest

from bench.experiment import (
    CAP,
    MMIN_HEADER,
    ExperimentConfig,
    load_config,
    parse_config_text,
    run_experiment,
    write_tables,
)
from bench.plotdata import cmd_plotdata, plot_rows, read_mmin
from core.exceptions import InvalidParameterError, UsageException
from main import main
from shapley.bounds import required_samples

SMALL_CONFIG = """
# small protocol run
n_range = 3
eps_grid = 0.9, 0.5
delta = 0.25
trials = 5
m_step = 50
m_cap = 3000
instances_per_n = 2
weight_model = binary:0.5
master_seed = 17
"""


def test_default_config():
    config = ExperimentConfig()
    assert config.n_range == list(range(3, 11))
    assert config.eps_grid == [0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1]
    assert (config.delta, config.trials, config.m_step) == (0.25, 20, 100)
    assert config.m_cap == 1_000_000
    assert config.instances_per_n == 3


def test_parse_config_text():
    config = parse_config_text("n_range = 3..5\neps_grid = 0.5,0.2\ntrials = 4\n")
    assert config.n_range == [3, 4, 5]
    assert config.eps_grid == [0.5, 0.2]
    assert config.trials == 4
    assert parse_config_text("n_range = 3, 6").n_range == [3, 6]


@pytest.mark.parametrize(
    "text",
    [
        "eps_grid = 0.2, 0.5",
        "eps_grid = 1.5",
        "delta = 1",
        "trials = 0",
        "weight_model = gauss:0:1",
        "colour = blue",
        "no equals sign",
        "master_seed = -3",
    ],
)
def test_invalid_config(text):
    with pytest.raises(InvalidParameterError):
        parse_config_text(text)


def _cells(result):
    return {(n, i, eps, m): s for n, i, eps, m, s, _ in result.success_rows}


def test_small_protocol_run(tmp_path):
    config = parse_config_text(SMALL_CONFIG)
    result = run_experiment(config)
    assert [(row[0], row[1]) for row in result.mmin_rows] == [(3, 0.5), (3, 0.9)]

    cells = _cells(result)
    needed = 0.75 * config.trials
    m_min = {eps: found for _, eps, _, found, _ in result.mmin_rows}
    for eps, found in m_min.items():
        assert found is not None
        assert all(cells[(3, i, eps, found)] >= needed for i in range(2))
        if found > config.m_step:
            assert any(cells[(3, i, eps, found - config.m_step)] < needed for i in range(2))
    assert m_min[0.9] <= m_min[0.5]
    for n, eps, inv_eps_sq, found, theoretical in result.mmin_rows:
        assert theoretical == required_samples(n, eps, 0.25)
        assert ((n, eps) in result.anomalies) == (theoretical < found)
        assert inv_eps_sq == pytest.approx(1 / eps**2)

    first = write_tables(result, str(tmp_path / "a"))
    second = write_tables(run_experiment(config), str(tmp_path / "b"))
    for left, right in zip(first, second):
        with open(left, "rb") as a, open(right, "rb") as b:
            assert a.read() == b.read()

    with open(first[1], encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == MMIN_HEADER
    assert rows[1][:3] == ["3", "0.5", "4"]


def test_cmd_experiment_writes_csv(tmp_path):
    config_path = tmp_path / "exp.cfg"
    config_path.write_text(SMALL_CONFIG.replace("eps_grid = 0.9, 0.5", "eps_grid = 0.9"), encoding="utf-8")
    assert load_config(str(config_path)).eps_grid == [0.9]
    out_dir = tmp_path / "out"
    assert main(["experiment", str(config_path), "--out-dir", str(out_dir)]) == 0
    success = (out_dir / "success.csv").read_bytes()
    assert success.startswith(b"n,instance_id,eps,M,successes,trials\n")
    assert b"\r" not in success


def _write_mmin(path, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(MMIN_HEADER)
        writer.writerows(rows)


@pytest.fixture
def mmin_file(tmp_path):
    grid = [0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1]
    rows = []
    for n in range(3, 11):
        for k, eps in enumerate(grid):
            m_min = CAP if (n == 10 and eps == 0.1) else 100 * (k + 1) * n
            rows.append([n, format(eps, ".12g"), format(1 / eps**2, ".12g"), m_min, required_samples(n, eps, 0.25)])
    path = tmp_path / "mmin.csv"
    _write_mmin(path, rows)
    return str(path)


def test_plot_eps_mode(mmin_file):
    header, coords = plot_rows(read_mmin(mmin_file), "eps", n=3)
    assert header == ["inv_eps_sq", "M_min"]
    assert len(coords) == 9
    assert [float(x) for x, _ in coords] == sorted(float(x) for x, _ in coords)


def test_plot_players_mode(mmin_file):
    header, coords = plot_rows(read_mmin(mmin_file), "players", eps=0.1)
    assert header == ["n", "ln_M_min", "ln_theoretical_M"]
    # n = 10 hit the cap and is skipped
    assert [row[0] for row in coords] == [str(n) for n in range(3, 10)]
    ln_theory = [float(row[2]) for row in coords]
    assert all(a < b for a, b in zip(ln_theory, ln_theory[1:]))
    assert float(coords[0][2]) == pytest.approx(math.log(14972), abs=1e-9)
    assert round(float(coords[0][2]), 3) == 9.614


def test_plot_errors(mmin_file, tmp_path):
    rows = read_mmin(mmin_file)
    with pytest.raises(InvalidParameterError):
        plot_rows(rows, "eps", n=42)
    with pytest.raises(InvalidParameterError):
        plot_rows(rows, "players", eps=0.15)
    with pytest.raises(UsageException):
        plot_rows(rows, "eps")
    with pytest.raises(UsageException):
        plot_rows(rows, "bars", n=3)
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b\n1,2\n", encoding="utf-8")
    with pytest.raises(InvalidParameterError):
        read_mmin(str(bad))


def test_cmd_plotdata_output(mmin_file):
    out = io.StringIO()
    assert cmd_plotdata(mmin_file, "eps", n=4, out=out) == 0
    lines = out.getvalue().splitlines()
    assert lines[0] == "inv_eps_sq,M_min"
    assert len(lines) == 10


@pytest.mark.slow
def test_protocol_reproduction_small_n(tmp_path):
    config = ExperimentConfig(n_range=[3, 4, 5])
    result = run_experiment(config)
    cells = _cells(result)
    needed = 0.75 * config.trials
    by_n = {}
    for n, eps, _, found, theoretical in result.mmin_rows:
        assert found is not None
        assert theoretical >= found
        for i in range(config.instances_per_n):
            assert cells[(n, i, eps, found)] >= needed
        if found > config.m_step:
            assert any(cells[(n, i, eps, found - config.m_step)] < needed for i in range(config.instances_per_n))
        by_n.setdefault(n, []).append((eps, found))
    for rows in by_n.values():
        ordered = [found for _, found in sorted(rows, reverse=True)]
        assert ordered == sorted(ordered)
