"""
测试公共配置：项目根目录入 sys.path、slow 标记开关、共享实例夹具
"""

import os
import sys

import pytest

# 添加项目根目录到路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.settings import get_settings, update_settings  # noqa: E402
from graph.model import RootedWeightedGraph  # noqa: E402
from graph.weight_models import random_instance  # noqa: E402
from shapley.seeding import derive_seed  # noqa: E402

CORPUS_MODELS = ("binary:0.5", "uniform-int:0:9")


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow acceptance tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow") or os.getenv("MCST_RUN_SLOW") == "1":
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow or MCST_RUN_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def random_corpus(ns, count, master_seed=2024, models=CORPUS_MODELS):
    """`count` instances per n, alternating weight models, fully seeded."""
    graphs = []
    for n in ns:
        for k in range(count):
            model = models[k % len(models)]
            graphs.append(random_instance(n, model, derive_seed(master_seed, n, k)))
    return graphs


@pytest.fixture
def example_graph():
    """w(r,1)=1, w(1,2)=2, w(r,2)=4: saving Shapley (1, 1), cost Shapley (0, 3)."""
    return RootedWeightedGraph.from_pairs(2, {(0, 1): 1, (0, 2): 4, (1, 2): 2})


@pytest.fixture
def example_instance_file(tmp_path, example_graph):
    path = tmp_path / "example.txt"
    path.write_text("n 2\ne 0 1 1\ne 0 2 4\ne 1 2 2\n", encoding="ascii")
    return str(path)


@pytest.fixture
def simple_graph():
    """0-1 graph on 4 players: 1 and 2 share a free edge; 3 and 4 are null.

    v(S) = 1 iff {1, 2} is in S, so the saving Shapley vector is (1/2, 1/2, 0, 0).
    """
    return RootedWeightedGraph.from_pairs(
        4,
        {
            (0, 1): 1, (0, 2): 1, (0, 3): 1, (0, 4): 0,
            (1, 2): 0, (1, 3): 1, (1, 4): 1,
            (2, 3): 1, (2, 4): 1,
            (3, 4): 1,
        },
    )


@pytest.fixture
def restore_settings():
    """Puts the global settings back after a test that changes them."""
    settings = get_settings()
    saved = (settings.oracle, settings.sampling, settings.generation)
    yield settings
    update_settings(oracle=saved[0], sampling=saved[1], generation=saved[2])
