"""MST oracle: union-find, Kruskal, incremental extension and cost profiles."""


import numpy as np
import pytest

from core.exceptions import EstimatorInvariantError, InvalidParameterError
from graph.model import Coalition, RootedWeightedGraph
from mst.oracle import (
    TreeState,
    extend,
    kruskal,
    mst_cost,
    new_tree_state,
    permutation_cost_profile,
    tree_state_for,
    validate_tree_state,
)
from mst.union_find import UnionFind
from shapley.exact import coalition_cost_table
from tests.conftest import random_corpus


def test_union_find():
    uf = UnionFind()
    assert uf.union(1, 2)
    assert uf.union(3, 4)
    assert not uf.connected(1, 3)
    assert uf.union(2, 3)
    assert uf.connected(1, 4)
    assert not uf.union(4, 1)


def test_kruskal_tie_break_is_lexicographic():
    # three zero-weight edges form a triangle; (0, 1) and (0, 2) win the tie
    edges = [(0, 1, 2), (0, 0, 2), (0, 0, 1), (5, 2, 3)]
    chosen, cost = kruskal(edges, 4)
    assert chosen == [(0, 0, 1), (0, 0, 2), (5, 2, 3)]
    assert cost == 5


def test_kruskal_single_vertex():
    assert kruskal([], 1) == ([], 0)


def test_example_costs(example_graph):
    assert mst_cost(example_graph, Coalition()) == 0
    assert mst_cost(example_graph, Coalition.of([1])) == 1
    assert mst_cost(example_graph, Coalition.of([2])) == 4
    assert mst_cost(example_graph, Coalition.of([1, 2])) == 3


def test_extend_matches_from_scratch(example_graph):
    state = extend(example_graph, new_tree_state(example_graph), 2)
    assert state == TreeState(Coalition.of([2]), ((0, 2),), 4)
    state = extend(example_graph, state, 1)
    assert state.cost == 3
    assert state.tree_edges == ((0, 1), (1, 2))
    assert state == tree_state_for(example_graph, Coalition.of([1, 2]))
    validate_tree_state(example_graph, state)


def test_extend_errors(example_graph):
    state = extend(example_graph, new_tree_state(example_graph), 1)
    with pytest.raises(InvalidParameterError):
        extend(example_graph, state, 1)
    with pytest.raises(InvalidParameterError):
        extend(example_graph, state, 3)


def test_validate_tree_state_rejects_bad_trees(example_graph):
    members = Coalition.of([1, 2])
    with pytest.raises(EstimatorInvariantError):
        validate_tree_state(example_graph, TreeState(members, ((0, 1),), 1))
    with pytest.raises(EstimatorInvariantError):
        validate_tree_state(example_graph, TreeState(members, ((0, 1), (0, 1)), 2))
    with pytest.raises(EstimatorInvariantError):
        validate_tree_state(example_graph, TreeState(members, ((0, 1), (1, 2)), 4))
    with pytest.raises(EstimatorInvariantError):
        validate_tree_state(example_graph, TreeState(Coalition.of([1]), ((0, 2),), 4))


def test_permutation_profile_rejects_non_bijection(example_graph):
    with pytest.raises(InvalidParameterError):
        permutation_cost_profile(example_graph, [1, 1])
    with pytest.raises(InvalidParameterError):
        permutation_cost_profile(example_graph, [1])


def test_profiles_equal_from_scratch_costs():
    rng = np.random.default_rng(11)
    for graph in random_corpus(range(1, 8), 20):
        for _ in range(3):
            perm = [int(p) for p in rng.permutation(np.arange(1, graph.n + 1))]
            profile = permutation_cost_profile(graph, perm)
            for k in range(1, graph.n + 1):
                assert profile[k - 1] == mst_cost(graph, Coalition.of(perm[:k]))


def test_incremental_states_stay_valid():
    for graph in random_corpus([5], 10):
        state = new_tree_state(graph)
        for i in (3, 1, 5, 2, 4):
            state = extend(graph, state, i)
            validate_tree_state(graph, state)
            assert state.cost == mst_cost(graph, state.members)


def test_all_coalitions_small_graph():
    graph = RootedWeightedGraph.from_edge_list(3, [3, 1, 2, 1, 5, 1])
    expected = {(): 0, (1,): 3, (2,): 1, (3,): 2, (1, 2): 2, (1, 3): 5, (2, 3): 2, (1, 2, 3): 3}
    for members, cost in expected.items():
        s = Coalition.of(members)
        assert mst_cost(graph, s) == cost
        assert tree_state_for(graph, s).cost == cost


def _check_extension_table(graphs):
    for graph in graphs:
        table = coalition_cost_table(graph)
        assert len(table) == 1 << graph.n
        for mask in range(1 << graph.n):
            # compact bit k-1 is player k; Coalition uses bit k
            assert table[mask] == mst_cost(graph, Coalition(mask << 1)), (graph, mask)


def test_extension_table_matches_from_scratch_kruskal():
    _check_extension_table(random_corpus(range(1, 9), 2, master_seed=303))


@pytest.mark.slow
def test_extension_table_matches_from_scratch_kruskal_full_corpus():
    _check_extension_table(random_corpus(range(1, 9), 25, master_seed=304))
