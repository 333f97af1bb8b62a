"""MST oracle: from-scratch and incremental minimum spanning tree costs."""

from mst.union_find import UnionFind
from mst.oracle import (
    TreeState,
    extend,
    extend_edges,
    kruskal,
    mst_cost,
    new_tree_state,
    permutation_cost_profile,
    profile_costs,
    tree_state_for,
    validate_tree_state,
)

__all__ = [
    "UnionFind",
    "TreeState",
    "extend",
    "extend_edges",
    "kruskal",
    "mst_cost",
    "new_tree_state",
    "permutation_cost_profile",
    "profile_costs",
    "tree_state_for",
    "validate_tree_state",
]
