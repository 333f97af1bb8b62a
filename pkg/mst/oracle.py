"""Minimum spanning tree costs c(S) of induced subgraphs K[S + {r}].

`mst_cost` is the from-scratch oracle. `extend` adds one player to a known
tree: some MST of K[S + {r, i}] avoids every non-tree edge of K[S + {r}], so
Kruskal only needs the current tree edges plus the star around i
(2|S| + 1 edges). Chaining `extend` along a permutation gives the cost
profile c({p1}), c({p1, p2}), ..., c(N) used by the Monte Carlo sampler.

Ties are broken by (weight, i, j), so tree edges are deterministic.
"""

import dataclasses
from typing import Iterable, Sequence

from core.exceptions import EstimatorInvariantError, InvalidParameterError
from graph.model import ROOT, Coalition, RootedWeightedGraph
from mst.union_find import UnionFind

# (weight, i, j) with i < j
WeightedEdge = tuple[int, int, int]


@dataclasses.dataclass(frozen=True)
class TreeState:
    """MST of K[S + {r}] for a permutation prefix S.

    Attributes:
      members: The coalition S (root implicit).
      tree_edges: |S| pairs (i, j), i < j, sorted.
      cost: Total weight of tree_edges, i.e. c(S).
    """

    members: Coalition
    tree_edges: tuple[tuple[int, int], ...]
    cost: int


def kruskal(edges: Iterable[WeightedEdge], vertex_count: int) -> tuple[list[WeightedEdge], int]:
    """Kruskal over (weight, i, j) triples.

    Args:
      edges: Candidate edges; they are sorted by (weight, i, j).
      vertex_count: Number of vertices spanned; the scan stops after
        vertex_count - 1 accepted edges.

    Returns:
      The accepted edges in acceptance order and their total weight.
    """
    need = vertex_count - 1
    chosen: list[WeightedEdge] = []
    cost = 0
    if need <= 0:
        return chosen, cost
    uf = UnionFind()
    for edge in sorted(edges):
        if uf.union(edge[1], edge[2]):
            chosen.append(edge)
            cost += edge[0]
            if len(chosen) == need:
                break
    return chosen, cost


def extend_edges(
    matrix: Sequence[Sequence[int]],
    tree: list[WeightedEdge],
    vertices: Sequence[int],
    i: int,
) -> tuple[list[WeightedEdge], int]:
    """MST of the tree on `vertices` (root included) plus the star at i."""
    row = matrix[i]
    candidates = list(tree)
    candidates.extend((row[j], j, i) if j < i else (row[j], i, j) for j in vertices)
    return kruskal(candidates, len(vertices) + 1)


def profile_costs(matrix: Sequence[Sequence[int]], perm: Sequence[int]) -> list[int]:
    """c of every prefix of `perm`; no validation (hot path of the sampler)."""
    tree: list[WeightedEdge] = []
    vertices = [ROOT]
    costs = []
    for i in perm:
        tree, cost = extend_edges(matrix, tree, vertices, i)
        vertices.append(i)
        costs.append(cost)
    return costs


def mst_cost(graph: RootedWeightedGraph, s: Coalition) -> int:
    """c(S): MST cost of K[S + {r}] from scratch; c(empty) = 0."""
    graph.check_coalition(s)
    vertices = (ROOT, *s.members())
    matrix = graph.matrix
    edges = [
        (matrix[a][b], a, b)
        for k, a in enumerate(vertices)
        for b in vertices[k + 1:]
    ]
    _, cost = kruskal(edges, len(vertices))
    return cost


def new_tree_state(graph: RootedWeightedGraph) -> TreeState:
    """State of the empty prefix: no members, no edges, cost 0."""
    return TreeState(Coalition(), (), 0)


def _state_from(members: Coalition, edges: list[WeightedEdge], cost: int) -> TreeState:
    return TreeState(members, tuple(sorted((a, b) for _, a, b in edges)), cost)


def extend(graph: RootedWeightedGraph, state: TreeState, i: int) -> TreeState:
    """Adds player i to the prefix, returning a new state for S + {i}.

    Raises:
      InvalidParameterError: If i is out of range or already a member.
    """
    graph.check_player(i)
    if i in state.members:
        raise InvalidParameterError(f"player {i} is already in the coalition")
    matrix = graph.matrix
    tree = [(matrix[a][b], a, b) for a, b in state.tree_edges]
    vertices = (ROOT, *state.members.members())
    edges, cost = extend_edges(matrix, tree, vertices, i)
    return _state_from(state.members.add(i), edges, cost)


def tree_state_for(graph: RootedWeightedGraph, s: Coalition) -> TreeState:
    """From-scratch TreeState for coalition S."""
    graph.check_coalition(s)
    vertices = (ROOT, *s.members())
    matrix = graph.matrix
    edges = [(matrix[a][b], a, b) for k, a in enumerate(vertices) for b in vertices[k + 1:]]
    chosen, cost = kruskal(edges, len(vertices))
    return _state_from(s, chosen, cost)


def validate_tree_state(graph: RootedWeightedGraph, state: TreeState) -> None:
    """Checks that tree_edges is a spanning tree of S + {r} with the stated cost.

    Raises:
      EstimatorInvariantError: On any structural or cost mismatch.
    """
    vertices = {ROOT, *state.members.members()}
    if len(state.tree_edges) != len(state.members):
        raise EstimatorInvariantError(
            "tree must have |S| edges",
            details={"edges": len(state.tree_edges), "members": len(state.members)},
        )
    uf = UnionFind()
    for v in vertices:
        uf.add(v)
    total = 0
    for a, b in state.tree_edges:
        if a not in vertices or b not in vertices:
            raise EstimatorInvariantError(f"tree edge ({a}, {b}) leaves the coalition")
        if not uf.union(a, b):
            raise EstimatorInvariantError(f"tree edge ({a}, {b}) closes a cycle")
        total += graph.weight(a, b)
    if any(not uf.connected(ROOT, v) for v in vertices):
        raise EstimatorInvariantError("tree does not span the coalition")
    if total != state.cost:
        raise EstimatorInvariantError(
            "tree cost mismatch", details={"stated": state.cost, "actual": total}
        )


def permutation_cost_profile(graph: RootedWeightedGraph, perm: Sequence[int]) -> list[int]:
    """(c({p1}), c({p1, p2}), ..., c(N)) by repeated extension.

    Raises:
      InvalidParameterError: If `perm` is not a bijection on 1..n.
    """
    if sorted(perm) != list(graph.players()):
        raise InvalidParameterError(
            f"not a permutation of 1..{graph.n}: {list(perm)}"
        )
    return profile_costs(graph.matrix, perm)
