"""Instance model: rooted non-negatively weighted complete graphs and coalitions.

The root is vertex 0 and players are 1..n. Weights are non-negative integers
stored in a symmetric (n+1)x(n+1) matrix with a zero diagonal; real-valued
weights must be scaled to integers before they reach this module.
"""

import dataclasses
from typing import Container, Iterable, Iterator, Mapping, Sequence

from core.exceptions import InvalidParameterError

ROOT = 0

# In-memory weights must fit an unsigned 64-bit integer.
MAX_WEIGHT = 2**64 - 1


@dataclasses.dataclass(frozen=True)
class Coalition:
    """A set of players backed by a bitmask; bit i is player i.

    Attributes:
      mask: Integer bitmask. Bit 0 (the root) is never set.
    """

    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask & 1:
            raise InvalidParameterError(
                f"invalid coalition mask {self.mask}: root cannot be a member"
            )

    @classmethod
    def of(cls, members: Iterable[int]) -> "Coalition":
        mask = 0
        for i in members:
            if i < 1:
                raise InvalidParameterError(f"player label must be >= 1, got {i}")
            mask |= 1 << i
        return cls(mask)

    @classmethod
    def full(cls, n: int) -> "Coalition":
        """The grand coalition {1, ..., n}."""
        return cls(((1 << n) - 1) << 1)

    def add(self, i: int) -> "Coalition":
        if i < 1:
            raise InvalidParameterError(f"player label must be >= 1, got {i}")
        return Coalition(self.mask | (1 << i))

    def remove(self, i: int) -> "Coalition":
        return Coalition(self.mask & ~(1 << i))

    def members(self) -> tuple[int, ...]:
        """Members in increasing label order."""
        out = []
        mask, i = self.mask, 0
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return tuple(out)

    def max_label(self) -> int:
        return self.mask.bit_length() - 1

    def __contains__(self, i: int) -> bool:
        return i >= 1 and bool(self.mask >> i & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())


@dataclasses.dataclass(frozen=True)
class RootedWeightedGraph:
    """Complete graph on {0 (root), 1, ..., n} with non-negative integer weights.

    Attributes:
      n: Number of players (>= 1 for parsed instances; 0 only for the empty
        graph left behind when every player has been eliminated).
      matrix: Symmetric (n+1)x(n+1) weight matrix, zero diagonal.
    """

    n: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameterError(f"player count must be >= 0, got {self.n}")
        size = self.n + 1
        if len(self.matrix) != size or any(len(row) != size for row in self.matrix):
            raise InvalidParameterError(
                f"weight matrix must be {size}x{size} for n={self.n}"
            )
        for i in range(size):
            if self.matrix[i][i] != 0:
                raise InvalidParameterError(f"self loop at vertex {i}")
            for j in range(i + 1, size):
                w = self.matrix[i][j]
                if w != self.matrix[j][i]:
                    raise InvalidParameterError(f"asymmetric weight on pair ({i}, {j})")
                if not isinstance(w, int) or isinstance(w, bool):
                    raise InvalidParameterError(f"weight on ({i}, {j}) must be an integer")
                if w < 0 or w > MAX_WEIGHT:
                    raise InvalidParameterError(
                        f"weight on ({i}, {j}) out of range: {w}"
                    )

    @classmethod
    def from_pairs(cls, n: int, weights: Mapping[tuple[int, int], int]) -> "RootedWeightedGraph":
        """Builds a graph from a mapping of vertex pairs to weights.

        Args:
          n: Player count.
          weights: One entry per unordered pair; either orientation is accepted
            but a pair may appear only once.

        Raises:
          InvalidParameterError: On a missing, duplicate, self-loop or
            out-of-range pair, or a negative weight.
        """
        normalized: dict[tuple[int, int], int] = {}
        for (a, b), w in weights.items():
            if a == b:
                raise InvalidParameterError(f"self loop at vertex {a}")
            i, j = min(a, b), max(a, b)
            if i < 0 or j > n:
                raise InvalidParameterError(f"vertex label out of range in pair ({a}, {b})")
            if (i, j) in normalized:
                raise InvalidParameterError(f"duplicate pair ({i}, {j})")
            normalized[(i, j)] = w
        # the matrix is only allocated once every pair is known to be present
        expected = pair_count(n)
        if len(normalized) != expected:
            raise InvalidParameterError(
                f"incomplete graph: missing pair {first_missing_pair(n, normalized)}",
                details={"expected_pairs": expected, "found_pairs": len(normalized)},
            )
        size = n + 1
        rows = [[0] * size for _ in range(size)]
        for (i, j), w in normalized.items():
            rows[i][j] = rows[j][i] = w
        return cls(n, tuple(tuple(row) for row in rows))

    @classmethod
    def from_edge_list(cls, n: int, weights: Sequence[int]) -> "RootedWeightedGraph":
        """Builds a graph from weights given in lexicographic pair order."""
        pairs = list(_lex_pairs(n))
        if len(weights) != len(pairs):
            raise InvalidParameterError(
                f"expected {len(pairs)} weights for n={n}, got {len(weights)}"
            )
        return cls.from_pairs(n, dict(zip(pairs, (int(w) for w in weights))))

    def weight(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    def root_weight(self, i: int) -> int:
        """w(r, i), which is also c({i})."""
        return self.matrix[ROOT][i]

    def players(self) -> range:
        return range(1, self.n + 1)

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        """Yields (i, j, w(i, j)) for i < j in lexicographic order."""
        for i, j in _lex_pairs(self.n):
            yield i, j, self.matrix[i][j]

    def is_simple(self) -> bool:
        """True when every weight is 0 or 1."""
        return all(w in (0, 1) for _, _, w in self.pairs())

    def positive_weights(self) -> set[int]:
        return {w for _, _, w in self.pairs() if w > 0}

    def check_player(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise InvalidParameterError(
                f"player {i} out of range 1..{self.n}", details={"player": i, "n": self.n}
            )

    def check_coalition(self, s: Coalition) -> None:
        if s.max_label() > self.n:
            raise InvalidParameterError(
                f"coalition contains player {s.max_label()} > n={self.n}"
            )

    def grand_coalition(self) -> Coalition:
        return Coalition.full(self.n)

    def induced(self, players: Sequence[int]) -> "RootedWeightedGraph":
        """Subgraph on the root plus `players`, relabelled 1..len(players) in the given order."""
        for i in players:
            self.check_player(i)
        labels = (ROOT, *players)
        rows = tuple(tuple(self.matrix[a][b] for b in labels) for a in labels)
        return RootedWeightedGraph(len(players), rows)


def _lex_pairs(n: int) -> Iterator[tuple[int, int]]:
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            yield i, j


def lex_pairs(n: int) -> list[tuple[int, int]]:
    """All vertex pairs (i, j), 0 <= i < j <= n, in lexicographic order."""
    return list(_lex_pairs(n))


def pair_count(n: int) -> int:
    """Number of vertex pairs of the complete graph on {0, ..., n}."""
    return n * (n + 1) // 2


def first_missing_pair(n: int, present: Container[tuple[int, int]]) -> tuple[int, int] | None:
    """Lexicographically first pair (i, j), i < j, absent from `present`.

    Stops at the first gap, so it never walks further than len(present) + 1
    pairs when `present` only holds valid pairs.
    """
    return next((p for p in _lex_pairs(n) if p not in present), None)
