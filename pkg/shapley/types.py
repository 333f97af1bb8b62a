"""Result types of the Shapley oracles and estimators."""

import dataclasses
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional

from game.characteristic import GameKind

# Significant digits of decimal renderings at the CLI boundary.
DECIMAL_DIGITS = 17


def render_decimal(value: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    """Rounds an exact rational to `digits` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        result = Decimal(value.numerator) / Decimal(value.denominator)
    return format(result.normalize(), "f") if result else "0"


def render_rational(value: Fraction) -> str:
    """'p/q' form; integers keep the '/1'."""
    return f"{value.numerator}/{value.denominator}"


@dataclasses.dataclass(frozen=True)
class ShapleyVector:
    """Exact Shapley values, one per player in label order.

    Attributes:
      values: values[i - 1] is player i's value.
      kind: The game the values belong to.
    """

    values: tuple[Fraction, ...]
    kind: GameKind

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def player(self, i: int) -> Fraction:
        """Value of player label i (1-based)."""
        return self.values[i - 1]


@dataclasses.dataclass(frozen=True)
class EstimateReport:
    """Monte Carlo output.

    Attributes:
      estimates: Per-player phi^A_i = phi'_i / M as exact rationals.
      sample_count: M.
      seed: Master seed.
      per_level: H x n table of per-level estimates when sampled in
        per-level mode, else None.
      levels: Weight levels g_1 < ... < g_H matching `per_level` rows.
      removed: Players eliminated as null before sampling (their estimate is 0).
    """

    estimates: tuple[Fraction, ...]
    sample_count: int
    seed: int
    per_level: Optional[tuple[tuple[Fraction, ...], ...]] = None
    levels: tuple[int, ...] = ()
    removed: tuple[int, ...] = ()

    def total(self) -> Fraction:
        return sum(self.estimates, Fraction(0))

    def player(self, i: int) -> Fraction:
        return self.estimates[i - 1]

    def recomposed(self) -> list[Fraction]:
        """sum_h (g_h - g_{h-1}) * per_level[h][i] for every player."""
        if self.per_level is None:
            raise ValueError("report was not sampled in per-level mode")
        out = [Fraction(0)] * len(self.estimates)
        previous = 0
        for gamma, row in zip(self.levels, self.per_level):
            gap = gamma - previous
            previous = gamma
            for k, value in enumerate(row):
                out[k] += gap * value
        return out
