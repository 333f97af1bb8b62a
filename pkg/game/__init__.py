"""Game model: MCST cost and saving games, null and dummy players."""

from game.characteristic import GameKind, characteristic, cost_value, saving_value
from game.null_players import (
    EliminationResult,
    eliminate_null_players,
    is_dummy_player_cost,
    is_dummy_player_pairwise,
    is_non_null_simple,
    is_null_player,
    is_null_player_pairwise,
    null_players,
)

__all__ = [
    "GameKind",
    "characteristic",
    "cost_value",
    "saving_value",
    "EliminationResult",
    "eliminate_null_players",
    "is_dummy_player_cost",
    "is_dummy_player_pairwise",
    "is_non_null_simple",
    "is_null_player",
    "is_null_player_pairwise",
    "null_players",
]
