"""Runtime settings for the MCST Shapley toolkit.

This module defines the configurable limits used throughout the application.
Values can be changed at runtime with `update_settings` or through environment
variables (a local `.env` file is honoured, see main.py).
"""

import os
from dataclasses import dataclass

from core.exceptions import InvalidParameterError

# The subset oracle keeps a 2^n cost table in memory; 2^24 entries is the ceiling.
SUBSET_PLAYER_CEILING = 24


@dataclass
class OracleBudgetConfig:
    """Player-count limits for the exact enumeration oracles."""

    # 2^n coalitions; n = 20 takes tens of seconds and ~100 MB, each extra player doubles both
    subset_max_players: int = 20
    permutation_max_players: int = 9  # n! orderings

    def __post_init__(self):
        """Load values from environment variables if present."""
        self.subset_max_players = int(
            os.getenv("MCST_SUBSET_MAX_PLAYERS", self.subset_max_players)
        )
        self.permutation_max_players = int(
            os.getenv("MCST_PERMUTATION_MAX_PLAYERS", self.permutation_max_players)
        )
        if not 0 <= self.subset_max_players <= SUBSET_PLAYER_CEILING:
            raise InvalidParameterError(
                f"subset_max_players must be in 0..{SUBSET_PLAYER_CEILING}, got {self.subset_max_players}"
            )


@dataclass
class SamplingConfig:
    """Configuration for the Monte Carlo sampler."""

    n_jobs: int = 1  # joblib workers; never changes the estimates

    def __post_init__(self):
        """Load values from environment variables if present."""
        self.n_jobs = int(os.getenv("MCST_N_JOBS", self.n_jobs))


@dataclass
class GenerationConfig:
    """Configuration for instance generation."""

    max_attempts: int = 100_000  # --require-nonnull retries

    def __post_init__(self):
        """Load values from environment variables if present."""
        self.max_attempts = int(
            os.getenv("MCST_GENERATION_MAX_ATTEMPTS", self.max_attempts)
        )


@dataclass
class Settings:
    """Master configuration combining all settings."""

    oracle: OracleBudgetConfig
    sampling: SamplingConfig
    generation: GenerationConfig

    def __init__(self):
        self.oracle = OracleBudgetConfig()
        self.sampling = SamplingConfig()
        self.generation = GenerationConfig()


# Global settings instance
SETTINGS = Settings()


def get_settings() -> Settings:
    """
    Get the global settings.

    Returns:
        The global Settings instance.
    """
    return SETTINGS


def update_settings(
    oracle: OracleBudgetConfig | None = None,
    sampling: SamplingConfig | None = None,
    generation: GenerationConfig | None = None,
) -> None:
    """
    Update the global settings.

    Args:
        oracle: New oracle budget configuration.
        sampling: New sampling configuration.
        generation: New generation configuration.

    Example:
        >>> from config.settings import update_settings, SamplingConfig
        >>> update_settings(sampling=SamplingConfig(n_jobs=4))
    """
    if oracle is not None:
        SETTINGS.oracle = oracle
    if sampling is not None:
        SETTINGS.sampling = sampling
    if generation is not None:
        SETTINGS.generation = generation


def reload_settings() -> Settings:
    """Re-read every section from the environment (used after load_dotenv)."""
    SETTINGS.oracle = OracleBudgetConfig()
    SETTINGS.sampling = SamplingConfig()
    SETTINGS.generation = GenerationConfig()
    return SETTINGS


__all__ = [
    "OracleBudgetConfig",
    "SamplingConfig",
    "GenerationConfig",
    "Settings",
    "SETTINGS",
    "get_settings",
    "update_settings",
    "reload_settings",
]
