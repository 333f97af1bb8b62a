"""Configuration module."""

from config.settings import (
    SETTINGS,
    GenerationConfig,
    OracleBudgetConfig,
    SamplingConfig,
    Settings,
    get_settings,
    reload_settings,
    update_settings,
)

__all__ = [
    "SETTINGS",
    "Settings",
    "OracleBudgetConfig",
    "SamplingConfig",
    "GenerationConfig",
    "get_settings",
    "update_settings",
    "reload_settings",
]
