"""
Configuration Module

Runtime settings for the oracle and the command-line front end. Settings are an
immutable value; build one from defaults, from a plain mapping, or from the
environment (``MIDR_*`` variables).

Example:
    >>> from core.config import Settings
    >>> settings = Settings.from_mapping({"oracle_seed": "7"})
    >>> settings.oracle_seed
    7
"""
import logging
import os
from dataclasses import dataclass
from typing import Mapping, Optional

from core.errors import IdealError

ENV_PREFIX = "MIDR_"


def _optional_int(value: object) -> Optional[int]:
    """None and the empty string mean "not set"."""
    if value is None or value == "":
        return None
    return int(value)


@dataclass(frozen=True)
class Settings:
    # grid oracle
    oracle_random_points: int = 100
    oracle_seed: int = 0
    oracle_grid_limit: Optional[int] = None

    # logging
    log_level: str = "WARNING"

    def __post_init__(self):
        if self.oracle_random_points < 0:
            raise ValueError("oracle_random_points must be nonnegative")
        if self.oracle_grid_limit is not None and self.oracle_grid_limit < 1:
            raise ValueError("oracle_grid_limit must be positive")
        if logging.getLevelName(self.log_level.upper()) not in (
            logging.DEBUG, logging.INFO, logging.WARNING, logging.ERROR, logging.CRITICAL
        ):
            raise ValueError(f"Unknown log level: {self.log_level}")

    @classmethod
    def from_mapping(cls, data: Mapping[str, object]) -> "Settings":
        """
        Build settings from a raw mapping, falling back to defaults for missing keys.
        """
        defaults = cls()
        try:
            return cls(
                oracle_random_points=int(data.get("oracle_random_points", defaults.oracle_random_points)),
                oracle_seed=int(data.get("oracle_seed", defaults.oracle_seed)),
                oracle_grid_limit=_optional_int(data.get("oracle_grid_limit")),
                log_level=str(data.get("log_level", defaults.log_level)).upper(),
            )
        except (TypeError, ValueError) as e:
            raise IdealError(f"Invalid settings: {e}") from e

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """
        Read MIDR_ORACLE_RANDOM_POINTS, MIDR_ORACLE_SEED, MIDR_ORACLE_GRID_LIMIT
        and MIDR_LOG_LEVEL.
        """
        environ = os.environ if environ is None else environ
        data = {
            key[len(ENV_PREFIX):].lower(): value
            for key, value in environ.items()
            if key.startswith(ENV_PREFIX)
        }
        return cls.from_mapping(data)
