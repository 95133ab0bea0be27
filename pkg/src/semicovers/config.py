"""
Configuration for semicovers.

Settings come from environment variables (optionally through a ``.env`` file):
- SEMICOVERS_COORD_LIMIT: largest absolute coordinate allowed by checked arithmetic
- SEMICOVERS_DEGREE_CEILING: degree guard for open-ended enumerations
- SEMICOVERS_ORACLE_MAX_CANDIDATES: largest candidate-gap window brute_Dd accepts
- SEMICOVERS_DEFAULT_ORDER: order kind used when a document does not name one
- LOG_LEVEL: logging level for the CLI
"""
import os
import logging
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field

logger = logging.getLogger("semicovers.config")

VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class Settings(BaseModel):
    """Runtime limits and defaults."""

    coord_limit: int = Field(
        default=2**63 - 1,
        description="Largest absolute value any coordinate may take before arithmetic reports overflow.",
        gt=0,
    )
    degree_ceiling: int = Field(
        default=400,
        description="Degree at which open-ended enumerations give up.",
        gt=0,
    )
    oracle_max_candidates: int = Field(
        default=14,
        description="Largest number of candidate gaps the brute-force cover oracle will search.",
        gt=0,
    )
    default_order: str = Field(
        default="graded-then-revcoordlex",
        description="Order kind used when a document omits one.",
    )
    log_level: str = Field(default="INFO", description="Logging level for the command-line tool.")


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Build the settings from the environment.

    Returns:
        Settings instance, cached for the life of the process
    """
    load_dotenv()

    log_level = os.getenv("LOG_LEVEL", "INFO").upper()
    if log_level not in VALID_LOG_LEVELS:
        logger.warning(f"Invalid LOG_LEVEL '{log_level}', using INFO. Valid levels: {', '.join(VALID_LOG_LEVELS)}")
        log_level = "INFO"

    defaults = Settings()
    return Settings(
        coord_limit=_int_from_env("SEMICOVERS_COORD_LIMIT", defaults.coord_limit),
        degree_ceiling=_int_from_env("SEMICOVERS_DEGREE_CEILING", defaults.degree_ceiling),
        oracle_max_candidates=_int_from_env("SEMICOVERS_ORACLE_MAX_CANDIDATES", defaults.oracle_max_candidates),
        default_order=os.getenv("SEMICOVERS_DEFAULT_ORDER", defaults.default_order),
        log_level=log_level,
    )


def configure_logging(level: str | None = None) -> None:
    """Configure root logging on stderr in the service's format."""
    level = (level or get_settings().log_level).upper()
    if level not in VALID_LOG_LEVELS:
        level = "INFO"
    logging.basicConfig(
        level=getattr(logging, level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


__all__ = [
    "Settings",
    "get_settings",
    "configure_logging",
    "VALID_LOG_LEVELS",
]
