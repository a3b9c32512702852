"""
Configuration module with frozen dataclasses and hard minimums.

Immutable config grouped by concern, with environment variable overrides
that can raise a setting but never push it below its floor.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv

# Load .env file if present
load_dotenv()

ENV_PREFIX = "DESIGNLATTICE_"


def _env_str(name: str, default: str) -> str:
    """Load string from environment variable."""
    return os.getenv(ENV_PREFIX + name, default)


def _env_int(name: str, default: int, min_val: int | None = None) -> int:
    """
    Load int from env with optional hard minimum.

    Malformed values fall back to the default; the floor applies to both.
    """
    try:
        value = int(os.getenv(ENV_PREFIX + name, str(default)))
    except ValueError:
        value = default

    if min_val is not None:
        return max(value, min_val)
    return value


def _env_bool(name: str, default: bool) -> bool:
    """Load a boolean flag ("true"/"false") from env."""
    return _env_str(name, "true" if default else "false").lower() == "true"


def env_budget_override() -> int | None:
    """
    Return the enumeration budget forced through the environment, if any.

    Read at call time so a CLI invocation sees the variable even when the
    config module was imported earlier.
    """
    raw = os.getenv(ENV_PREFIX + "BUDGET")
    if raw is None:
        return None
    try:
        return max(int(raw), 1)
    except ValueError:
        return None


@dataclass(frozen=True)
class EnumerationLimits:
    """Limits on exhaustive subset enumeration and search."""

    # Cap on C(v, k) for any brute-force enumeration
    BUDGET: int = _env_int("BUDGET", 10**8, min_val=1)

    # Largest n for which closed-form counts also evaluate the double-factorial alpha
    ALPHA_CROSSCHECK_MAX_N: int = _env_int("ALPHA_CROSSCHECK_MAX_N", 10, min_val=3)

    # Exact-cover search nodes before giving up
    PARTITION_MAX_NODES: int = _env_int("PARTITION_MAX_NODES", 10**7, min_val=1000)


@dataclass(frozen=True)
class AuditConfig:
    """Cross-check settings for verification and audits."""

    # Largest v for which r_s is also counted over every s-subset of points
    ORACLE_MAX_V: int = _env_int("ORACLE_MAX_V", 16, min_val=2)

    # Confirm collapsed point pairs against the row lattice
    CROSSCHECK_LATTICE: bool = _env_bool("CROSSCHECK_LATTICE", True)


@dataclass(frozen=True)
class LoggingConfig:
    """Logging configuration."""

    LEVEL: str = _env_str("LOG_LEVEL", "WARNING")
    JSON: bool = _env_bool("LOG_JSON", True)


# Module-level singletons (immutable)
ENUMERATION = EnumerationLimits()
AUDIT = AuditConfig()
LOGGING = LoggingConfig()


@lru_cache(maxsize=1)
def get_all_config() -> dict[str, object]:
    """Return all configuration as a dictionary for debugging."""
    return {
        "enumeration": ENUMERATION,
        "audit": AUDIT,
        "logging": LOGGING,
    }
