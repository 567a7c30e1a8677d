"""Runtime bounds for the exhaustive oracles and searches.

The environment variable SCHREIER_LAB_ORACLE_BOUND overrides the two
enumeration-backed oracle bounds (they are exponential-cost guards, not
correctness parameters).
"""

import os

DEFAULT_ENUMERATION_BOUND = 16
DEFAULT_CHAIN_ORACLE_BOUND = 12

GL_WINDOW_BOUND = 24
MILMAN_SUPPORT_BOUND = 12
MILMAN_DIMENSION_BOUND = 5

_ENV_VAR = "SCHREIER_LAB_ORACLE_BOUND"


def _env_bound() -> int | None:
    raw = os.environ.get(_ENV_VAR)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{_ENV_VAR} must be >= 1, got {value}")
    return value


def enumeration_bound() -> int:
    """Largest N for which Schreier-subset enumeration oracles will run."""
    return _env_bound() or DEFAULT_ENUMERATION_BOUND


def chain_oracle_bound() -> int:
    """Largest max-support accepted by the exhaustive chain-norm oracle."""
    return _env_bound() or DEFAULT_CHAIN_ORACLE_BOUND
