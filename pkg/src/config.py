import os
from dataclasses import dataclass

from dotenv import load_dotenv

from src.errors import ConfigError

load_dotenv()

DEFAULT_CHECK_TERMS = 40
DEFAULT_RUN_BUDGET = 200_000
DEFAULT_CHAIN_BUDGET = 20_000


def _int_env(name: str, default: int | None) -> int | None:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    """Tunables read from the environment (and a local .env file)."""

    check_terms: int = DEFAULT_CHECK_TERMS
    max_ell: int | None = None  # None: 2·deg² per polynomial
    run_budget: int = DEFAULT_RUN_BUDGET
    chain_budget: int = DEFAULT_CHAIN_BUDGET
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            check_terms=_int_env("POLYRAT_CHECK_TERMS", DEFAULT_CHECK_TERMS),
            max_ell=_int_env("POLYRAT_MAX_ELL", None),
            run_budget=_int_env("POLYRAT_RUN_BUDGET", DEFAULT_RUN_BUDGET),
            chain_budget=_int_env("POLYRAT_CHAIN_BUDGET", DEFAULT_CHAIN_BUDGET),
            log_level=os.getenv("POLYRAT_LOG_LEVEL", "WARNING").upper(),
        )


settings = Settings.from_env()
