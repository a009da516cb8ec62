"""Runtime settings read from the environment (and an optional .env file)."""
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional
import logging
import os

logger = logging.getLogger(__name__)

# Load .env file if it exists
try:
    from dotenv import load_dotenv
    env_path = Path(__file__).parent.parent / '.env'
    if env_path.exists():
        load_dotenv(dotenv_path=env_path)
except ImportError:
    # python-dotenv not installed, skip
    pass


DEFAULT_MAX_ORDER = 2000
DEFAULT_ORACLE_CAP = 20
DEFAULT_ASSOC_LIMIT = 256
DEFAULT_ASSOC_SEED = 20240601


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{name} must be at least 1, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    """Limits and knobs shared by builders, oracles and scans."""
    max_order: int = DEFAULT_MAX_ORDER
    oracle_cap: int = DEFAULT_ORACLE_CAP  # max number of conjugacy classes
    exhaustive_assoc_limit: int = DEFAULT_ASSOC_LIMIT
    assoc_seed: int = DEFAULT_ASSOC_SEED
    jobs: int = field(default_factory=lambda: os.cpu_count() or 1)
    log_level: str = "WARNING"

    def __post_init__(self):
        """Validate limits."""
        for name in ("max_order", "oracle_cap", "exhaustive_assoc_limit", "jobs"):
            value = getattr(self, name)
            if value < 1:
                raise ValueError(f"{name} must be at least 1, got {value}")

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from GROUPLAB_* environment variables."""
        return cls(
            max_order=_int_from_env("GROUPLAB_MAX_ORDER", DEFAULT_MAX_ORDER),
            oracle_cap=_int_from_env("GROUPLAB_ORACLE_CAP", DEFAULT_ORACLE_CAP),
            exhaustive_assoc_limit=_int_from_env("GROUPLAB_ASSOC_LIMIT", DEFAULT_ASSOC_LIMIT),
            assoc_seed=_int_from_env("GROUPLAB_ASSOC_SEED", DEFAULT_ASSOC_SEED),
            jobs=_int_from_env("GROUPLAB_JOBS", os.cpu_count() or 1),
            log_level=os.getenv("GROUPLAB_LOG_LEVEL", "WARNING").upper(),
        )

    def with_overrides(self, **overrides: Optional[int]) -> "Settings":
        """Return a copy with the non-None overrides applied."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes) if changes else self

    def to_dict(self) -> dict:
        """Config echo for reports.

        `jobs` and `log_level` are left out: structured reports must not
        depend on how many workers produced them.
        """
        return {
            "max_order": self.max_order,
            "oracle_cap": self.oracle_cap,
            "exhaustive_assoc_limit": self.exhaustive_assoc_limit,
            "assoc_seed": self.assoc_seed,
        }
