from typing import Any, Dict, Optional
from pathlib import Path
import logging
import os

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator

CONFIG_FILE = "kronvpf.yaml"
CACHE_DIR_ENV = "KRONVPF_CACHE_DIR"

logger = logging.getLogger(__name__)


class Settings(BaseModel):
    """Tunable limits and paths, read from kronvpf.yaml"""

    model_config = ConfigDict(extra="ignore")

    cache_dir: Path = Field(default_factory=lambda: Path.home() / ".kronvpf" / "cache")
    threads: int = Field(default=1, ge=1)
    dense_cell_limit: int = Field(default=100_000_000, ge=1)
    brute_force_limit: int = Field(default=10_000_000, ge=1)
    oracle_size_limit: int = Field(default=14, ge=0)
    fm_row_limit: int = Field(default=20_000, ge=1)
    poset_limit: int = Field(default=8, ge=1)
    persist_memo: bool = False

    @field_validator("cache_dir")
    @classmethod
    def _expand_home(cls, v: Path) -> Path:
        return Path(v).expanduser()

    def with_overrides(self, **overrides: Any) -> "Settings":
        """Copy with the non-None overrides applied"""
        values = {k: v for k, v in overrides.items() if v is not None}
        return Settings(**{**self.model_dump(), **values})

    def memo_path(self, matrix_hash: str) -> Path:
        return Path(self.cache_dir) / f"memo-{matrix_hash[:16]}.json"


def _load_config(config_path: str) -> Dict[str, Any]:
    """Load raw configuration from a YAML file"""
    if os.path.exists(config_path):
        with open(config_path, "r") as f:
            return yaml.safe_load(f) or {}
    return {}


def load_settings(config_path: str = CONFIG_FILE) -> Settings:
    """Build settings from the config file and environment"""
    raw = _load_config(config_path)
    env_cache = os.environ.get(CACHE_DIR_ENV)
    if env_cache:
        raw["cache_dir"] = env_cache
    logger.debug("loaded settings from %s: %s", config_path, sorted(raw))
    return Settings(**raw)


# Global settings instance
_settings: Optional[Settings] = None


def settings() -> Settings:
    """Get the global settings instance"""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def configure(new_settings: Settings) -> Settings:
    """Replace the global settings (used by the CLI after parsing flags)"""
    global _settings
    _settings = new_settings
    return _settings


def reset_settings() -> None:
    global _settings
    _settings = None
