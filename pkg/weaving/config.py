"""Configuration management for the weaving-knot toolkit."""

import os

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    log_level: str = "WARNING"

    # State-sum oracle
    state_budget: int = Field(
        default=2**26, description="Max number of smoothing states the oracle enumerates")
    threads: int | None = Field(
        default=None, description="Oracle worker count (None means CPU count)")
    chunk_states: int = Field(
        default=2**16, description="States handed to one worker at a time")

    # Output
    json_indent: int = 2

    model_config = {
        "env_prefix": "WEAVING_",
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
    }

    def resolved_threads(self) -> int:
        """Worker count with the CPU-count default applied."""
        return self.threads or os.cpu_count() or 1


# Global settings instance
settings = Settings()
