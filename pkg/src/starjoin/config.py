"""Configuration management for starjoin."""

from pathlib import Path

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from sympy import isprime


class Settings(BaseSettings):
    """Budgets, caps and output locations, overridable through STARJOIN_* variables."""

    # Exact solver budgets
    max_nodes: int | None = Field(
        default=20_000_000,
        ge=1,
        description="Search-node budget for the exact coloring solver (None = unlimited)",
    )
    max_seconds: float | None = Field(
        default=600.0,
        gt=0,
        description="Wall-clock budget in seconds for one exact computation (None = unlimited)",
    )

    # Topology
    face_cap: int = Field(
        default=5_000_000,
        ge=1,
        description="Hard cap on the number of faces a single enumeration may produce",
    )
    gfp_prime: int = Field(
        default=32749,
        ge=3,
        description="Default odd prime for GF(p) homology",
    )

    # Output
    certificate_dir: Path = Field(
        default=Path("certificates"),
        description="Directory receiving certificates, the suite summary and metrics",
    )
    workers: int = Field(
        default=1,
        ge=1,
        le=64,
        description="Number of worker processes for suite items (1 = sequential)",
    )

    # Runtime
    log_level: str = Field(
        default="INFO",
        description="Logging level: DEBUG, INFO, WARNING, ERROR",
    )

    model_config = SettingsConfigDict(
        env_prefix="STARJOIN_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    @field_validator("gfp_prime")
    @classmethod
    def validate_prime(cls, v: int) -> int:
        """Validate the GF(p) characteristic is an odd prime."""
        if v % 2 == 0 or not isprime(v):
            raise ValueError(f"gfp_prime must be an odd prime, got {v}")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of: {valid_levels}")
        return v.upper()

    @model_validator(mode="after")
    def validate_budget(self) -> "Settings":
        """At least one search limit must stay finite."""
        if self.max_nodes is None and self.max_seconds is None:
            raise ValueError("max_nodes and max_seconds cannot both be unlimited")
        return self


def get_settings() -> Settings:
    """Get settings instance, falling back to defaults on a bad environment."""
    try:
        return Settings()
    except Exception as e:
        import warnings

        warnings.warn(f"Could not load settings from environment: {e}", stacklevel=2)
        return Settings.model_construct()


# Global settings instance
settings = get_settings()
