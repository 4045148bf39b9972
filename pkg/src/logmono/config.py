"""Configuration management for logmono."""

import sys

from loguru import logger
from pydantic import ConfigDict, Field, field_validator, model_validator
from pydantic_settings import BaseSettings

from . import __version__


class Settings(BaseSettings):
    """Application settings with validation."""

    # Precision
    precision: int = Field(
        default=128, ge=64, le=65536, description="Default working precision in bits"
    )
    prec_cap: int = Field(
        default=4096, ge=64, le=65536, description="Ceiling for adaptive precision escalation"
    )

    # Special functions
    zeta_max_terms: int = Field(
        default=64,
        ge=2,
        le=100000,
        description="Cap on the argument-dependent part of the Dirichlet truncation point",
    )
    loggamma_shift: int = Field(
        default=24, ge=0, le=10000, description="Recurrence shift for the Stirling band"
    )
    series_min_argument: int = Field(
        default=10, ge=1, le=10000, description="Smallest argument for the Stirling series"
    )

    # Limits
    bernoulli_cap: int = Field(
        default=2000, ge=0, le=100000, description="Largest Bernoulli index the CLI will tabulate"
    )
    certify_max_leaves: int = Field(
        default=20000, ge=1, le=10_000_000, description="Leaf budget for sign certification"
    )
    threshold_cap: int = Field(
        default=10000, ge=8, le=10_000_000, description="Search cap for derivative-sign thresholds"
    )

    # Application
    log_level: str = Field(default="INFO", description="Logging level")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        valid_levels = {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}
        if v.upper() not in valid_levels:
            raise ValueError(f"Invalid log level: {v}. Must be one of {valid_levels}")
        return v.upper()

    @model_validator(mode="after")
    def check_precision_order(self) -> "Settings":
        """The default precision may not exceed the ceiling."""
        if self.precision > self.prec_cap:
            raise ValueError(
                f"precision ({self.precision}) must not exceed prec_cap ({self.prec_cap})"
            )
        return self

    def precision_ladder(self, start: int | None = None) -> list[int]:
        """Precisions tried by adaptive escalation: start, 2*start, ... up to prec_cap."""
        prec = start or self.precision
        ladder = [prec]
        while prec < self.prec_cap:
            prec = min(2 * prec, self.prec_cap)
            ladder.append(prec)
        return ladder

    model_config = ConfigDict(  # type: ignore[assignment]
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        env_prefix="LOGMONO_",
        validate_assignment=True,
        extra="ignore",
        str_strip_whitespace=True,
    )


# Global settings instance
_settings: Settings | None = None


def configure_logging(level: str) -> None:
    """Route loguru output to stderr so stdout reports stay deterministic."""
    logger.remove()
    logger.add(
        sys.stderr,
        level=level,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
        "<level>{level: <8}</level> | "
        "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - "
        "<level>{message}</level>",
        colorize=False,
    )


def get_settings() -> Settings:
    """Get application settings singleton."""
    global _settings
    if _settings is None:
        _settings = Settings()
        configure_logging(_settings.log_level)

        logger.debug(f"logmono v{__version__} initialized")
        logger.debug(f"Configuration: {_settings.model_dump()}")

    return _settings


def reset_settings() -> None:
    """Reset settings singleton (useful for testing)."""
    global _settings
    _settings = None
