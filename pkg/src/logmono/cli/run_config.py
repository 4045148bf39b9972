# Run Configuration
# Defaults < --config key=value file < command-line flags, validated by pydantic

from enum import Enum, IntEnum
from fractions import Fraction
from pathlib import Path
from typing import Any

from dotenv import dotenv_values
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..config import get_settings
from ..exceptions import ConfigurationError


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class ExitStatus(IntEnum):
    """Process exit codes; a run exits with the worst status it met."""

    OK = 0
    FAILS = 1
    UNDECIDED = 2
    USAGE = 3

    @property
    def severity(self) -> int:
        return {ExitStatus.OK: 0, ExitStatus.UNDECIDED: 1, ExitStatus.FAILS: 2, ExitStatus.USAGE: 3}[self]

    @classmethod
    def worst(cls, *statuses: "ExitStatus") -> "ExitStatus":
        return max(statuses, key=lambda s: s.severity, default=cls.OK)


def parse_range(text: str) -> tuple[Fraction, Fraction]:
    """'LO:HI' with decimal or rational endpoints."""
    parts = text.split(":")
    if len(parts) != 2:
        raise ConfigurationError(f"range must look like LO:HI, got {text!r}")
    try:
        return Fraction(parts[0].strip()), Fraction(parts[1].strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigurationError(f"bad range {text!r}: {e}") from e


def parse_bool(text: str) -> bool:
    value = text.strip().lower()
    if value in {"1", "true", "yes", "on"}:
        return True
    if value in {"0", "false", "no", "off"}:
        return False
    raise ConfigurationError(f"expected a boolean, got {text!r}")


class RunConfig(BaseModel):
    """Validated options of one CLI invocation."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    precision: int | None = Field(default=None, ge=64, le=65536)
    n_max: int | None = Field(default=None, ge=0)
    range: tuple[Fraction, Fraction] | None = None
    depth: int | None = Field(default=None, ge=1)
    k_max: int = Field(default=4, ge=2, le=64)
    step: Fraction = Fraction(1)
    strict: bool = True
    format: OutputFormat = OutputFormat.TEXT
    out_path: Path | None = None

    @field_validator("step")
    @classmethod
    def validate_step(cls, v: Fraction) -> Fraction:
        if v <= 0:
            raise ValueError(f"step must be positive, got {v}")
        return v

    @model_validator(mode="after")
    def check_range(self) -> "RunConfig":
        if self.range is not None and not self.range[0] < self.range[1]:
            raise ValueError(f"range needs lo < hi, got {self.range[0]}:{self.range[1]}")
        return self

    @property
    def prec(self) -> int:
        """--prec when given, else the LOGMONO_PRECISION setting."""
        return self.precision if self.precision is not None else get_settings().precision

    def range_or(self, lo: int | Fraction, hi: int | Fraction) -> tuple[Fraction, Fraction]:
        return self.range if self.range is not None else (Fraction(lo), Fraction(hi))

    def index_range(self, lo: int, hi: int) -> tuple[int, int]:
        if self.range is None:
            return lo, hi
        start, stop = self.range
        if start.denominator != 1 or stop.denominator != 1:
            raise ConfigurationError(f"index range needs integer ends, got {start}:{stop}")
        return int(start), int(stop)

    def grid(self, lo: int | Fraction, hi: int | Fraction) -> list[Fraction]:
        """lo, lo + step, ... up to hi."""
        start, stop = self.range_or(lo, hi)
        points = []
        x = start
        while x <= stop:
            points.append(x)
            x += self.step
        return points


_FILE_KEYS = {
    "PRECISION": ("precision", int),
    "N_MAX": ("n_max", int),
    "RANGE": ("range", parse_range),
    "DEPTH": ("depth", int),
    "K_MAX": ("k_max", int),
    "STEP": ("step", Fraction),
    "STRICT": ("strict", parse_bool),
    "FORMAT": ("format", str),
    "OUT": ("out_path", Path),
}


def load_config_file(path: Path) -> dict[str, Any]:
    """Read a flat KEY=value file into RunConfig field values."""
    if not path.is_file():
        raise ConfigurationError(f"config file not found: {path}")
    values: dict[str, Any] = {}
    for key, raw in dotenv_values(path).items():
        name = key.upper()
        if name not in _FILE_KEYS:
            raise ConfigurationError(f"unknown key {key!r} in {path}")
        if raw is None:
            continue
        field_name, convert = _FILE_KEYS[name]
        try:
            values[field_name] = convert(raw)
        except ValueError as e:
            raise ConfigurationError(f"bad value for {key} in {path}: {e}") from e
    logger.debug(f"Loaded {len(values)} options from {path}")
    return values


def build_run_config(file_values: dict[str, Any], flag_values: dict[str, Any]) -> RunConfig:
    """Merge file options with the flags that were given; flags win."""
    merged = dict(file_values)
    merged.update({k: v for k, v in flag_values.items() if v is not None})
    return RunConfig(**merged)
