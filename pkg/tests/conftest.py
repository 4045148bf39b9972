"""Pytest configuration and shared fixtures."""

import random
import tempfile
from collections.abc import Generator
from fractions import Fraction
from pathlib import Path

import mpmath
import pytest
from loguru import logger

import logmono.config as config_module
from logmono.ball import to_fraction
from logmono.config import Settings, reset_settings


@pytest.fixture(autouse=True)
def reset_logging():
    """Reset logging configuration for each test."""
    logger.remove()  # Remove all handlers
    logger.add(lambda msg: None, level="CRITICAL")  # Suppress logs in tests
    yield
    logger.remove()


@pytest.fixture(autouse=True)
def test_settings(monkeypatch: pytest.MonkeyPatch) -> Generator[Settings, None, None]:
    """Install fresh settings that ignore .env and LOGMONO_* variables."""
    import os

    for key in list(os.environ):
        if key.upper().startswith("LOGMONO_"):
            monkeypatch.delenv(key)
    reset_settings()
    settings = Settings(_env_file=None)
    # Installed directly so get_settings() does not reconfigure logging
    config_module._settings = settings
    yield settings
    reset_settings()


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for testing."""
    with tempfile.TemporaryDirectory() as tmp_dir:
        yield Path(tmp_dir)


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator so randomized checks are reproducible."""
    return random.Random(20240601)


@pytest.fixture
def mp_fraction():
    """Evaluate an mpmath expression at a given precision and return it as an exact Fraction."""

    def evaluate(fn, *args, prec: int) -> Fraction:
        with mpmath.workprec(prec):
            value = fn(*[mpmath.mpf(a.numerator) / a.denominator if isinstance(a, Fraction) else a for a in args])
            return to_fraction(mpmath.mpf(value)._mpf_)

    return evaluate
