"""logmono - certified enclosures and log-monotonicity checks for Bernoulli and tangent numbers."""

__version__ = "0.1.0"
__author__ = "Logmono Team"

from .config import Settings, get_settings  # noqa: E402

__all__ = ["Settings", "get_settings", "__version__"]
