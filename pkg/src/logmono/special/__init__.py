"""Certified enclosures of zeta, log Gamma and their derivatives."""

from .loggamma import (
    LogGammaMethod,
    alzer_band_values,
    loggamma_deriv_enclosure,
    loggamma_derivs,
    loggamma_enclosure,
    stirling_band,
    stirling_main,
    stirling_series,
)
from .zeta import (
    ZetaEnclosureParams,
    default_terms,
    log_int,
    log_zeta_derivs,
    zeta_deriv_enclosure,
    zeta_derivs,
    zeta_enclosure,
    zeta_even_exact,
)

__all__ = [
    "LogGammaMethod",
    "ZetaEnclosureParams",
    "alzer_band_values",
    "default_terms",
    "log_int",
    "log_zeta_derivs",
    "loggamma_deriv_enclosure",
    "loggamma_derivs",
    "loggamma_enclosure",
    "stirling_band",
    "stirling_main",
    "stirling_series",
    "zeta_deriv_enclosure",
    "zeta_derivs",
    "zeta_enclosure",
    "zeta_even_exact",
]
