"""Custom exceptions for logmono."""


class LogmonoError(Exception):
    """Base exception for logmono."""

    pass


class ConfigurationError(LogmonoError):
    """Invalid settings, run configuration or command-line flags."""

    pass


class DomainViolation(LogmonoError):
    """An argument (possibly an enclosure) leaves the domain of an operation."""

    pass


class DivisionByEnclosedZero(DomainViolation):
    """The divisor ball contains zero."""

    pass


class NonIntegerResult(LogmonoError):
    """An exact value that must be an integer reduced to a proper fraction."""

    pass


class NonPositiveTerm(LogmonoError):
    """A sequence term is not positive (or its enclosure touches zero)."""

    pass


class InsufficientRange(LogmonoError):
    """The index range is too short for the requested scan depth."""

    pass


class SearchExhausted(LogmonoError):
    """A threshold search reached its configured cap without success."""

    pass


class PrecisionExhausted(LogmonoError):
    """The precision ceiling was reached before a sign could be decided."""

    pass
