# Certification Result Types
# Breakdowns, signed enclosures and subdivision certificates

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from ..ball import Ball, format_directed

DECIMAL_DIGITS = 20


class SignFlag(Enum):
    """Certified sign of an enclosure."""

    POSITIVE = "positive"
    NEGATIVE = "negative"
    UNDECIDED = "undecided"

    @classmethod
    def of(cls, value: Ball) -> "SignFlag":
        if value.is_positive():
            return cls.POSITIVE
        if value.is_negative():
            return cls.NEGATIVE
        return cls.UNDECIDED


class CertificateStatus(Enum):
    """Outcome of a subdivision run."""

    CERTIFIED = "certified"
    UNDECIDED = "undecided"


def ball_dict(value: Ball, digits: int = DECIMAL_DIGITS) -> dict[str, str]:
    mid, rad = value.decimal_parts(digits)
    return {"mid": mid, "rad": rad}


@dataclass(frozen=True)
class BoundBreakdown:
    """Three-term split of the second log-derivative of theta (or of a bound on it)."""

    term_log2: Ball
    term_zeta: Ball
    term_gamma: Ball
    total: Ball
    at_x: Ball

    @classmethod
    def assemble(cls, term_log2: Ball, term_zeta: Ball, term_gamma: Ball, at_x: Ball) -> "BoundBreakdown":
        return cls(term_log2, term_zeta, term_gamma, term_log2 + term_zeta + term_gamma, at_x)

    def to_dict(self, digits: int = DECIMAL_DIGITS) -> dict[str, Any]:
        return {
            "at_x": ball_dict(self.at_x, digits),
            "term_log2": ball_dict(self.term_log2, digits),
            "term_zeta": ball_dict(self.term_zeta, digits),
            "term_gamma": ball_dict(self.term_gamma, digits),
            "total": ball_dict(self.total, digits),
        }


@dataclass(frozen=True)
class SignedEnclosure:
    """An enclosure together with its certified sign and the precision that decided it."""

    value: Ball
    sign: SignFlag
    precision: int
    note: str = ""


@dataclass(frozen=True)
class CertificateLeaf:
    """One cell of a subdivision: [lo, hi] and the enclosure found on it.

    ``enclosure`` is None when evaluation failed on the cell; its upper bound is then unknown.
    """

    lo: Fraction
    hi: Fraction
    enclosure: Ball | None
    precision: int

    @property
    def upper(self) -> Fraction | None:
        return None if self.enclosure is None else self.enclosure.upper_fraction()

    def to_dict(self) -> dict[str, Any]:
        return {
            "lo": format_directed(self.lo, DECIMAL_DIGITS, upward=False),
            "hi": format_directed(self.hi, DECIMAL_DIGITS, upward=True),
            "upper_bound_decimal": "inf"
            if self.enclosure is None
            else self.enclosure.upper_decimal(DECIMAL_DIGITS),
        }


@dataclass
class SignCertificate:
    """Record proving (or failing to prove) that a function is negative on [lo, hi]."""

    function: str
    lo: Fraction
    hi: Fraction
    leaves: list[CertificateLeaf]
    status: CertificateStatus
    precision_bits: int
    evaluations: int = 0
    reason: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def max_upper(self) -> Fraction | None:
        """Largest leaf upper bound; None when there are no leaves or one is unbounded."""
        uppers = [leaf.upper for leaf in self.leaves]
        if not uppers or any(u is None for u in uppers):
            return None
        return max(u for u in uppers if u is not None)

    @property
    def certified(self) -> bool:
        return self.status is CertificateStatus.CERTIFIED

    def to_dict(self) -> dict[str, Any]:
        max_upper = self.max_upper
        return {
            "function": self.function,
            "interval": [
                format_directed(self.lo, DECIMAL_DIGITS, upward=False),
                format_directed(self.hi, DECIMAL_DIGITS, upward=True),
            ],
            "leaves": [leaf.to_dict() for leaf in self.leaves],
            "max_upper": None
            if max_upper is None
            else format_directed(max_upper, DECIMAL_DIGITS, upward=True),
            "status": self.status.value,
            "precision_bits": self.precision_bits,
            "reason": self.reason,
        }
