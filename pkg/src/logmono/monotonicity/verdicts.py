# Verdicts
# Three-valued inequality checks on sequence terms with precision escalation

from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

from loguru import logger

from ..ball import Ball, Comparison
from ..config import get_settings
from .sequences import SequenceHandle, Term


class VerdictTag(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one inequality; precision_used is 0 for exact comparisons."""

    tag: VerdictTag
    strict: bool
    precision_used: int

    @property
    def holds(self) -> bool:
        return self.tag is VerdictTag.HOLDS


Sides = Callable[[int | None], tuple[Term, Term]]


def _decide_exact(left: Term, right: Term, strict: bool) -> Verdict:
    ok = left > right if strict else left >= right
    return Verdict(VerdictTag.HOLDS if ok else VerdictTag.FAILS, strict, 0)


def _decide(s: SequenceHandle, sides: Sides, strict: bool, prec: int | None) -> Verdict:
    """Holds iff left > right (left >= right when not strict)."""
    if s.exact:
        left, right = sides(None)
        return _decide_exact(left, right, strict)

    settings = get_settings()
    ladder = settings.precision_ladder(prec or settings.precision)
    for rung in ladder:
        left, right = sides(rung)
        assert isinstance(left, Ball) and isinstance(right, Ball)
        outcome = left.compare(right)
        if outcome is Comparison.GREATER:
            return Verdict(VerdictTag.HOLDS, strict, rung)
        if outcome is Comparison.LESS:
            return Verdict(VerdictTag.FAILS, strict, rung)
    logger.debug(f"{s.name}: comparison undecided at {ladder[-1]} bits")
    return Verdict(VerdictTag.UNDECIDED, strict, ladder[-1])


def logconcave_at(
    s: SequenceHandle, n: int, strict: bool = True, prec: int | None = None
) -> Verdict:
    """s(n+1)^2 > s(n) s(n+2) (>= when not strict)."""

    def sides(p: int | None) -> tuple[Term, Term]:
        a0, a1, a2 = s.term(n, p), s.term(n + 1, p), s.term(n + 2, p)
        return a1 * a1, a0 * a2

    return _decide(s, sides, strict, prec)


def logconvex_at(
    s: SequenceHandle, n: int, strict: bool = True, prec: int | None = None
) -> Verdict:
    """s(n+1)^2 < s(n) s(n+2) (<= when not strict)."""

    def sides(p: int | None) -> tuple[Term, Term]:
        a0, a1, a2 = s.term(n, p), s.term(n + 1, p), s.term(n + 2, p)
        return a0 * a2, a1 * a1

    return _decide(s, sides, strict, prec)


def increasing_at(
    s: SequenceHandle, n: int, strict: bool = True, prec: int | None = None
) -> Verdict:
    """s(n+1) > s(n)."""

    def sides(p: int | None) -> tuple[Term, Term]:
        return s.term(n + 1, p), s.term(n, p)

    return _decide(s, sides, strict, prec)


def decreasing_at(
    s: SequenceHandle, n: int, strict: bool = True, prec: int | None = None
) -> Verdict:
    """s(n+1) < s(n)."""

    def sides(p: int | None) -> tuple[Term, Term]:
        return s.term(n, p), s.term(n + 1, p)

    return _decide(s, sides, strict, prec)
