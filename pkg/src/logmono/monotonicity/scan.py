# Log-Monotonicity Scan
# R^r parity checks over an index range with per-order thresholds

from dataclasses import dataclass, field
from typing import Any

from loguru import logger

from ..exceptions import DomainViolation, InsufficientRange
from .sequences import SequenceHandle, r_power
from .verdicts import Verdict, VerdictTag, logconcave_at, logconvex_at


@dataclass
class MonotonicityReport:
    """Verdicts of one order r: R^r s log-concave for odd r, log-convex for even r."""

    sequence: str
    depth: int
    strict: bool
    lo: int
    hi: int
    verdicts: list[tuple[int, Verdict]] = field(default_factory=list)

    @property
    def property_name(self) -> str:
        return "log-concave" if self.depth % 2 else "log-convex"

    @property
    def violations(self) -> list[int]:
        return [n for n, v in self.verdicts if v.tag is VerdictTag.FAILS]

    @property
    def undecided(self) -> list[int]:
        return [n for n, v in self.verdicts if v.tag is VerdictTag.UNDECIDED]

    @property
    def threshold(self) -> int | None:
        """Smallest scanned index from which every verdict Holds; None if the last one does not."""
        n0 = None
        for n, verdict in reversed(self.verdicts):
            if not verdict.holds:
                break
            n0 = n
        return n0

    @property
    def violations_are_prefix(self) -> bool:
        threshold = self.threshold
        if threshold is None:
            return False
        return all(n < threshold for n in self.violations + self.undecided)

    @property
    def outcome(self) -> VerdictTag:
        """HOLDS once a threshold exists; otherwise the tag of the last failing index."""
        if self.threshold is not None:
            return VerdictTag.HOLDS
        return self.verdicts[-1][1].tag

    def to_dict(self) -> dict[str, Any]:
        return {
            "r": self.depth,
            "property": self.property_name,
            "range": [self.lo, self.hi],
            "N": self.threshold,
            "violations": self.violations,
            "undecided": self.undecided,
        }


def scan_infinite_logmono(
    s: SequenceHandle,
    max_depth: int,
    n_range: tuple[int, int],
    strict: bool = True,
    prec: int | None = None,
) -> list[MonotonicityReport]:
    """Check R^r s for r = 0..max_depth on the indices whose terms lie in n_range."""
    lo, hi = n_range
    if max_depth < 1:
        raise DomainViolation(f"scan depth must be >= 1, got {max_depth}")
    if lo < s.start_index:
        raise DomainViolation(f"{s.name} starts at {s.start_index}, range starts at {lo}")
    if hi - lo + 1 < max_depth + 3:
        raise InsufficientRange(
            f"range [{lo}, {hi}] has {hi - lo + 1} terms, depth {max_depth} needs {max_depth + 3}"
        )

    reports = []
    for r in range(max_depth + 1):
        handle = r_power(s, r)
        check = logconcave_at if r % 2 else logconvex_at
        last = hi - r - 2
        report = MonotonicityReport(s.name, r, strict, lo, last)
        for n in range(lo, last + 1):
            report.verdicts.append((n, check(handle, n, strict, prec)))
        logger.info(
            f"{s.name} r={r} ({report.property_name}): N={report.threshold}, "
            f"{len(report.violations)} violations, {len(report.undecided)} undecided"
        )
        if report.undecided:
            logger.warning(f"{s.name} r={r}: undecided at {report.undecided}")
        reports.append(report)
    return reports


def reports_to_dict(reports: list[MonotonicityReport]) -> dict[str, Any]:
    """Serialize one scan as {sequence, depth, strict, range, thresholds, violations, undecided}."""
    first = reports[0]
    return {
        "sequence": first.sequence,
        "depth": reports[-1].depth,
        "strict": first.strict,
        "range": [first.lo, first.hi + 2],
        "thresholds": [{"r": rep.depth, "N": rep.threshold} for rep in reports],
        "violations": [{"r": rep.depth, "indices": rep.violations} for rep in reports],
        "undecided": [{"r": rep.depth, "indices": rep.undecided} for rep in reports],
    }
