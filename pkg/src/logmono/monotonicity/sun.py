# Root-Bernoulli Monotonicity
# |B_2n|^(1/n) strictly increasing, and its ratio sequence strictly decreasing from n = 2

from dataclasses import dataclass, field
from typing import Any

from loguru import logger

from ..exceptions import InsufficientRange
from .sequences import SequenceName, builtin_sequence, r_operator
from .verdicts import Verdict, VerdictTag, decreasing_at, increasing_at

RATIO_START = 2


@dataclass
class SunReport:
    n_max: int
    increasing: list[tuple[int, Verdict]] = field(default_factory=list)
    ratio_decreasing: list[tuple[int, Verdict]] = field(default_factory=list)

    def _indices(self, tag: VerdictTag) -> dict[str, list[int]]:
        return {
            "increasing": [n for n, v in self.increasing if v.tag is tag],
            "ratio_decreasing": [n for n, v in self.ratio_decreasing if v.tag is tag],
        }

    @property
    def fails(self) -> dict[str, list[int]]:
        return self._indices(VerdictTag.FAILS)

    @property
    def undecided(self) -> dict[str, list[int]]:
        return self._indices(VerdictTag.UNDECIDED)

    @property
    def all_hold(self) -> bool:
        return all(v.holds for _, v in self.increasing + self.ratio_decreasing)

    @property
    def max_precision(self) -> int:
        return max(v.precision_used for _, v in self.increasing + self.ratio_decreasing)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n_max": self.n_max,
            "increasing_range": [1, self.n_max - 1],
            "ratio_decreasing_range": [RATIO_START, self.n_max - 2],
            "all_hold": self.all_hold,
            "fails": self.fails,
            "undecided": self.undecided,
            "max_precision": self.max_precision,
        }

    def csv_rows(self) -> list[list[str]]:
        rows = [["part", "n", "verdict", "precision"]]
        for part, verdicts in (("increasing", self.increasing), ("ratio_decreasing", self.ratio_decreasing)):
            rows.extend([part, str(n), v.tag.value, str(v.precision_used)] for n, v in verdicts)
        return rows


def sun_conjecture_check(n_max: int, prec: int | None = None) -> SunReport:
    """Check s(n+1) > s(n) for 1 <= n < n_max and R s(n+1) < R s(n) for 2 <= n <= n_max - 2.

    s is |B_2n|^(1/n); every term used lies in 1..n_max.
    """
    if n_max < 4:
        raise InsufficientRange(f"n_max must be >= 4, got {n_max}")
    roots = builtin_sequence(SequenceName.ROOT_ABS_BERNOULLI)
    ratios = r_operator(roots)
    report = SunReport(n_max)
    for n in range(1, n_max):
        report.increasing.append((n, increasing_at(roots, n, True, prec)))
    for n in range(RATIO_START, n_max - 1):
        report.ratio_decreasing.append((n, decreasing_at(ratios, n, True, prec)))
    if report.all_hold:
        logger.info(f"root-Bernoulli monotonicity holds up to n = {n_max}")
    else:
        logger.warning(f"root-Bernoulli monotonicity: fails {report.fails}, undecided {report.undecided}")
    return report
