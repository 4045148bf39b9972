# Bernoulli Numbers
# Exact rationals from the binomial recurrence, memoized per process

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


@dataclass(frozen=True)
class BernoulliTable:
    """Immutable snapshot of B_0..B_max_index."""

    values: tuple[Fraction, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


class _BernoulliMemo:
    """Growable table shared by every caller in the process.

    Growth happens under a lock and publishes whole entries only, so
    readers never see a half-written value. Entries are kept together with
    a running common denominator so the recurrence sums in integers.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._values: list[Fraction] = [Fraction(1)]
        self._common_den = 1

    def ensure(self, n: int) -> None:
        if n < len(self._values):
            return
        with self._lock:
            start = len(self._values)
            for m in range(start, n + 1):
                self._values.append(self._next(m))
            if n >= start:
                logger.debug(f"Bernoulli table grown to index {n}")

    def _next(self, m: int) -> Fraction:
        if m >= 3 and m % 2 == 1:
            return Fraction(0)
        # sum_{k<m} C(m+1, k) B_k = -(m+1) B_m, over the common denominator
        den = self._common_den
        total = 0
        for k, b in enumerate(self._values):
            if b:
                total += math.comb(m + 1, k) * b.numerator * (den // b.denominator)
        value = Fraction(-total, den * (m + 1))
        self._common_den = math.lcm(den, value.denominator)
        return value

    def get(self, n: int) -> Fraction:
        self.ensure(n)
        return self._values[n]

    def snapshot(self, max_index: int) -> BernoulliTable:
        self.ensure(max_index)
        return BernoulliTable(tuple(self._values[: max_index + 1]))


_memo = _BernoulliMemo()


def bernoulli(n: int) -> Fraction:
    """Exact B_n with B_0 = 1 and B_1 = -1/2."""
    if n < 0:
        raise ValueError(f"Bernoulli index must be nonnegative, got {n}")
    return _memo.get(n)


def bernoulli_even(n: int) -> Fraction:
    """B_{2n}."""
    return bernoulli(2 * n)


def bernoulli_table(max_index: int) -> BernoulliTable:
    """Snapshot of B_0..B_max_index."""
    if max_index < 0:
        raise ValueError(f"max_index must be nonnegative, got {max_index}")
    return _memo.snapshot(max_index)


def harmonic(j: int) -> Fraction:
    """Exact harmonic number H_j = 1 + 1/2 + ... + 1/j (H_0 = 0)."""
    if j < 0:
        raise ValueError(f"harmonic index must be nonnegative, got {j}")
    return sum((Fraction(1, i) for i in range(1, j + 1)), Fraction(0))
