# Sequence Handles
# Lazily evaluated, cached positive sequences and the R operator on them

import threading
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from loguru import logger

from ..ball import Ball, exp, log, pi_ball
from ..certify import log_theta
from ..config import get_settings
from ..exactnum import bernoulli_even, tangent
from ..exceptions import DomainViolation, NonPositiveTerm

Term = Fraction | Ball
Generator = Callable[[int, int], Term]


class SequenceKind(Enum):
    """How the terms of a sequence are represented."""

    EXACT_RATIONAL = "exact_rational"
    ENCLOSED = "enclosed"


class SequenceName(Enum):
    """Built-in sequences."""

    ABS_BERNOULLI = "abs_bernoulli"
    ROOT_ABS_BERNOULLI = "root_abs_bernoulli"
    INV_ROOT_ABS_BERNOULLI = "inv_root_abs_bernoulli"
    TANGENT = "tangent"
    ROOT_TANGENT = "root_tangent"
    INV_ROOT_TANGENT = "inv_root_tangent"
    CUSTOM = "custom"


@dataclass
class SequenceHandle:
    """A named positive sequence whose terms are computed on demand and cached.

    ``generator(n, prec)`` returns a Fraction for exact sequences (``prec`` is
    ignored) or a Ball at ``prec`` bits for enclosed ones.
    """

    name: str
    kind: SequenceKind
    generator: Generator
    start_index: int = 1
    _cache: dict[tuple[int, int], Term] = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def exact(self) -> bool:
        return self.kind is SequenceKind.EXACT_RATIONAL

    def term(self, n: int, prec: int | None = None) -> Term:
        """Term n; enclosed terms are cached per precision."""
        if n < self.start_index:
            raise DomainViolation(f"{self.name} starts at {self.start_index}, got n = {n}")
        prec = 0 if self.exact else (prec or get_settings().precision)
        key = (n, prec)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        value = self.generator(n, prec)
        self._check_positive(n, value)
        with self._lock:
            self._cache.setdefault(key, value)
        return self._cache[key]

    def _check_positive(self, n: int, value: Term) -> None:
        if isinstance(value, Ball):
            if not value.is_positive():
                raise NonPositiveTerm(f"{self.name}({n}) = {value} is not certainly positive")
        elif value <= 0:
            raise NonPositiveTerm(f"{self.name}({n}) = {value} is not positive")

    @classmethod
    def custom(
        cls,
        generator: Callable[[int, int], Term | int],
        kind: SequenceKind = SequenceKind.EXACT_RATIONAL,
        start_index: int = 1,
        name: str = SequenceName.CUSTOM.value,
    ) -> "SequenceHandle":
        """Wrap a callable (n, prec) -> int | Fraction | Ball as a sequence."""

        def wrapped(n: int, prec: int) -> Term:
            value = generator(n, prec)
            if isinstance(value, int):
                return Fraction(value)
            return value

        return cls(name, kind, wrapped, start_index)


def r_operator(s: SequenceHandle) -> SequenceHandle:
    """R s: term n is s(n+1) / s(n)."""

    def ratio(n: int, prec: int) -> Term:
        a0 = s.term(n, prec)
        a1 = s.term(n + 1, prec)
        return a1 / a0

    return SequenceHandle(f"R({s.name})", s.kind, ratio, s.start_index)


def r_power(s: SequenceHandle, r: int) -> SequenceHandle:
    """R applied r times (r = 0 is s itself)."""
    if r < 0:
        raise DomainViolation(f"R power must be nonnegative, got {r}")
    for _ in range(r):
        s = r_operator(s)
    return s


# --------------------------------------------------------------------------- #
# Built-in sequences
# --------------------------------------------------------------------------- #


def _abs_bernoulli(n: int, prec: int) -> Term:
    return abs(bernoulli_even(n))


def _tangent(n: int, prec: int) -> Term:
    return Fraction(tangent(n))


def _nth_root(exact: Callable[[int, int], Term], sign: int) -> Generator:
    def root(n: int, prec: int) -> Term:
        value = exact(n, prec)
        assert isinstance(value, Fraction)
        return exp(sign * log(Ball.exact(value, prec)) / n)

    return root


_BUILTINS: dict[SequenceName, tuple[SequenceKind, Generator]] = {
    SequenceName.ABS_BERNOULLI: (SequenceKind.EXACT_RATIONAL, _abs_bernoulli),
    SequenceName.ROOT_ABS_BERNOULLI: (SequenceKind.ENCLOSED, _nth_root(_abs_bernoulli, 1)),
    SequenceName.INV_ROOT_ABS_BERNOULLI: (SequenceKind.ENCLOSED, _nth_root(_abs_bernoulli, -1)),
    SequenceName.TANGENT: (SequenceKind.EXACT_RATIONAL, _tangent),
    SequenceName.ROOT_TANGENT: (SequenceKind.ENCLOSED, _nth_root(_tangent, 1)),
    SequenceName.INV_ROOT_TANGENT: (SequenceKind.ENCLOSED, _nth_root(_tangent, -1)),
}

_handles: dict[SequenceName, SequenceHandle] = {}
_handles_lock = threading.Lock()


def builtin_sequence(name: SequenceName | str) -> SequenceHandle:
    """Shared handle of a built-in sequence, so its cache outlives a single scan."""
    key = SequenceName(name)
    if key is SequenceName.CUSTOM:
        raise DomainViolation("custom sequences are built with SequenceHandle.custom")
    with _handles_lock:
        if key not in _handles:
            kind, generator = _BUILTINS[key]
            _handles[key] = SequenceHandle(key.value, kind, generator, start_index=1)
            logger.debug(f"Created sequence handle '{key.value}'")
        return _handles[key]


def sequence_value(name: SequenceName | str, n: int, prec: int | None = None) -> Term:
    """Term n of a built-in sequence: exact for abs_bernoulli and tangent, a Ball otherwise."""
    return builtin_sequence(name).term(n, prec)


def y_interp(x: Ball) -> Ball:
    """y(x) = 4 pi^2 theta(2x)^-2, which meets 1/|B_2n|^(1/n) at integers."""
    prec = x.prec
    four_pi2 = 4 * pi_ball(prec).square()
    return exp(log(four_pi2) - 2 * log_theta(2 * x))
