# Sign Certification
# Best-first bisection proving an enclosed function negative on an interval

import heapq
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

from loguru import logger

from ..ball import Ball
from ..config import get_settings
from ..exceptions import ConfigurationError, DomainViolation, PrecisionExhausted
from .base import CertificateLeaf, CertificateStatus, SignCertificate
from .theta import d2_log_theta, kth_deriv_log_theta

ESCALATE_BELOW_WIDTH = Fraction(1, 1 << 20)
KTH_PREFIX = "kth_log_theta_"

Evaluator = Callable[[Ball], Ball]


@dataclass(frozen=True)
class CertifiableFunction:
    """A function whose negativity can be certified, with the open lower end of its domain."""

    name: str
    evaluate: Evaluator
    domain_lo: Fraction
    description: str = ""


class SignRegistry:
    """Registry of functions accepted by ``certify_negative``."""

    _functions: dict[str, CertifiableFunction] = {}

    @classmethod
    def register(
        cls, name: str, evaluate: Evaluator, domain_lo: int | Fraction, description: str = ""
    ) -> CertifiableFunction:
        entry = CertifiableFunction(name, evaluate, Fraction(domain_lo), description)
        cls._functions[name] = entry
        logger.debug(f"Registered certifiable function '{name}'")
        return entry

    @classmethod
    def unregister(cls, name: str) -> None:
        cls._functions.pop(name, None)

    @classmethod
    def get(cls, name: str) -> CertifiableFunction:
        if name in cls._functions:
            return cls._functions[name]
        if name.startswith(KTH_PREFIX):
            suffix = name[len(KTH_PREFIX) :]
            if suffix.isdigit() and int(suffix) >= 2:
                return cls._kth_entry(int(suffix))
        raise DomainViolation(f"Unknown certifiable function: {name}")

    @classmethod
    def names(cls) -> list[str]:
        return sorted(cls._functions)

    @staticmethod
    def _kth_entry(k: int) -> CertifiableFunction:
        sign = -1 if k % 2 else 1

        def evaluate(x: Ball) -> Ball:
            return sign * kth_deriv_log_theta(x, k)

        return CertifiableFunction(
            f"{KTH_PREFIX}{k}", evaluate, Fraction(k + 3), f"(-1)^{k} (log theta)^({k})"
        )


SignRegistry.register(
    "d2_log_theta", lambda x: d2_log_theta(x).total, 6, "(log theta)''(x)"
)


@dataclass(order=True)
class _Cell:
    key: tuple[int, Fraction, Fraction]
    lo: Fraction = field(compare=False)
    hi: Fraction = field(compare=False)
    depth: int = field(compare=False)
    precision: int = field(compare=False)
    enclosure: Ball | None = field(compare=False)

    @property
    def failed(self) -> bool:
        return self.enclosure is None


def _evaluate(fn: CertifiableFunction, lo: Fraction, hi: Fraction, prec: int) -> Ball | None:
    """fn on [lo, hi], or None when the evaluation raises on this cell."""
    try:
        return fn.evaluate(Ball.from_interval(lo, hi, prec))
    except (DomainViolation, PrecisionExhausted) as e:
        logger.debug(f"{fn.name} failed on [{float(lo)}, {float(hi)}] at {prec} bits: {e}")
        return None


def _cell(fn: CertifiableFunction, lo: Fraction, hi: Fraction, depth: int, prec: int) -> _Cell:
    enclosure = _evaluate(fn, lo, hi, prec)
    # heapq is a min-heap: failed cells first, then largest upper bound, ties by start
    if enclosure is None:
        return _Cell((0, Fraction(0), lo), lo, hi, depth, prec, None)
    return _Cell((1, -enclosure.upper_fraction(), lo), lo, hi, depth, prec, enclosure)


def _resolve(fn: str | CertifiableFunction) -> CertifiableFunction:
    return fn if isinstance(fn, CertifiableFunction) else SignRegistry.get(fn)


def certify_negative(
    fn: str | CertifiableFunction,
    a: int | Fraction | str,
    b: int | Fraction | str,
    max_depth: int = 40,
    prec: int | None = None,
    max_leaves: int | None = None,
) -> SignCertificate:
    """Prove fn < 0 on [a, b] by bisecting the leaf with the largest upper bound first.

    Returns an Undecided certificate when a leaf is certainly nonnegative or a
    depth, leaf or precision budget runs out.
    """
    entry = _resolve(fn)
    lo, hi = Fraction(a), Fraction(b)
    if lo > hi:
        raise DomainViolation(f"empty interval [{lo}, {hi}]")
    if lo <= entry.domain_lo:
        raise DomainViolation(f"{entry.name} needs a > {entry.domain_lo}, got {lo}")
    if max_depth < 1:
        raise ConfigurationError(f"max_depth must be >= 1, got {max_depth}")

    settings = get_settings()
    prec = prec or settings.precision
    max_leaves = max_leaves or settings.certify_max_leaves
    cap = settings.prec_cap

    heap = [_cell(entry, lo, hi, 0, prec)]
    evaluations = 1
    status = CertificateStatus.UNDECIDED
    reason = ""
    logger.debug(f"Certifying {entry.name} < 0 on [{lo}, {hi}] at {prec} bits")

    while True:
        worst = heap[0]
        if worst.enclosure is not None:
            if worst.enclosure.is_negative():
                status = CertificateStatus.CERTIFIED
                break
            if worst.enclosure.lower_fraction() >= 0:
                reason = f"nonnegative on [{float(worst.lo)}, {float(worst.hi)}]"
                break
        if worst.lo == worst.hi:
            if worst.precision >= cap:
                what = "evaluation failed" if worst.failed else "precision cap reached"
                reason = f"{what} at {float(worst.lo)}"
                break
            heapq.heapreplace(
                heap, _cell(entry, worst.lo, worst.hi, worst.depth, min(2 * worst.precision, cap))
            )
            evaluations += 1
            continue
        if worst.depth >= max_depth:
            reason = f"depth {max_depth} exhausted near {float(worst.lo)}"
            break
        if len(heap) >= max_leaves:
            reason = f"leaf budget {max_leaves} exhausted"
            break

        width = worst.hi - worst.lo
        if width < ESCALATE_BELOW_WIDTH and worst.precision < cap:
            new_prec = min(2 * worst.precision, cap)
            logger.debug(f"Escalating to {new_prec} bits on width {float(width):.3g}")
            heapq.heapreplace(heap, _cell(entry, worst.lo, worst.hi, worst.depth, new_prec))
            evaluations += 1
            continue

        mid = (worst.lo + worst.hi) / 2
        heapq.heappop(heap)
        heapq.heappush(heap, _cell(entry, worst.lo, mid, worst.depth + 1, worst.precision))
        heapq.heappush(heap, _cell(entry, mid, worst.hi, worst.depth + 1, worst.precision))
        evaluations += 2
        if evaluations % 1000 == 0:
            logger.debug(f"{evaluations} evaluations, {len(heap)} leaves")

    leaves = [
        CertificateLeaf(cell.lo, cell.hi, cell.enclosure, cell.precision)
        for cell in sorted(heap, key=lambda c: (c.lo, c.hi))
    ]
    certificate = SignCertificate(
        function=entry.name,
        lo=lo,
        hi=hi,
        leaves=leaves,
        status=status,
        precision_bits=max(leaf.precision for leaf in leaves),
        evaluations=evaluations,
        reason=reason,
    )
    if certificate.certified:
        logger.info(f"{entry.name} < 0 certified on [{lo}, {hi}] with {len(leaves)} leaves")
    else:
        logger.warning(f"{entry.name} undecided on [{lo}, {hi}]: {reason}")
    return certificate


def replay_certificate(cert: SignCertificate, fn: str | CertifiableFunction | None = None) -> bool:
    """Re-evaluate every leaf; True iff the leaves tile [lo, hi] and all are still negative."""
    entry = _resolve(fn if fn is not None else cert.function)
    if not cert.leaves or cert.leaves[0].lo != cert.lo or cert.leaves[-1].hi != cert.hi:
        return False
    for previous, leaf in zip(cert.leaves, cert.leaves[1:]):
        if previous.hi != leaf.lo:
            return False
    for leaf in cert.leaves:
        enclosure = _evaluate(entry, leaf.lo, leaf.hi, leaf.precision)
        if enclosure is None or not enclosure.is_negative():
            logger.warning(f"replay failed on [{leaf.lo}, {leaf.hi}]")
            return False
    return True
