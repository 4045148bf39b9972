# Analytic Bounds
# The closed-form upper bounds behind log-concavity of theta, and computed thresholds X(k)

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from loguru import logger

from ..ball import Ball, Comparison, as_ball, exp, log, log2_ball, log_2pi_ball, pi_ball, sqrt
from ..config import get_settings
from ..exactnum import harmonic
from ..exceptions import DomainViolation, SearchExhausted
from .base import DECIMAL_DIGITS, BoundBreakdown, ball_dict

Scalar = Ball | int | Fraction

PRINTED_TOTAL_AT_6 = Fraction("-0.2465")
ZETA_SHIFT = Fraction(977, 1000)
F_KX_CONSTANT = Fraction("-0.8108")


class BoundFunction(Enum):
    """Named bound functions with a derivative-sign claim."""

    F0 = "f0"
    F1 = "f1"
    F_KX = "f_kx"


@dataclass
class DerivativeSignReport:
    """Grid evidence that a bound function is decreasing, plus the analytic witness."""

    function: str
    grid: list[Fraction]
    derivatives: list[Ball]
    all_negative: bool
    witness: str

    def to_dict(self, digits: int = DECIMAL_DIGITS) -> dict[str, Any]:
        return {
            "function": self.function,
            "grid": [str(x) for x in self.grid],
            "derivative_upper": [d.upper_decimal(digits) for d in self.derivatives],
            "all_negative": self.all_negative,
            "witness": self.witness,
        }


@dataclass
class BoundEvaluation:
    value: Ball
    report: DerivativeSignReport


@dataclass
class TailBoundReport:
    """Bound terms at x_from together with the evidence that they only decrease beyond it."""

    breakdown: BoundBreakdown
    f0_root: Ball
    f1_discriminant: int
    monotone: bool
    certified: bool
    printed_total: Fraction = PRINTED_TOTAL_AT_6
    discrepancy: Ball | None = None

    def to_dict(self, digits: int = DECIMAL_DIGITS) -> dict[str, Any]:
        return {
            "breakdown": self.breakdown.to_dict(digits),
            "f0_root_upper": self.f0_root.upper_decimal(digits),
            "f1_discriminant": self.f1_discriminant,
            "monotone": self.monotone,
            "certified": self.certified,
            "printed_total": str(self.printed_total),
            "discrepancy": None if self.discrepancy is None else ball_dict(self.discrepancy, digits),
        }


@dataclass
class ThresholdCertificate:
    """A point X(k) where the combined upper bound is negative and stays so afterwards."""

    k: int
    threshold: int
    bound: Ball
    method: str
    zeta_decreasing_from: Ball
    f_partial_discriminant: int
    loggamma_part: Ball | None = None
    evaluations: int = 0
    notes: list[str] = field(default_factory=list)

    def to_dict(self, digits: int = DECIMAL_DIGITS) -> dict[str, Any]:
        return {
            "k": self.k,
            "threshold": self.threshold,
            "bound": ball_dict(self.bound, digits),
            "method": self.method,
            "zeta_decreasing_from": self.zeta_decreasing_from.upper_decimal(digits),
            "f_partial_discriminant": self.f_partial_discriminant,
            "loggamma_part": None if self.loggamma_part is None else self.loggamma_part.upper_decimal(digits),
        }


def _prec() -> int:
    return get_settings().precision


def _check_positive(x: Ball, what: str) -> None:
    if not x.is_positive():
        raise DomainViolation(f"{what} needs x > 0, got {x.to_decimal(10)}")


def two_pow(x: Ball) -> Ball:
    return exp(x * log2_ball(x.prec))


# --------------------------------------------------------------------------- #
# f0, f1 and f(k, x)
# --------------------------------------------------------------------------- #


def f0(x: Ball) -> Ball:
    """f0(x) = 1.5 (x^2 + sqrt(2) x) / 2^(x-1)."""
    _check_positive(x, "f0")
    root2 = sqrt(Ball.exact(2, x.prec))
    return 3 * (x.square() + root2 * x) / two_pow(x)


def f0_prime(x: Ball) -> Ball:
    """f0'(x) = -3/2^x (log 2 x^2 + (sqrt(2) log 2 - 2) x - sqrt(2))."""
    _check_positive(x, "f0_prime")
    ln2 = log2_ball(x.prec)
    root2 = sqrt(Ball.exact(2, x.prec))
    quad = ln2 * x.square() + (root2 * ln2 - 2) * x - root2
    return -3 * quad / two_pow(x)


def f0_prime_root(prec: int | None = None) -> Ball:
    """Larger root of log 2 x^2 + (sqrt(2) log 2 - 2) x - sqrt(2); f0 decreases to its right."""
    prec = prec or _prec()
    ln2 = log2_ball(prec)
    root2 = sqrt(Ball.exact(2, prec))
    b = root2 * ln2 - 2
    disc = b.square() + 4 * ln2 * root2
    return (sqrt(disc) - b) / (2 * ln2)


def f1(x: Ball) -> Ball:
    """f1(x) = -x + log x - 3/2 + 1/(2x) + log 2 pi."""
    _check_positive(x, "f1")
    return -x + log(x) - Fraction(3, 2) + (2 * x).reciprocal() + log_2pi_ball(x.prec)


def f1_prime(x: Ball) -> Ball:
    """f1'(x) = -(2x^2 - 2x + 1) / (2x^2)."""
    _check_positive(x, "f1_prime")
    x2 = x.square()
    return -(2 * x2 - 2 * x + 1) / (2 * x2)


F1_DISCRIMINANT = (-2) ** 2 - 4 * 2 * 1


def f_kx(k: int, x: Ball) -> Ball:
    """f(k, x) = log x/2 - H_k/2 - x/k + 3 log 2/2 + log pi/2 + (k+1)/(12x)."""
    if k < 2:
        raise DomainViolation(f"f(k, x) needs k >= 2, got {k}")
    _check_positive(x, "f_kx")
    prec = x.prec
    h = Ball.exact(harmonic(k), prec)
    const = 3 * log2_ball(prec) + log(pi_ball(prec))
    return (log(x) - h + const) / 2 - x / k + (k + 1) / (12 * x)


def f_kx_partial(k: int, x: Ball) -> Ball:
    """df/dx = -(12x^2 - 6kx + k^2 + k) / (12 k x^2)."""
    _check_positive(x, "f_kx_partial")
    x2 = x.square()
    return -(12 * x2 - 6 * k * x + (k * k + k)) / (12 * k * x2)


def f_kx_discriminant(k: int) -> int:
    """Discriminant of 12x^2 - 6kx + k^2 + k, i.e. -12k^2 - 48k."""
    return (6 * k) ** 2 - 4 * 12 * (k * k + k)


def f_kx_at_3k_cap(k: int, prec: int | None = None) -> Ball:
    """-17/(36k) - 0.8108, the closed-form cap on f(k, 3k)."""
    return Ball.exact(Fraction(-17, 36 * k) + F_KX_CONSTANT, prec or _prec())


def _default_grid(name: BoundFunction, k: int | None) -> list[Fraction]:
    if name is BoundFunction.F0:
        return [Fraction(x) for x in range(3, 31)]
    if name is BoundFunction.F1:
        return [Fraction(x) for x in range(1, 31)]
    assert k is not None
    return [Fraction(x) for x in range(k, 10 * k + 1)]


def bound_functions(
    name: BoundFunction | str,
    x: Scalar,
    k: int | None = None,
    grid: list[Fraction] | None = None,
) -> BoundEvaluation:
    """Evaluate f0, f1 or f(k, x) and certify its derivative sign on a grid."""
    key = BoundFunction(name)
    if key is BoundFunction.F_KX and k is None:
        raise DomainViolation("f_kx needs k")
    prec = x.prec if isinstance(x, Ball) else _prec()
    at = as_ball(x, prec)
    points = grid if grid is not None else _default_grid(key, k)

    if key is BoundFunction.F0:
        value = f0(at)
        derivs = [f0_prime(Ball.exact(p, prec)) for p in points]
        witness = f"larger root of the quadratic factor < {f0_prime_root(prec).upper_decimal(8)}"
    elif key is BoundFunction.F1:
        value = f1(at)
        derivs = [f1_prime(Ball.exact(p, prec)) for p in points]
        witness = f"2x^2 - 2x + 1 has discriminant {F1_DISCRIMINANT}"
    else:
        assert k is not None
        value = f_kx(k, at)
        derivs = [f_kx_partial(k, Ball.exact(p, prec)) for p in points]
        witness = f"12x^2 - 6kx + k^2 + k has discriminant {f_kx_discriminant(k)}"

    report = DerivativeSignReport(
        function=key.value,
        grid=list(points),
        derivatives=derivs,
        all_negative=all(d.is_negative() for d in derivs),
        witness=witness,
    )
    return BoundEvaluation(value, report)


# --------------------------------------------------------------------------- #
# Second-derivative chain
# --------------------------------------------------------------------------- #


def three_term_bound(x: Scalar) -> BoundBreakdown:
    """Upper bounds on x^3 times each of the three parts of (log theta)''(x), for x >= 6."""
    at = as_ball(x, _prec())
    if at.lower_fraction() < 6:
        raise DomainViolation(f"three_term_bound needs x >= 6, got {at.to_decimal(10)}")
    prec = at.prec
    term_log2 = 2 * log2_ball(prec)
    shrink = sqrt(1 + Fraction(3, 2) / two_pow(at)) - ZETA_SHIFT
    term_zeta = f0(at) + 2 * shrink
    term_gamma = f1(at)
    return BoundBreakdown.assemble(term_log2, term_zeta, term_gamma, at)


def tail_bound_report(x_from: Scalar) -> TailBoundReport:
    """Bound terms at x_from, certified to bound x^3 (log theta)''(x) for every x >= x_from."""
    breakdown = three_term_bound(x_from)
    at = breakdown.at_x
    root = f0_prime_root(at.prec)
    # f0 falls right of its derivative's larger root; sqrt(1 + 1.5/2^x) and f1 always fall
    monotone = root.compare(at) is Comparison.LESS and F1_DISCRIMINANT < 0
    certified = monotone and breakdown.total.is_negative()
    discrepancy = breakdown.total - PRINTED_TOTAL_AT_6 if at.contains(6) else None
    if discrepancy is not None and not discrepancy.contains_zero():
        logger.warning(
            f"three-term total at 6 is {breakdown.total.to_decimal(8)}, "
            f"printed value {PRINTED_TOTAL_AT_6}"
        )
    logger.info(f"tail bound from {at.to_decimal(8)}: total {breakdown.total.upper_decimal(8)}")
    return TailBoundReport(
        breakdown=breakdown,
        f0_root=root,
        f1_discriminant=F1_DISCRIMINANT,
        monotone=monotone,
        certified=certified,
        discrepancy=discrepancy,
    )


# --------------------------------------------------------------------------- #
# Higher derivatives
# --------------------------------------------------------------------------- #


def loggamma_over_x_bound(x: Scalar, k: int) -> Ball:
    """Upper bound on (-1)^k (log Gamma(x) / x)^(k).

    k!/x^(k+1) (-x/k - log x/2 + log(2 pi)/2 + H_k/2 + (k+1)/(12x)).
    """
    at = as_ball(x, _prec())
    _check_positive(at, "loggamma_over_x_bound")
    if k < 2:
        raise DomainViolation(f"loggamma_over_x_bound needs k >= 2, got {k}")
    h = Ball.exact(harmonic(k), at.prec)
    inner = -at / k + (log_2pi_ball(at.prec) - log(at) + h) / 2 + (k + 1) / (12 * at)
    return math.factorial(k) * inner / at.pow_int(k + 1)


def zeta_term_bound(x: Scalar, k: int) -> Ball:
    """1.5 e sum_{j<=k} (sqrt(2) x)^j / 2^x."""
    at = as_ball(x, _prec())
    _check_positive(at, "zeta_term_bound")
    base = sqrt(Ball.exact(2, at.prec)) * at
    total = Ball.exact(0, at.prec)
    power = Ball.exact(1, at.prec)
    for _ in range(k + 1):
        total = total + power
        power = power * base
    e = exp(Ball.exact(1, at.prec))
    return Fraction(3, 2) * e * total / two_pow(at)


def threshold_bound(k: int, x: Scalar) -> Ball:
    """Upper bound on (-1)^k x^(k+1) (log theta)^(k)(x) / k!: f(k, x) plus the zeta term."""
    at = as_ball(x, _prec())
    return f_kx(k, at) + zeta_term_bound(at, k)


def _chain_bound(x: int, prec: int) -> Ball | None:
    if x < 6:
        return None
    report = tail_bound_report(Ball.exact(x, prec))
    return report.breakdown.total / 2 if report.certified else None


def kth_sign_threshold(k: int, cap: int | None = None) -> ThresholdCertificate:
    """Smallest integer X(k) from which the combined bound is certified negative."""
    if k < 2:
        raise DomainViolation(f"kth_sign_threshold needs k >= 2, got {k}")
    cap = cap or get_settings().threshold_cap
    prec = _prec()
    ln2 = log2_ball(prec)
    zeta_from = k / ln2
    start = max(k + 1, math.ceil(k / math.log(2)))
    # the zeta term decreases once x > k / log 2
    while zeta_from.compare(Ball.exact(start, prec)) is not Comparison.LESS:
        start += 1
    disc = f_kx_discriminant(k)

    evaluations = 0
    for x in range(start, cap + 1):
        evaluations += 1
        bound = threshold_bound(k, Ball.exact(x, prec))
        method = "f_kx+zeta_term"
        if k == 2:
            chain = _chain_bound(x, prec)
            if chain is not None and (chain.upper_fraction() < bound.upper_fraction()):
                bound, method = chain, "second_derivative_chain"
        if bound.is_negative() and disc < 0:
            logger.info(f"X({k}) = {x} via {method}")
            return ThresholdCertificate(
                k=k,
                threshold=x,
                bound=bound,
                method=method,
                zeta_decreasing_from=zeta_from,
                f_partial_discriminant=disc,
                loggamma_part=loggamma_over_x_bound(Ball.exact(x, prec), k),
                evaluations=evaluations,
            )
    raise SearchExhausted(f"no threshold for k={k} up to {cap}")
