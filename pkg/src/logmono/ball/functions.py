# Elementary Functions
# Monotone endpoint evaluation of exp, log, sqrt and real powers

from enum import Enum

from mpmath.libmp import mpf_add, mpf_le, mpf_lt, mpf_sub, round_ceiling, round_floor, fzero

from ..exceptions import DomainViolation
from .core import GUARD_BITS, MPF, Ball
from .kernels import exp_bound, log_bound, sqrt_bound


class ElemFn(Enum):
    """Elementary functions available through ``elem``."""

    LOG = "log"
    EXP = "exp"
    SQRT = "sqrt"
    POW_REAL = "pow_real"


def _outer_endpoints(a: Ball, wp: int) -> tuple[MPF, MPF]:
    return (
        mpf_sub(a.mid, a.rad, wp, round_floor),
        mpf_add(a.mid, a.rad, wp, round_ceiling),
    )


def exp(a: Ball) -> Ball:
    wp = a.prec + GUARD_BITS
    lo, hi = _outer_endpoints(a, wp)
    return Ball.from_endpoints(exp_bound(lo, wp, True), exp_bound(hi, wp, False), a.prec)


def log(a: Ball) -> Ball:
    wp = a.prec + GUARD_BITS
    lo, hi = _outer_endpoints(a, wp)
    if mpf_le(lo, fzero):
        raise DomainViolation(f"log needs a positive ball, got {a.to_decimal(10)}")
    return Ball.from_endpoints(log_bound(lo, wp, True), log_bound(hi, wp, False), a.prec)


def sqrt(a: Ball) -> Ball:
    wp = a.prec + GUARD_BITS
    lo, hi = _outer_endpoints(a, wp)
    if mpf_lt(lo, fzero):
        raise DomainViolation(f"sqrt needs a nonnegative ball, got {a.to_decimal(10)}")
    return Ball.from_endpoints(sqrt_bound(lo, wp, True), sqrt_bound(hi, wp, False), a.prec)


def pow_real(a: Ball, b: Ball) -> Ball:
    """a ** b as exp(b log a) for a > 0."""
    if not a.is_positive():
        raise DomainViolation(f"pow_real needs a positive base, got {a.to_decimal(10)}")
    return exp(b * log(a))


def elem(fn: ElemFn, a: Ball, b: Ball | None = None) -> Ball:
    """Dispatch an elementary function by name."""
    if fn is ElemFn.POW_REAL:
        if b is None:
            raise DomainViolation("pow_real needs an exponent")
        return pow_real(a, b)
    if fn is ElemFn.LOG:
        return log(a)
    if fn is ElemFn.EXP:
        return exp(a)
    return sqrt(a)
