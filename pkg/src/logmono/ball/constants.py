# Constants
# Enclosures of pi, ln 2, log(2 pi) and Euler's gamma at any precision

from enum import Enum
from fractions import Fraction
from functools import lru_cache

from loguru import logger
from mpmath.libmp import from_man_exp

from ..exactnum import bernoulli_even
from ..exceptions import DomainViolation
from .core import GUARD_BITS, Ball
from .functions import log
from .kernels import ln2_fixed, pi_fixed

MIN_CONSTANT_PREC = 16


class Constant(Enum):
    PI = "pi"
    LOG2 = "log2"
    LOG_2PI = "log_2pi"
    EULER_GAMMA = "euler_gamma"


def _from_fixed(lo: int, hi: int, w: int, prec: int) -> Ball:
    return Ball.from_endpoints(from_man_exp(lo, -w), from_man_exp(hi, -w), prec)


@lru_cache(maxsize=64)
def pi_ball(prec: int) -> Ball:
    w = prec + GUARD_BITS
    return _from_fixed(*pi_fixed(w), w, prec)


@lru_cache(maxsize=64)
def log2_ball(prec: int) -> Ball:
    w = prec + GUARD_BITS
    return _from_fixed(*ln2_fixed(w), w, prec)


@lru_cache(maxsize=64)
def log_2pi_ball(prec: int) -> Ball:
    wp = prec + GUARD_BITS
    return log(2 * pi_ball(wp)).with_prec(prec)


@lru_cache(maxsize=32)
def euler_gamma_ball(prec: int) -> Ball:
    """gamma = H_n - log n - 1/(2n) + sum_k B_2k / (2k n^2k), with the first dropped term doubled."""
    wp = prec + GUARD_BITS
    n = max(32, prec)
    one = 1 << wp
    h_lo = sum(one // i for i in range(1, n + 1))
    h_hi = sum(-(-one // i) for i in range(1, n + 1))
    harmonic = _from_fixed(h_lo, h_hi, wp, wp)

    target = Fraction(1, 1 << (wp + 4))
    correction = Fraction(-1, 2 * n)
    k = 1
    while True:
        correction += bernoulli_even(k) / (2 * k * Fraction(n) ** (2 * k))
        k += 1
        remainder = abs(bernoulli_even(k)) / (2 * k * Fraction(n) ** (2 * k))
        if remainder < target:
            break
    logger.debug(f"Euler gamma at {prec} bits: n={n}, {k - 1} correction terms")
    value = harmonic - log(Ball.exact(n, wp)) + Ball.exact(correction, wp)
    value = value + Ball.from_interval(-2 * remainder, 2 * remainder, wp)
    return value.with_prec(prec)


def constant(name: Constant | str, prec: int) -> Ball:
    """Enclosure of a named constant with radius at most 2^(4 - prec)."""
    if prec < MIN_CONSTANT_PREC:
        raise DomainViolation(f"constants need at least {MIN_CONSTANT_PREC} bits, got {prec}")
    key = Constant(name)
    if key is Constant.PI:
        return pi_ball(prec)
    if key is Constant.LOG2:
        return log2_ball(prec)
    if key is Constant.LOG_2PI:
        return log_2pi_ball(prec)
    return euler_gamma_ball(prec)
