# Tangent Interpolation
# t(x) = 2 zeta(2x) Gamma(2x+1) (4^x - 1) 4^x / ((2 pi)^(2x) 2x), which meets T(n) at integers

import math
from enum import Enum
from fractions import Fraction

from loguru import logger
from mpmath import mp

from ..ball import Ball, Comparison, as_ball, euler_gamma_ball, exp, log, log2_ball, log_2pi_ball
from ..config import get_settings
from ..exceptions import DomainViolation
from ..special import LogGammaMethod, log_zeta_derivs, loggamma_derivs
from .base import SignedEnclosure, SignFlag
from .theta import over_x_deriv, require_above

ORACLE_PREC = 512


class TangentVariant(Enum):
    """Which function of t(x) has its derivative sign checked."""

    T = "t"
    INV_XTH_ROOT_T = "inv_xth_root_t"


def _log4(prec: int) -> Ball:
    return 2 * log2_ball(prec)


def log_4x_minus_one(x: Ball) -> Ball:
    """log(4^x - 1) = x log 4 + log(1 - 4^-x)."""
    if not x.is_positive():
        raise DomainViolation(f"log(4^x - 1) needs inf(x) > 0, got {x.to_decimal(10)}")
    ln4 = _log4(x.prec)
    return x * ln4 + log(1 - exp(-x * ln4))


def log_4x_deriv_enclosure(x: Ball, k: int) -> Ball:
    """(log(4^x - 1))^(k) = [k = 1] log 4 - (-log 4)^k sum_m m^(k-1) 4^(-mx).

    The sum stops once successive term ratios are at most 1/2 and the next term is
    negligible; the remainder is then below twice that term.
    """
    if k < 1:
        raise DomainViolation(f"derivative order must be >= 1, got {k}")
    if not x.is_positive():
        raise DomainViolation(f"log(4^x - 1) needs inf(x) > 0, got {x.to_decimal(10)}")
    prec = x.prec
    ln4 = _log4(prec)
    q = exp(-x * ln4)
    q_hi = q.upper_fraction()
    target = Fraction(1, 1 << (prec + 8))

    total = Ball.exact(0, prec)
    q_power = q
    m = 1
    first: Fraction | None = None
    while True:
        term = m ** (k - 1) * q_power
        total = total + term
        bound = term.upper_fraction()
        first = first if first is not None else bound
        ratio = Fraction(m + 1, m) ** (k - 1) * q_hi
        next_bound = ratio * bound
        if ratio <= Fraction(1, 2) and next_bound <= target * first:
            total = total + Ball.from_interval(0, 2 * next_bound, prec)
            break
        m += 1
        q_power = q_power * q
    value = -((-ln4).pow_int(k)) * total
    return value + ln4 if k == 1 else value


def log_4x_deriv_bound(x: Ball | int | Fraction, k: int) -> Ball:
    """sum_{i<=k} (log 4)^k (k-1)! / (4^x - 1)^i, a cap on |(log(4^x - 1))^(k)|."""
    at = as_ball(x, get_settings().precision)
    if not at.is_positive():
        raise DomainViolation(f"log_4x_deriv_bound needs inf(x) > 0, got {at.to_decimal(10)}")
    if k < 1:
        raise DomainViolation(f"derivative order must be >= 1, got {k}")
    ln4 = _log4(at.prec)
    d = exp(at * ln4) - 1
    total = Ball.exact(0, at.prec)
    for i in range(1, k + 1):
        total = total + d.pow_int(i).reciprocal()
    return ln4.pow_int(k) * math.factorial(k - 1) * total


def log_4x_deriv_estimate(x: float | Fraction | str, k: int) -> mp.mpf:
    """Numerical (log(4^x - 1))^(k) from mpmath differentiation at 512 bits; not an enclosure."""
    with mp.workprec(ORACLE_PREC):
        point = mp.mpf(Fraction(x).numerator) / Fraction(x).denominator
        return mp.diff(lambda t: mp.log(mp.power(4, t) - 1), point, k)


def _log_t_derivs(x: Ball, k: int, method: LogGammaMethod) -> list[Ball]:
    """[(log t)^(j)(x) for j = 0..k]."""
    prec = x.prec
    two_x = 2 * x
    lz = log_zeta_derivs(two_x, k)
    lg = loggamma_derivs(two_x, k, method=method)
    ln4 = _log4(prec)
    log_2pi = log_2pi_ball(prec)
    out = [
        log2_ball(prec) + lz[0] + lg[0] - two_x * log_2pi + log_4x_minus_one(x) + x * ln4
    ]
    for j in range(1, k + 1):
        value = 2**j * (lz[j] + lg[j]) + log_4x_deriv_enclosure(x, j)
        if j == 1:
            value = value + ln4 - 2 * log_2pi
        out.append(value)
    return out


def log_tangent_interp(x: Ball) -> Ball:
    """log t(x) for inf(x) >= 1."""
    if x.lower_fraction() < 1:
        raise DomainViolation(f"tangent_interp needs inf(x) >= 1, got {x.to_decimal(10)}")
    return _log_t_derivs(x, 0, LogGammaMethod.BAND)[0]


def tangent_interp(x: Ball | int | Fraction) -> Ball:
    """Enclosure of t(x); t(n) contains the tangent number T(n)."""
    at = as_ball(x, get_settings().precision)
    return exp(log_tangent_interp(at))


def _signed_value(variant: TangentVariant, x: Ball, k: int, method: LogGammaMethod) -> Ball:
    derivs = _log_t_derivs(x, k, method)
    if variant is TangentVariant.T:
        value = derivs[k]
    else:
        value = -over_x_deriv(derivs, x, k)
    return -value if k % 2 else value


def kth_sign_tangent(
    variant: TangentVariant | str, x: Ball | int | Fraction, k: int
) -> SignedEnclosure:
    """(-1)^k (log t)^(k)(x), or the same for t^(-1/x), with its certified sign.

    Needs inf(x) > k + 3 and x > log k + gamma. The precision ladder is climbed
    until the sign is decided; at the ceiling the flag is UNDECIDED.
    """
    key = TangentVariant(variant)
    if k < 2:
        raise DomainViolation(f"kth_sign_tangent needs k >= 2, got {k}")
    settings = get_settings()
    at = as_ball(x, settings.precision)
    require_above(at, k + 3, "kth_sign_tangent")
    gamma_floor = log(Ball.exact(k, at.prec)) + euler_gamma_ball(at.prec)
    if at.compare(gamma_floor) is not Comparison.GREATER:
        raise DomainViolation(f"kth_sign_tangent needs x > log k + gamma, got {at.to_decimal(10)}")

    value = at
    prec = at.prec
    for rung, prec in enumerate(settings.precision_ladder(at.prec)):
        method = LogGammaMethod.BAND if rung == 0 else LogGammaMethod.SERIES
        value = _signed_value(key, at.with_prec(prec), k, method)
        flag = SignFlag.of(value)
        if flag is not SignFlag.UNDECIDED:
            return SignedEnclosure(value, flag, prec, note=key.value)
        logger.debug(f"{key.value} k={k} undecided at {prec} bits, escalating")
    logger.warning(f"sign of {key.value} k={k} at {at.to_decimal(10)} undecided at the precision cap")
    return SignedEnclosure(value, SignFlag.UNDECIDED, prec, note=key.value)
