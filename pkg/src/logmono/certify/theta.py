# Theta Enclosures
# log theta(x) = (log 2 + log zeta(x) + log Gamma(x + 1)) / x and its derivatives

import math
from fractions import Fraction

from loguru import logger
from mpmath.libmp import from_int, mpf_gt

from ..ball import Ball, exp, log, log2_ball
from ..config import get_settings
from ..exactnum import binomial, harmonic
from ..exceptions import DomainViolation, PrecisionExhausted
from ..special import LogGammaMethod, log_zeta_derivs, loggamma_derivs
from .base import BoundBreakdown, SignedEnclosure, SignFlag


def require_above(x: Ball, bound: int | Fraction, what: str) -> None:
    """Raise DomainViolation unless inf(x) > bound."""
    if isinstance(bound, int):
        ok = mpf_gt(x.lower, from_int(bound))
    else:
        ok = x.lower_fraction() > bound
    if not ok:
        raise DomainViolation(f"{what} needs inf(x) > {bound}, got {x.to_decimal(10)}")


def inv_x_deriv(x: Ball, m: int) -> Ball:
    """(1/x)^(m) = (-1)^m m! / x^(m+1)."""
    value = math.factorial(m) / x.pow_int(m + 1)
    return -value if m % 2 else value


def over_x_deriv(g: list[Ball], x: Ball, k: int) -> Ball:
    """(g/x)^(k) by Leibniz from g, g', ..., g^(k)."""
    total = Ball.exact(0, x.prec)
    for j in range(k + 1):
        total = total + binomial(k, j) * g[j] * inv_x_deriv(x, k - j)
    return total


def log_x_derivs(x: Ball, k: int) -> list[Ball]:
    """[log x, 1/x, -1/x^2, ...]: (log x)^(j) = (-1)^(j-1) (j-1)! / x^j."""
    out = [log(x)]
    for j in range(1, k + 1):
        value = math.factorial(j - 1) / x.pow_int(j)
        out.append(value if j % 2 else -value)
    return out


def log_theta(x: Ball) -> Ball:
    """Enclosure of log theta(x) for inf(x) > 2."""
    require_above(x, 2, "log_theta")
    lz = log_zeta_derivs(x, 0)[0]
    lg = loggamma_derivs(x, 0)[0]
    return (log2_ball(x.prec) + lz + log(x) + lg) / x


def theta(x: Ball) -> Ball:
    """theta(x) = (2 zeta(x) Gamma(x + 1))^(1/x)."""
    return exp(log_theta(x))


def d2_log_theta(x: Ball) -> BoundBreakdown:
    """(log theta)''(x) split as (log 2/x)'' + (log zeta/x)'' + (log Gamma(x+1)/x)''."""
    require_above(x, 3, "d2_log_theta")
    term_log2 = 2 * log2_ball(x.prec) / x.pow_int(3)
    term_zeta = over_x_deriv(log_zeta_derivs(x, 2), x, 2)
    lg = loggamma_derivs(x, 2)
    lx = log_x_derivs(x, 2)
    term_gamma = over_x_deriv([lg[j] + lx[j] for j in range(3)], x, 2)
    return BoundBreakdown.assemble(term_log2, term_zeta, term_gamma, x)


def logx_over_x_deriv(x: Ball, j: int) -> Ball:
    """(log x / x)^(j) = (-1)^(j-1) j! (H_j - log x) / x^(j+1)."""
    if j < 1:
        raise DomainViolation(f"derivative order must be >= 1, got {j}")
    if not x.is_positive():
        raise DomainViolation(f"logx_over_x_deriv needs inf(x) > 0, got {x.to_decimal(10)}")
    value = math.factorial(j) * (Ball.exact(harmonic(j), x.prec) - log(x)) / x.pow_int(j + 1)
    return value if j % 2 else -value


def _kth_at(x: Ball, k: int, method: LogGammaMethod) -> Ball:
    lz = log_zeta_derivs(x, k)
    lg = loggamma_derivs(x, k, method=method)
    lx = log_x_derivs(x, k)
    g = [lz[j] + lg[j] + lx[j] for j in range(k + 1)]
    g[0] = g[0] + log2_ball(x.prec)
    return over_x_deriv(g, x, k)


def kth_deriv_log_theta(x: Ball, k: int, require_sign: bool = False) -> Ball:
    """Enclosure of (log theta)^(k)(x) for inf(x) > k + 3.

    With ``require_sign`` the evaluation climbs the precision ladder (switching
    log Gamma to the Stirling series after the first rung) until the ball is
    sign-definite, and raises PrecisionExhausted at the ceiling.
    """
    if k < 2:
        raise DomainViolation(f"kth_deriv_log_theta needs k >= 2, got {k}")
    require_above(x, k + 3, "kth_deriv_log_theta")
    if not require_sign:
        return _kth_at(x, k, LogGammaMethod.BAND)

    value = None
    for rung, prec in enumerate(get_settings().precision_ladder(x.prec)):
        method = LogGammaMethod.BAND if rung == 0 else LogGammaMethod.SERIES
        value = _kth_at(x.with_prec(prec), k, method)
        if not value.contains_zero():
            return value
        logger.debug(f"(log theta)^({k}) undecided at {prec} bits, escalating")
    raise PrecisionExhausted(
        f"sign of (log theta)^({k}) at {x.to_decimal(10)} undecided at the precision cap: {value}"
    )


def inv_theta_deriv_sign(x: Ball, k: int) -> SignedEnclosure:
    """(-1)^k (log y)^(k)(x) for y(x) = 4 pi^2 theta(2x)^-2, i.e. -2 (-2)^k (log theta)^(k)(2x)."""
    if k < 1:
        raise DomainViolation(f"derivative order must be >= 1, got {k}")
    two_x = 2 * x
    inner = kth_deriv_log_theta(two_x, k, require_sign=True) if k >= 2 else _first_deriv(two_x)
    value = -2 * (-2) ** k * inner
    return SignedEnclosure(value, SignFlag.of(value), value.prec, note=f"k={k}")


def _first_deriv(x: Ball) -> Ball:
    require_above(x, 3, "(log theta)'")
    return _kth_at(x, 1, LogGammaMethod.BAND)

