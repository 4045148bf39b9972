# Log-Gamma Enclosures
# Two-sided Stirling band (and the full Stirling series) shifted through Gamma(x+1) = x Gamma(x)

import math
from enum import Enum
from fractions import Fraction

from mpmath.libmp import fzero, mpf_gt

from ..ball import Ball, log, log_2pi_ball
from ..config import get_settings
from ..exactnum import bernoulli_even
from ..exceptions import DomainViolation


class LogGammaMethod(Enum):
    """How log Gamma is enclosed at the shifted point."""

    BAND = "band"
    SERIES = "series"


def _check_positive(x: Ball, what: str) -> None:
    if not mpf_gt(x.lower, fzero):
        raise DomainViolation(f"{what} needs inf(x) > 0, got {x.to_decimal(10)}")


def stirling_main(y: Ball, j: int = 0) -> Ball:
    """j-th derivative of S(y) = (y - 1/2) log y - y + log sqrt(2 pi)."""
    if j == 0:
        return (y - Fraction(1, 2)) * log(y) - y + log_2pi_ball(y.prec) / 2
    if j == 1:
        return log(y) - (2 * y).reciprocal()
    value = math.factorial(j - 2) / y.pow_int(j - 1) + math.factorial(j - 1) / (2 * y.pow_int(j))
    return value if j % 2 == 0 else -value


def stirling_band(y: Ball, j: int = 0) -> Ball:
    """(log Gamma)^(j)(y) lies in S^(j)(y) + (-1)^j [0, j!/(12 y^(j+1))]."""
    _check_positive(y, "stirling_band")
    main = stirling_main(y, j)
    width = math.factorial(j) / (12 * y.pow_int(j + 1))
    if j % 2 == 0:
        return Ball.from_endpoints(main.lower, (main + width).upper, y.prec)
    return Ball.from_endpoints((main - width).lower, main.upper, y.prec)


def _rising(s: int, j: int) -> int:
    out = 1
    for i in range(j):
        out *= s + i
    return out


def stirling_series(y: Ball, j: int = 0) -> Ball:
    """(log Gamma)^(j)(y) from the Stirling series, remainder bounded by the first dropped term.

    Terms are added until the dropped one falls below 2^-(prec+8) or starts to grow.
    """
    _check_positive(y, "stirling_series")
    target = Fraction(1, 1 << (y.prec + 8))
    total = stirling_main(y, j)
    sign = -1 if j % 2 else 1

    def term(k: int) -> Ball:
        # d^j/dy^j of B_2k / (2k (2k-1) y^(2k-1))
        coeff = bernoulli_even(k) / (2 * k * (2 * k - 1)) * sign * _rising(2 * k - 1, j)
        return Ball.exact(coeff, y.prec) / y.pow_int(2 * k - 1 + j)

    k = 1
    previous: Fraction | None = None
    while True:
        current = term(k)
        bound = abs(current).upper_fraction()
        if bound < target or (previous is not None and bound > previous) or k > 4 * y.prec:
            return total + Ball.from_interval(-bound, bound, y.prec)
        total = total + current
        previous = bound
        k += 1


def _default_shift() -> int:
    return get_settings().loggamma_shift


def _series_shift(x: Ball) -> int:
    target = max(get_settings().series_min_argument, x.prec // 4)
    low = x.lower_fraction()
    return int(max(0, math.ceil(target - low)))


def _log_rising(x: Ball, m: int) -> Ball:
    # log(x (x+1) ... (x+m-1)) as a sum of logs
    total = Ball.exact(0, x.prec)
    for i in range(m):
        total = total + log(x + i)
    return total


def loggamma_enclosure(
    x: Ball, shift: int | None = None, method: LogGammaMethod = LogGammaMethod.BAND
) -> Ball:
    """log Gamma(x) = log Gamma(x + m) - log(x (x+1) ... (x+m-1)) for inf(x) > 0."""
    _check_positive(x, "loggamma_enclosure")
    if method is LogGammaMethod.SERIES:
        m = _series_shift(x) if shift is None else shift
        at_shift = stirling_series(x + m, 0)
    else:
        m = _default_shift() if shift is None else shift
        at_shift = stirling_band(x + m, 0)
    if m == 0:
        return at_shift
    return at_shift - _log_rising(x, m)


def loggamma_deriv_enclosure(
    x: Ball, j: int, shift: int | None = None, method: LogGammaMethod = LogGammaMethod.BAND
) -> Ball:
    """(log Gamma)^(j)(x) = (log Gamma)^(j)(x + m) - sum_{i<m} (-1)^(j-1) (j-1)! / (x+i)^j."""
    if j < 1:
        raise DomainViolation(f"derivative order must be >= 1, got {j}")
    _check_positive(x, "loggamma_deriv_enclosure")
    if method is LogGammaMethod.SERIES:
        m = _series_shift(x) if shift is None else shift
        value = stirling_series(x + m, j)
    else:
        m = _default_shift() if shift is None else shift
        value = stirling_band(x + m, j)
    correction = Ball.exact(0, x.prec)
    for i in range(m):
        correction = correction + (x + i).pow_int(j).reciprocal()
    correction = math.factorial(j - 1) * correction
    return value - correction if j % 2 == 1 else value + correction


def loggamma_derivs(
    x: Ball, j_max: int, shift: int | None = None, method: LogGammaMethod = LogGammaMethod.BAND
) -> list[Ball]:
    """[log Gamma(x), (log Gamma)'(x), ..., (log Gamma)^(j_max)(x)]."""
    out = [loggamma_enclosure(x, shift, method)]
    out.extend(loggamma_deriv_enclosure(x, j, shift, method) for j in range(1, j_max + 1))
    return out


def alzer_band_values(
    x: Ball, method: LogGammaMethod = LogGammaMethod.SERIES
) -> tuple[Ball, Ball]:
    """(G0(x), F0(x)) with G0 = S(x) + 1/(12x) - log Gamma(x) and F0 = log Gamma(x) - S(x)."""
    _check_positive(x, "alzer_band_values")
    lg = loggamma_enclosure(x, method=method)
    main = stirling_main(x, 0)
    g0 = main + (12 * x).reciprocal() - lg
    f0 = lg - main
    return g0, f0
