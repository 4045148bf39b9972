# Zeta Enclosures
# Dirichlet partial sums with integral-test tails for zeta and its derivatives

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath.libmp import fone, mpf_gt

from ..ball import Ball, exp, log, pi_ball
from ..config import get_settings
from ..exactnum import bernoulli_even, binomial
from ..exceptions import ConfigurationError, DomainViolation


@dataclass(frozen=True)
class ZetaEnclosureParams:
    """Truncation point N and working precision for the Dirichlet series.

    ``None`` picks the defaults: N from ``default_terms`` and the precision
    of the argument ball.
    """

    partial_terms: int | None = None
    precision: int | None = None

    def __post_init__(self) -> None:
        if self.partial_terms is not None and self.partial_terms < 2:
            raise ConfigurationError(f"partial_terms must be >= 2, got {self.partial_terms}")
        if self.precision is not None and self.precision < 16:
            raise ConfigurationError(f"precision must be >= 16, got {self.precision}")


@lru_cache(maxsize=8192)
def log_int(n: int, prec: int) -> Ball:
    """Cached enclosure of log n."""
    return log(Ball.exact(n, prec))


def default_terms(x: Ball, j: int = 0) -> int:
    """N = max(min(ceil(sup x), zeta_max_terms), 16, ceil(e^j) + 2)."""
    upper = x.upper_fraction()
    sup = -(-upper.numerator // upper.denominator)
    cap = get_settings().zeta_max_terms
    return int(max(min(sup, cap), 16, math.ceil(math.exp(j)) + 2))


def _prepare(x: Ball, params: ZetaEnclosureParams | None) -> tuple[Ball, ZetaEnclosureParams]:
    params = params or ZetaEnclosureParams()
    if params.precision is not None:
        x = x.with_prec(params.precision)
    if not mpf_gt(x.lower, fone):
        raise DomainViolation(f"zeta needs inf(x) > 1, got {x.to_decimal(10)}")
    return x, params


def _zeta_tail(x: Ball, n_terms: int) -> Ball:
    """sum_{n >= N} n^-x lies in [N^(1-x)/(x-1), N^-x + N^(1-x)/(x-1)]."""
    log_n = log_int(n_terms, x.prec)
    low = exp((1 - x) * log_n) / (x - 1)
    high = exp(-x * log_n) + low
    return Ball.from_endpoints(low.lower, high.upper, x.prec)


def _incomplete_tail(x: Ball, j: int, m: int) -> Ball:
    """Integral of (log t)^j t^-x over [m, inf): j! e^-a sum_{i<=j} a^i/i! / (x-1)^(j+1)."""
    xm1 = x - 1
    a = xm1 * log_int(m, x.prec)
    poly = Ball.exact(1, x.prec)
    term = Ball.exact(1, x.prec)
    for i in range(1, j + 1):
        term = term * a / i
        poly = poly + term
    return math.factorial(j) * exp(-a) * poly / xm1.pow_int(j + 1)


def _deriv_tail(x: Ball, j: int, n_terms: int) -> Ball:
    """(-1)^j sum_{n >= N} (log n)^j n^-x, bracketed by the integrals from N and N - 1."""
    low = _incomplete_tail(x, j, n_terms)
    high = _incomplete_tail(x, j, n_terms - 1)
    tail = Ball.from_endpoints(low.lower, high.upper, x.prec)
    return tail if j % 2 == 0 else -tail


def zeta_enclosure(x: Ball, params: ZetaEnclosureParams | None = None) -> Ball:
    """Enclosure of zeta(x) for inf(x) > 1."""
    x, params = _prepare(x, params)
    n_terms = params.partial_terms or default_terms(x)
    total = Ball.exact(1, x.prec)
    for n in range(2, n_terms):
        total = total + exp(-x * log_int(n, x.prec))
    return total + _zeta_tail(x, n_terms)


def zeta_derivs(x: Ball, j_max: int, params: ZetaEnclosureParams | None = None) -> list[Ball]:
    """Enclosures of zeta^(j)(x) for j = 0..j_max, sharing one truncation point."""
    if j_max < 0:
        raise DomainViolation(f"derivative order must be nonnegative, got {j_max}")
    x, params = _prepare(x, params)
    n_terms = params.partial_terms or default_terms(x, j_max)
    if n_terms - 1 < math.exp(j_max):
        raise ConfigurationError(
            f"N = {n_terms} is too small for order {j_max}; need N - 1 >= e^{j_max}"
        )
    sums = [Ball.exact(0, x.prec) for _ in range(j_max + 1)]
    sums[0] = Ball.exact(1, x.prec)
    for n in range(2, n_terms):
        log_n = log_int(n, x.prec)
        term = exp(-x * log_n)
        for j in range(j_max + 1):
            sums[j] = sums[j] + term
            term = -term * log_n
    result = [sums[0] + _zeta_tail(x, n_terms)]
    result.extend(sums[j] + _deriv_tail(x, j, n_terms) for j in range(1, j_max + 1))
    return result


def zeta_deriv_enclosure(
    x: Ball, j: int, params: ZetaEnclosureParams | None = None
) -> Ball:
    """Enclosure of zeta^(j)(x) = sum_{n>=2} (-log n)^j n^-x for j >= 1."""
    if j == 0:
        return zeta_enclosure(x, params)
    return zeta_derivs(x, j, params)[j]


def log_zeta_derivs(x: Ball, j_max: int, params: ZetaEnclosureParams | None = None) -> list[Ball]:
    """Enclosures of (log zeta)^(j)(x) for j = 0..j_max.

    With u = zeta'/zeta, zeta^(n+1) = sum_{i<=n} C(n, i) u^(i) zeta^(n-i), solved
    for u^(n) one order at a time; (log zeta)^(j) = u^(j-1).
    """
    z = zeta_derivs(x, j_max, params)
    out = [log(z[0])]
    u: list[Ball] = []
    for n in range(j_max):
        acc = z[n + 1]
        for i in range(n):
            acc = acc - binomial(n, i) * u[i] * z[n - i]
        u.append(acc / z[0])
    out.extend(u)
    return out


def zeta_even_exact(n: int, prec: int | None = None) -> Ball:
    """zeta(2n) = 2^(2n-1) pi^(2n) |B_2n| / (2n)!."""
    if n < 1:
        raise DomainViolation(f"zeta_even_exact needs n >= 1, got {n}")
    prec = prec or get_settings().precision
    coefficient = Fraction(2 ** (2 * n - 1), math.factorial(2 * n)) * abs(bernoulli_even(n))
    return Ball.exact(coefficient, prec) * pi_ball(prec).pow_int(2 * n)
