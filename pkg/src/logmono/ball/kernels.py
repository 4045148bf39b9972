# Fixed-Point Kernels
# Directed bounds for exp, log, ln 2 and pi on big integers scaled by 2^w
#
# Every kernel returns an integer bound on value * 2^w: `lower=True` gives a
# value <= the exact one, `lower=False` a value >= it. Series are summed with
# floored terms for lower bounds and ceiled terms plus a tail for upper bounds.

import math
from functools import lru_cache

from mpmath.libmp import (
    fone,
    fzero,
    from_man_exp,
    mpf_sqrt,
    round_ceiling,
    round_floor,
    to_float,
)

from ..exceptions import DomainViolation

MPF = tuple[int, int, int, int]

EXP_HALVINGS = 8
EXP_MAX_MAGNITUDE_BITS = 40


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _ceil_shift(a: int, n: int) -> int:
    return -((-a) >> n)


@lru_cache(maxsize=128)
def ln2_fixed(w: int) -> tuple[int, int]:
    """Bounds on ln(2) * 2^w from ln 2 = 2 atanh(1/3)."""
    num = 1 << (w + 1)
    lo = hi = 0
    k = 0
    power = 3
    while True:
        q, r = divmod(num, (2 * k + 1) * power)
        if q == 0:
            break
        lo += q
        hi += q + (1 if r else 0)
        k += 1
        power *= 9
    # the dropped tail is below 9/8 of one unit
    return lo, hi + 2


def _atan_inv_fixed(m: int, w: int) -> tuple[int, int]:
    """Bounds on atan(1/m) * 2^w for an integer m >= 2 (alternating series)."""
    one = 1 << w
    lo = hi = 0
    k = 0
    power = m
    while True:
        q, r = divmod(one, (2 * k + 1) * power)
        if q == 0:
            break
        up = q + (1 if r else 0)
        if k % 2 == 0:
            lo += q
            hi += up
        else:
            lo -= up
            hi -= q
        k += 1
        power *= m * m
    return lo - 1, hi + 1


@lru_cache(maxsize=128)
def pi_fixed(w: int) -> tuple[int, int]:
    """Bounds on pi * 2^w from Machin's formula 16 atan(1/5) - 4 atan(1/239)."""
    lo5, hi5 = _atan_inv_fixed(5, w)
    lo239, hi239 = _atan_inv_fixed(239, w)
    return 16 * lo5 - 4 * hi239, 16 * hi5 - 4 * lo239


def exp_fixed(r: int, w: int, lower: bool) -> int:
    """Bound on exp(r / 2^w) * 2^w for |r / 2^w| below one."""
    if r < 0:
        inv = exp_fixed(-r, w, not lower)
        one2 = 1 << (2 * w)
        return one2 // inv if lower else _ceil_div(one2, inv)
    w2 = w + EXP_HALVINGS + 4
    x = r << (w2 - w - EXP_HALVINGS)
    one = 1 << w2
    total = term = one
    k = 1
    if lower:
        while True:
            term = (term * x) // (k << w2)
            if term == 0:
                break
            total += term
            k += 1
        for _ in range(EXP_HALVINGS):
            total = (total * total) >> w2
        return total >> (w2 - w)
    while True:
        term = _ceil_div(term * x, k << w2)
        total += term
        if term <= 1:
            total += 2 * term
            break
        k += 1
    for _ in range(EXP_HALVINGS):
        total = _ceil_shift(total * total, w2)
    return _ceil_shift(total, w2 - w)


def atanh_fixed(z: int, w: int, lower: bool) -> int:
    """Bound on atanh(z / 2^w) * 2^w for |z / 2^w| well below one."""
    if z < 0:
        return -atanh_fixed(-z, w, not lower)
    z2 = z * z
    shift = 2 * w
    total = power = z
    k = 1
    while True:
        if lower:
            power = (power * z2) >> shift
            if power == 0:
                return total
            total += power // (2 * k + 1)
        else:
            power = _ceil_shift(power * z2, shift)
            total += _ceil_div(power, 2 * k + 1)
            if power <= 1:
                return total + 2 * power
        k += 1


def _signed_parts(x: MPF) -> tuple[int, int, int]:
    sign, man, exp, bc = x
    return (-man if sign else man), exp, bc


def exp_bound(x: MPF, prec: int, lower: bool) -> MPF:
    """Lower or upper bound on exp(x), good to about prec bits."""
    if x == fzero:
        return fone
    man, exp, bc = _signed_parts(x)
    if bc + exp > EXP_MAX_MAGNITUDE_BITS:
        raise DomainViolation("exp argument too large")
    w = prec + 24
    n = int(round(to_float(x) / math.log(2)))
    big_w = w + n.bit_length() + 4
    shift = exp + big_w
    if shift >= 0:
        t_lo = t_hi = man << shift
    else:
        t_lo = man >> -shift
        t_hi = _ceil_shift(man, -shift)
    l_lo, l_hi = ln2_fixed(big_w)
    if n >= 0:
        r = t_lo - n * l_hi if lower else t_hi - n * l_lo
    else:
        r = t_lo - n * l_lo if lower else t_hi - n * l_hi
    value = exp_fixed(r, big_w, lower)
    return from_man_exp(value, n - big_w, prec, round_floor if lower else round_ceiling)


def log_bound(x: MPF, prec: int, lower: bool) -> MPF:
    """Lower or upper bound on log(x) for x > 0, good to about prec bits."""
    sign, man, exp, bc = x
    if sign or not man:
        raise DomainViolation("log needs a positive argument")
    # x = (man / 2^c) 2^e0 with man / 2^c in [1/sqrt 2, sqrt 2)
    c = bc - 1 if 2 * man * man < 1 << (2 * bc) else bc
    e0 = exp + c
    d = man - (1 << c)
    if d == 0 and e0 == 0:
        return fzero
    extra = max(0, c - d.bit_length()) if e0 == 0 else 0
    big_w = prec + 24 + extra + abs(e0).bit_length() + 4
    num = d << big_w
    den = man + (1 << c)
    z = num // den if lower else _ceil_div(num, den)
    a = atanh_fixed(z, big_w, lower)
    l_lo, l_hi = ln2_fixed(big_w)
    if e0 >= 0:
        total = 2 * a + e0 * (l_lo if lower else l_hi)
    else:
        total = 2 * a + e0 * (l_hi if lower else l_lo)
    return from_man_exp(total, -big_w, prec, round_floor if lower else round_ceiling)


def sqrt_bound(x: MPF, prec: int, lower: bool) -> MPF:
    """Directed square root from an integer square root."""
    if x[0]:
        raise DomainViolation("sqrt needs a nonnegative argument")
    return mpf_sqrt(x, prec, round_floor if lower else round_ceiling)
