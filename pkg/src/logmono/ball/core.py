# Ball Arithmetic
# Midpoint-radius enclosures over mpmath raw binary floats with outward rounding

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Integral
from typing import TypeGuard, Union

from mpmath import libmp, mp
from mpmath.libmp import (
    fone,
    fzero,
    from_int,
    from_rational,
    mpf_abs,
    mpf_add,
    mpf_div,
    mpf_ge,
    mpf_gt,
    mpf_le,
    mpf_lt,
    mpf_mul,
    mpf_neg,
    mpf_pos,
    mpf_shift,
    mpf_sub,
    round_ceiling,
    round_floor,
    round_nearest,
    to_rational,
)

from ..exceptions import DivisionByEnclosedZero, DomainViolation

MPF = tuple[int, int, int, int]
Exact = Union[int, Fraction, str]

DEFAULT_PREC = 128
GUARD_BITS = 24
RAD_PREC = 30


class Comparison(Enum):
    """Outcome of comparing two enclosures."""

    LESS = "less"
    GREATER = "greater"
    OVERLAP = "overlap"


class ArithOp(Enum):
    """Arithmetic operations available through ``arith``."""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    NEG = "neg"
    ABS = "abs"
    POW = "pow"


def to_fraction(x: MPF) -> Fraction:
    """Exact rational value of a raw mpf."""
    p, q = to_rational(x)
    return Fraction(int(p), int(q))


def _is_integer(value: object) -> TypeGuard[Integral]:
    """int or another Integral such as gmpy2.mpz, but not bool."""
    return isinstance(value, Integral) and not isinstance(value, bool)


def _as_fraction(value: Exact | float) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if _is_integer(value):
        return Fraction(int(value))
    if isinstance(value, (int, str, float)):
        return Fraction(value)
    raise TypeError(f"cannot make an exact number from {type(value).__name__}")


def _rad_sum(*terms: MPF) -> MPF:
    total = fzero
    for term in terms:
        total = mpf_add(total, term, RAD_PREC, round_ceiling)
    return total


def _rad_mul(a: MPF, b: MPF) -> MPF:
    return mpf_mul(a, b, RAD_PREC, round_ceiling)


def _rounded_binary(op, s: MPF, t: MPF, prec: int) -> tuple[MPF, MPF]:  # type: ignore[no-untyped-def]
    """Round op(s, t) to prec bits; return (nearest, bound on rounding error)."""
    lo = op(s, t, prec, round_floor)
    hi = op(s, t, prec, round_ceiling)
    if lo == hi:
        return lo, fzero
    return op(s, t, prec, round_nearest), mpf_sub(hi, lo, RAD_PREC, round_ceiling)


def _rounded(x: MPF, prec: int) -> tuple[MPF, MPF]:
    lo = mpf_pos(x, prec, round_floor)
    hi = mpf_pos(x, prec, round_ceiling)
    if lo == hi:
        return lo, fzero
    return mpf_pos(x, prec, round_nearest), mpf_sub(hi, lo, RAD_PREC, round_ceiling)


def _max(a: MPF, b: MPF) -> MPF:
    return a if mpf_ge(a, b) else b


def _decimal_exponent(mag: Fraction) -> int:
    """floor(log10(mag)) for mag > 0, computed exactly."""
    e = len(str(mag.numerator)) - len(str(mag.denominator))
    while Fraction(10) ** e > mag:
        e -= 1
    while Fraction(10) ** (e + 1) <= mag:
        e += 1
    return e


def format_directed(value: Fraction, digits: int, upward: bool) -> str:
    """Decimal string with `digits` significant digits rounded toward +inf (or -inf)."""
    if value == 0:
        return "0"
    negative = value < 0
    mag = -value if negative else value
    e = _decimal_exponent(mag)
    scaled = mag / Fraction(10) ** (e - digits + 1)
    away = upward != negative
    q = -(-scaled.numerator // scaled.denominator) if away else scaled.numerator // scaled.denominator
    if q >= 10**digits:
        q //= 10
        e += 1
    text = str(q)
    mantissa = text[0] + ("." + text[1:] if len(text) > 1 else "")
    return f"{'-' if negative else ''}{mantissa}e{e:+d}"


@dataclass(frozen=True)
class Ball:
    """Enclosure [mid - rad, mid + rad] of a real number.

    ``mid`` carries ``prec`` significant bits; ``rad`` is a short upper bound
    kept at RAD_PREC bits. Every operation returns a ball containing the exact
    result for every point of its arguments.
    """

    mid: MPF
    rad: MPF = fzero
    prec: int = DEFAULT_PREC

    def __post_init__(self) -> None:
        if self.rad[0]:
            raise DomainViolation("ball radius must be nonnegative")

    # ------------------------------------------------------------------ #
    # Construction
    # ------------------------------------------------------------------ #

    @classmethod
    def exact(cls, value: Exact | float | Ball, prec: int = DEFAULT_PREC) -> Ball:
        """Smallest convenient ball around an exact int, Fraction or decimal string."""
        if isinstance(value, Ball):
            return value.with_prec(prec)
        if _is_integer(value):
            mid, err = _rounded(from_int(int(value)), prec)
            return cls(mid, err, prec)
        frac = _as_fraction(value)
        lo = from_rational(frac.numerator, frac.denominator, prec, round_floor)
        hi = from_rational(frac.numerator, frac.denominator, prec, round_ceiling)
        if lo == hi:
            return cls(lo, fzero, prec)
        return cls.from_endpoints(lo, hi, prec)

    @classmethod
    def from_interval(cls, lo: Exact | float, hi: Exact | float, prec: int = DEFAULT_PREC) -> Ball:
        """Ball covering the exact interval [lo, hi]."""
        a, b = _as_fraction(lo), _as_fraction(hi)
        if a > b:
            raise DomainViolation(f"empty interval [{a}, {b}]")
        wp = prec + GUARD_BITS
        return cls.from_endpoints(
            from_rational(a.numerator, a.denominator, wp, round_floor),
            from_rational(b.numerator, b.denominator, wp, round_ceiling),
            prec,
        )

    @classmethod
    def from_endpoints(cls, lo: MPF, hi: MPF, prec: int = DEFAULT_PREC) -> Ball:
        """Ball covering [lo, hi] for raw mpf endpoints with lo <= hi."""
        mid = mpf_shift(mpf_add(lo, hi, prec, round_nearest), -1)
        rad = _max(
            mpf_sub(hi, mid, RAD_PREC, round_ceiling),
            mpf_sub(mid, lo, RAD_PREC, round_ceiling),
        )
        return cls(mid, _max(rad, fzero), prec)

    def with_prec(self, prec: int) -> Ball:
        """Same enclosure with a new working precision."""
        if prec == self.prec:
            return self
        mid, err = _rounded(self.mid, prec)
        return Ball(mid, _rad_sum(self.rad, err), prec)

    # ------------------------------------------------------------------ #
    # Endpoints and predicates
    # ------------------------------------------------------------------ #

    @property
    def lower(self) -> MPF:
        """Exact lower endpoint."""
        return mpf_sub(self.mid, self.rad)

    @property
    def upper(self) -> MPF:
        """Exact upper endpoint."""
        return mpf_add(self.mid, self.rad)

    @property
    def mid_mpf(self) -> mp.mpf:
        return mp.make_mpf(self.mid)

    @property
    def rad_mpf(self) -> mp.mpf:
        return mp.make_mpf(self.rad)

    def lower_fraction(self) -> Fraction:
        return to_fraction(self.lower)

    def upper_fraction(self) -> Fraction:
        return to_fraction(self.upper)

    def is_exact(self) -> bool:
        return self.rad == fzero

    def is_positive(self) -> bool:
        return mpf_gt(self.lower, fzero)

    def is_negative(self) -> bool:
        return mpf_lt(self.upper, fzero)

    def contains_zero(self) -> bool:
        return not (self.is_positive() or self.is_negative())

    def sign(self) -> int:
        """1 or -1 when the sign is certain, 0 otherwise."""
        if self.is_positive():
            return 1
        if self.is_negative():
            return -1
        return 0

    def contains(self, value: Ball | Exact | float) -> bool:
        if isinstance(value, Ball):
            return mpf_le(self.lower, value.lower) and mpf_le(value.upper, self.upper)
        frac = _as_fraction(value)
        return self.lower_fraction() <= frac <= self.upper_fraction()

    def overlaps(self, other: Ball) -> bool:
        return mpf_le(self.lower, other.upper) and mpf_le(other.lower, self.upper)

    def hull(self, other: Ball) -> Ball:
        lo = self.lower if mpf_le(self.lower, other.lower) else other.lower
        hi = _max(self.upper, other.upper)
        return Ball.from_endpoints(lo, hi, max(self.prec, other.prec))

    def compare(self, other: Ball) -> Comparison:
        if mpf_lt(self.upper, other.lower):
            return Comparison.LESS
        if mpf_gt(self.lower, other.upper):
            return Comparison.GREATER
        return Comparison.OVERLAP

    # ------------------------------------------------------------------ #
    # Arithmetic
    # ------------------------------------------------------------------ #

    def _coerce(self, other: object) -> Ball | None:
        if isinstance(other, Ball):
            return other
        if isinstance(other, Fraction) or _is_integer(other):
            return Ball.exact(other, self.prec)  # type: ignore[arg-type]
        return None

    def __add__(self, other: object) -> Ball:
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        prec = max(self.prec, b.prec)
        mid, err = _rounded_binary(mpf_add, self.mid, b.mid, prec)
        return Ball(mid, _rad_sum(self.rad, b.rad, err), prec)

    __radd__ = __add__

    def __neg__(self) -> Ball:
        return Ball(mpf_neg(self.mid), self.rad, self.prec)

    def __sub__(self, other: object) -> Ball:
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        prec = max(self.prec, b.prec)
        mid, err = _rounded_binary(mpf_sub, self.mid, b.mid, prec)
        return Ball(mid, _rad_sum(self.rad, b.rad, err), prec)

    def __rsub__(self, other: object) -> Ball:
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b - self

    def __mul__(self, other: object) -> Ball:
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        prec = max(self.prec, b.prec)
        mid, err = _rounded_binary(mpf_mul, self.mid, b.mid, prec)
        rad = _rad_sum(
            _rad_mul(mpf_abs(self.mid), b.rad),
            _rad_mul(mpf_abs(b.mid), self.rad),
            _rad_mul(self.rad, b.rad),
            err,
        )
        return Ball(mid, rad, prec)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Ball:
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        prec = max(self.prec, b.prec)
        bmag = mpf_abs(b.mid)
        if mpf_le(bmag, b.rad):
            raise DivisionByEnclosedZero(f"divisor {b.to_decimal(10)} contains zero")
        m = mpf_div(self.mid, b.mid, prec, round_nearest)
        # |x/y - m| <= (|a - m b| + ra + |m| rb) / (|b| - rb)
        residual = mpf_abs(mpf_sub(self.mid, mpf_mul(m, b.mid)))
        num = _rad_sum(residual, self.rad, _rad_mul(mpf_abs(m), b.rad))
        den = mpf_sub(bmag, b.rad, RAD_PREC, round_floor)
        if num == fzero:
            return Ball(m, fzero, prec)
        return Ball(m, mpf_div(num, den, RAD_PREC, round_ceiling), prec)

    def __rtruediv__(self, other: object) -> Ball:
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b / self

    def reciprocal(self) -> Ball:
        return Ball(fone, fzero, self.prec) / self

    def __abs__(self) -> Ball:
        if mpf_ge(self.lower, fzero):
            return self
        if mpf_le(self.upper, fzero):
            return -self
        hi = _max(mpf_abs(self.lower), mpf_abs(self.upper))
        return Ball.from_endpoints(fzero, hi, self.prec)

    def __pow__(self, n: int) -> Ball:
        if not _is_integer(n):
            return NotImplemented
        return self.pow_int(int(n))

    def square(self) -> Ball:
        return self.pow_int(2)

    def pow_int(self, n: int) -> Ball:
        """Integer power evaluated at the endpoints with directed rounding."""
        if n == 0:
            return Ball(fone, fzero, self.prec)
        if n < 0:
            return self.pow_int(-n).reciprocal()
        if n == 1:
            return self
        wp = self.prec + GUARD_BITS
        lo, hi = self.lower, self.upper
        if mpf_ge(lo, fzero):
            return Ball.from_endpoints(
                _pow_directed(lo, n, wp, round_floor), _pow_directed(hi, n, wp, round_ceiling), self.prec
            )
        if mpf_le(hi, fzero):
            top = _pow_directed(mpf_neg(lo), n, wp, round_ceiling)
            bottom = _pow_directed(mpf_neg(hi), n, wp, round_floor)
            if n % 2 == 0:
                return Ball.from_endpoints(bottom, top, self.prec)
            return Ball.from_endpoints(mpf_neg(top), mpf_neg(bottom), self.prec)
        neg_part = _pow_directed(mpf_neg(lo), n, wp, round_ceiling)
        pos_part = _pow_directed(hi, n, wp, round_ceiling)
        if n % 2 == 0:
            return Ball.from_endpoints(fzero, _max(neg_part, pos_part), self.prec)
        return Ball.from_endpoints(mpf_neg(neg_part), pos_part, self.prec)

    # ------------------------------------------------------------------ #
    # Output
    # ------------------------------------------------------------------ #

    def decimal_parts(self, digits: int | None = None) -> tuple[str, str]:
        """("mid", "rad") decimal strings; rad is rounded outward and absorbs the mid rounding."""
        dps = digits if digits is not None else libmp.prec_to_dps(self.prec)
        mid_str = libmp.to_str(self.mid, dps)
        slack = abs(to_fraction(self.mid) - Fraction(mid_str))
        return mid_str, format_directed(to_fraction(self.rad) + slack, 3, upward=True)

    def to_decimal(self, digits: int | None = None) -> str:
        mid_str, rad_str = self.decimal_parts(digits)
        return f"{mid_str} ± {rad_str}"

    def lower_decimal(self, digits: int = 20) -> str:
        return format_directed(self.lower_fraction(), digits, upward=False)

    def upper_decimal(self, digits: int = 20) -> str:
        return format_directed(self.upper_fraction(), digits, upward=True)

    def __float__(self) -> float:
        return libmp.to_float(self.mid)

    def __repr__(self) -> str:
        return f"Ball({self.to_decimal(12)}, prec={self.prec})"


def _pow_directed(base: MPF, n: int, prec: int, rnd: str) -> MPF:
    """base**n for base >= 0, every product rounded in direction rnd."""
    result = fone
    while n:
        if n & 1:
            result = mpf_mul(result, base, prec, rnd)
        n >>= 1
        if n:
            base = mpf_mul(base, base, prec, rnd)
    return result


def arith(op: ArithOp, a: Ball, b: Ball | Exact | None = None) -> Ball:
    """Dispatch an arithmetic operation by name."""
    if op is ArithOp.NEG:
        return -a
    if op is ArithOp.ABS:
        return abs(a)
    if b is None:
        raise DomainViolation(f"{op.value} needs a second operand")
    if op is ArithOp.POW:
        if not _is_integer(b):
            raise DomainViolation("power-by-integer needs an integer exponent")
        return a.pow_int(int(b))
    other = b if isinstance(b, Ball) else Ball.exact(b, a.prec)
    if op is ArithOp.ADD:
        return a + other
    if op is ArithOp.SUB:
        return a - other
    if op is ArithOp.MUL:
        return a * other
    return a / other


def compare(a: Ball, b: Ball) -> Comparison:
    return a.compare(b)


def as_ball(value: Ball | Exact | float, prec: int = DEFAULT_PREC) -> Ball:
    """Pass balls through untouched; wrap exact scalars at the given precision."""
    if isinstance(value, Ball):
        return value
    return Ball.exact(value, prec)
