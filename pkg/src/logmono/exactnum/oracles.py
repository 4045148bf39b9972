# Independent Oracles
# Checks on B_2n that do not go through the recurrence

from fractions import Fraction

from .bernoulli import bernoulli_even


def _divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def staudt_primes(n: int) -> list[int]:
    """Primes p with (p - 1) | 2n, ascending."""
    return [d + 1 for d in _divisors(2 * n) if _is_prime(d + 1)]


def von_staudt_clausen_check(n: int) -> bool:
    """True iff B_2n + sum of 1/p over primes with (p - 1) | 2n is an integer."""
    if n < 1:
        raise ValueError(f"von Staudt-Clausen needs n >= 1, got {n}")
    total = bernoulli_even(n) + sum((Fraction(1, p) for p in staudt_primes(n)), Fraction(0))
    return total.denominator == 1
