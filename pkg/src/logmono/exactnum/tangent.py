# Tangent Numbers
# T(n) from |B_2n| and the Seidel triangle cross-oracle

from fractions import Fraction

from ..exceptions import NonIntegerResult
from .bernoulli import bernoulli_even


def tangent(n: int) -> int:
    """Exact tangent number T(n) = |B_2n| (4^n - 1) 4^n / (2n), with T(1) = 1."""
    if n < 1:
        raise ValueError(f"tangent numbers start at n = 1, got {n}")
    value = abs(bernoulli_even(n)) * Fraction((4**n - 1) * 4**n, 2 * n)
    if value.denominator != 1:
        raise NonIntegerResult(f"T({n}) reduced to non-integer {value}")
    return value.numerator


def tangent_oracle(n: int) -> int:
    """T(n) from the boustrophedon (Seidel) triangle, without Bernoulli numbers.

    Row m of the triangle ends with the zigzag number E_m; tangent numbers
    are the odd-indexed ones, T(n) = E_{2n-1}.
    """
    if n < 1:
        raise ValueError(f"tangent numbers start at n = 1, got {n}")
    row = [1]
    for _ in range(2 * n - 1):
        nxt = [0]
        for x in reversed(row):
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]
