"""Exact rational arithmetic and the combinatorial sequences built on it."""

from .bernoulli import (
    BernoulliTable,
    bernoulli,
    bernoulli_even,
    bernoulli_table,
    binomial,
    harmonic,
)
from .oracles import staudt_primes, von_staudt_clausen_check
from .tangent import tangent, tangent_oracle

__all__ = [
    "BernoulliTable",
    "bernoulli",
    "bernoulli_even",
    "bernoulli_table",
    "binomial",
    "harmonic",
    "staudt_primes",
    "tangent",
    "tangent_oracle",
    "von_staudt_clausen_check",
]
