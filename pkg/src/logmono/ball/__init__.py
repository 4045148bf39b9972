"""Ball (midpoint-radius) arithmetic with enclosed elementary functions and constants."""

from .constants import Constant, constant, euler_gamma_ball, log2_ball, log_2pi_ball, pi_ball
from .core import (
    DEFAULT_PREC,
    GUARD_BITS,
    ArithOp,
    Ball,
    Comparison,
    arith,
    as_ball,
    compare,
    format_directed,
    to_fraction,
)
from .functions import ElemFn, elem, exp, log, pow_real, sqrt

__all__ = [
    "DEFAULT_PREC",
    "GUARD_BITS",
    "ArithOp",
    "Ball",
    "Comparison",
    "Constant",
    "ElemFn",
    "arith",
    "as_ball",
    "compare",
    "constant",
    "elem",
    "euler_gamma_ball",
    "exp",
    "format_directed",
    "log",
    "log2_ball",
    "log_2pi_ball",
    "pi_ball",
    "pow_real",
    "sqrt",
    "to_fraction",
]
