# Command-Line Interface
# argparse front end: parse, build the RunConfig, run one command, render, exit

import argparse
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction
from pathlib import Path
from typing import NoReturn

from loguru import logger
from pydantic import ValidationError

from .. import __version__
from ..config import configure_logging, get_settings
from ..exceptions import ConfigurationError, DomainViolation, InsufficientRange, LogmonoError
from .commands import (
    CommandResult,
    cmd_bernoulli,
    cmd_bounds,
    cmd_logmono,
    cmd_sun,
    cmd_tangent,
    cmd_verify_kth,
    cmd_verify_theta,
    cmd_zeta,
)
from .render import render, write_output
from .run_config import ExitStatus, OutputFormat, RunConfig, build_run_config, load_config_file, parse_range

__all__ = ["ExitStatus", "OutputFormat", "RunConfig", "build_parser", "main"]

COMMANDS: dict[str, Callable[[RunConfig], CommandResult]] = {
    "bernoulli": cmd_bernoulli,
    "tangent": cmd_tangent,
    "zeta": cmd_zeta,
    "verify-theta": cmd_verify_theta,
    "verify-kth": cmd_verify_kth,
    "bounds": cmd_bounds,
    "sun": cmd_sun,
}

EPILOG = """
Examples:
  %(prog)s bernoulli --n-max 10
  %(prog)s verify-theta --range 6.001:100 --format json
  %(prog)s logmono tangent --depth 2 --n-max 100
  %(prog)s bounds --k-max 8

CSV columns:
  bernoulli / tangent   n, value
  zeta                  x, mid, rad
  verify-theta          lo, hi, upper_bound
  verify-kth            k, x, sign, expected
  logmono               r, property, N, violations, undecided
  bounds                name, mid, rad, printed, match
  sun                   part, n, verdict, precision

Exit codes: 0 all certified/holds, 1 a check fails, 2 undecided, 3 usage error.
"""


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as ConfigurationError (exit 3, not 2)."""

    def error(self, message: str) -> NoReturn:
        raise ConfigurationError(message)


def _range(text: str) -> tuple[Fraction, Fraction]:
    try:
        return parse_range(text)
    except ConfigurationError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--prec", type=int, dest="precision", help="Working precision in bits")
    parser.add_argument("--n-max", type=int, dest="n_max", help="Largest index")
    parser.add_argument("--range", type=_range, metavar="LO:HI", help="Interval or index range")
    parser.add_argument("--depth", type=int, help="Subdivision depth or R-operator depth")
    parser.add_argument("--k-max", type=int, dest="k_max", help="Largest derivative order")
    parser.add_argument("--step", type=Fraction, help="Grid step inside --range")
    parser.add_argument(
        "--strict", action=argparse.BooleanOptionalAction, default=None, help="Strict inequalities"
    )
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], help="Output format")
    parser.add_argument("--out", type=Path, dest="out_path", help="Write output to a file")
    parser.add_argument("--config", type=Path, help="Flat KEY=value options file")
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="logmono",
        description="Certified enclosures and log-monotonicity checks for Bernoulli and tangent numbers",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "bernoulli": "Exact Bernoulli numbers B_0..B_n",
        "tangent": "Exact tangent numbers T(1)..T(n)",
        "zeta": "Enclosures of zeta on a grid",
        "verify-theta": "Certify (log theta)'' < 0 on an interval",
        "verify-kth": "Thresholds X(k) and signs of (log theta)^(k)",
        "bounds": "Recompute the closed-form bound constants",
        "sun": "Monotonicity of |B_2n|^(1/n) and its ratios",
    }
    for name, text in helps.items():
        _add_common(sub.add_parser(name, help=text))
    logmono = sub.add_parser("logmono", help="R-operator log-monotonicity scan")
    logmono.add_argument("sequence", help="Sequence name, e.g. tangent or inv_root_abs_bernoulli")
    _add_common(logmono)
    return parser


_FLAG_FIELDS = ("precision", "n_max", "range", "depth", "k_max", "step", "strict", "format", "out_path")


def _apply_precision(cfg: RunConfig) -> None:
    if cfg.precision is None:
        return
    settings = get_settings()
    if cfg.precision > settings.prec_cap:
        settings.prec_cap = cfg.precision
    settings.precision = cfg.precision


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command; returns the exit status."""
    try:
        args = build_parser().parse_args(argv)
        settings = get_settings()
        configure_logging("DEBUG" if args.verbose else settings.log_level)
        file_values = load_config_file(args.config) if args.config else {}
        flags = {name: getattr(args, name) for name in _FLAG_FIELDS}
        cfg = build_run_config(file_values, flags)
        _apply_precision(cfg)
    except (LogmonoError, ValidationError) as e:
        logger.error(f"usage: {e}")
        print(f"logmono: error: {e}".splitlines()[0], file=sys.stderr)
        return int(ExitStatus.USAGE)

    logger.debug(f"Running {args.command} with {cfg}")
    try:
        if args.command == "logmono":
            result = cmd_logmono(cfg, args.sequence)
        else:
            result = COMMANDS[args.command](cfg)
    except (ConfigurationError, DomainViolation, InsufficientRange) as e:
        logger.error(f"{args.command}: {e}")
        print(f"logmono: error: {e}", file=sys.stderr)
        return int(ExitStatus.USAGE)

    write_output(render(result, cfg.format), cfg.out_path)
    logger.info(f"{args.command} finished with status {result.status.name}")
    return int(result.status)
