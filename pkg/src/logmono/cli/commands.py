# CLI Commands
# One function per subcommand; each returns a payload, a table and an exit status

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from loguru import logger

from ..ball import Ball, log2_ball
from ..certify import (
    SignFlag,
    bound_functions,
    certify_negative,
    f_kx,
    f_kx_at_3k_cap,
    kth_deriv_log_theta,
    kth_sign_threshold,
    three_term_bound,
    tail_bound_report,
)
from ..certify.bounds import PRINTED_TOTAL_AT_6
from ..config import get_settings
from ..exactnum import bernoulli_table, tangent
from ..exceptions import ConfigurationError, PrecisionExhausted, SearchExhausted
from ..monotonicity import (
    SequenceName,
    VerdictTag,
    builtin_sequence,
    reports_to_dict,
    scan_infinite_logmono,
    sun_conjecture_check,
)
from ..special import zeta_enclosure, zeta_even_exact
from .run_config import ExitStatus, RunConfig

DIGITS = 20
PRINTED_TOLERANCE = Fraction(5, 10000)
THETA_DEFAULT_RANGE = (Fraction("6.001"), Fraction(100))


@dataclass
class CommandResult:
    """What a command produced: JSON payload, a table (header first) and summary lines."""

    command: str
    payload: dict[str, Any]
    table: list[list[str]]
    summary: list[str] = field(default_factory=list)
    status: ExitStatus = ExitStatus.OK


def _status_of(tag: VerdictTag) -> ExitStatus:
    if tag is VerdictTag.HOLDS:
        return ExitStatus.OK
    if tag is VerdictTag.FAILS:
        return ExitStatus.FAILS
    return ExitStatus.UNDECIDED


def cmd_bernoulli(cfg: RunConfig) -> CommandResult:
    n_max = 20 if cfg.n_max is None else cfg.n_max
    cap = get_settings().bernoulli_cap
    if n_max > cap:
        raise ConfigurationError(f"n_max {n_max} exceeds the Bernoulli cap {cap}")
    table = bernoulli_table(n_max)
    rows = [{"n": n, "value": str(table[n])} for n in range(n_max + 1)]
    return CommandResult(
        "bernoulli",
        {"command": "bernoulli", "rows": rows},
        [["n", "B_n"]] + [[str(r["n"]), r["value"]] for r in rows],
        [f"B_0 .. B_{n_max}"],
    )


def cmd_tangent(cfg: RunConfig) -> CommandResult:
    n_max = 10 if cfg.n_max is None else cfg.n_max
    if n_max < 1:
        raise ConfigurationError("tangent numbers start at n = 1")
    rows = [{"n": n, "value": str(tangent(n))} for n in range(1, n_max + 1)]
    return CommandResult(
        "tangent",
        {"command": "tangent", "rows": rows},
        [["n", "T_n"]] + [[str(r["n"]), r["value"]] for r in rows],
        [f"T(1) .. T({n_max})"],
    )


def cmd_zeta(cfg: RunConfig) -> CommandResult:
    rows = []
    for x in cfg.grid(2, 10):
        value = zeta_enclosure(Ball.exact(x, cfg.prec))
        mid, rad = value.decimal_parts(DIGITS)
        row = {"x": str(x), "mid": mid, "rad": rad}
        if x.denominator == 1 and x.numerator % 2 == 0:
            exact = zeta_even_exact(x.numerator // 2, cfg.prec)
            row["agrees_with_bernoulli_form"] = value.overlaps(exact)
        rows.append(row)
    return CommandResult(
        "zeta",
        {"command": "zeta", "precision": cfg.prec, "rows": rows},
        [["x", "mid", "rad"]] + [[r["x"], r["mid"], r["rad"]] for r in rows],
        [f"zeta on {len(rows)} points at {cfg.prec} bits"],
    )


def cmd_verify_theta(cfg: RunConfig) -> CommandResult:
    lo, hi = cfg.range_or(*THETA_DEFAULT_RANGE)
    if lo <= 6:
        raise ConfigurationError(f"verify-theta needs lo > 6, got {lo}")
    depth = cfg.depth or 40
    cert = certify_negative("d2_log_theta", lo, hi, max_depth=depth, prec=cfg.prec)
    tail = tail_bound_report(Ball.exact(hi, cfg.prec))
    status = ExitStatus.OK if cert.certified and tail.certified else ExitStatus.UNDECIDED
    max_upper = cert.to_dict()["max_upper"]
    summary = [
        f"(log theta)'' < 0 on [{lo}, {hi}]: {cert.status.value}",
        f"leaves: {len(cert.leaves)}, evaluations: {cert.evaluations}, max upper bound: {max_upper}",
        f"tail bound from {hi}: total {tail.breakdown.total.upper_decimal(8)}, "
        f"certified: {tail.certified}",
    ]
    if cert.reason:
        summary.append(f"reason: {cert.reason}")
    table = [["lo", "hi", "upper_bound"]] + [
        [leaf["lo"], leaf["hi"], leaf["upper_bound_decimal"]] for leaf in cert.to_dict()["leaves"]
    ]
    return CommandResult(
        "verify-theta",
        {"command": "verify-theta", "certificate": cert.to_dict(), "tail": tail.to_dict()},
        table,
        summary,
        status,
    )


def cmd_verify_kth(cfg: RunConfig) -> CommandResult:
    status = ExitStatus.OK
    thresholds: list[dict[str, Any]] = []
    signs: list[dict[str, Any]] = []
    grid = cfg.grid(40, 100) if cfg.range is not None else [Fraction(x) for x in (40, 60, 100)]
    for k in range(2, cfg.k_max + 1):
        try:
            cert = kth_sign_threshold(k)
            thresholds.append(cert.to_dict())
        except SearchExhausted as e:
            logger.warning(str(e))
            thresholds.append({"k": k, "threshold": None})
            status = ExitStatus.worst(status, ExitStatus.UNDECIDED)
        expected = SignFlag.POSITIVE if k % 2 else SignFlag.NEGATIVE
        for x in grid:
            if x <= k + 3:
                continue
            try:
                value = kth_deriv_log_theta(Ball.exact(x, cfg.prec), k, require_sign=True)
                flag = SignFlag.of(value)
            except PrecisionExhausted as e:
                logger.warning(str(e))
                flag = SignFlag.UNDECIDED
            if flag is SignFlag.UNDECIDED:
                status = ExitStatus.worst(status, ExitStatus.UNDECIDED)
            elif flag is not expected:
                status = ExitStatus.worst(status, ExitStatus.FAILS)
            signs.append({"k": k, "x": str(x), "sign": flag.value, "expected": expected.value})
    table = [["k", "x", "sign", "expected"]] + [
        [str(s["k"]), s["x"], s["sign"], s["expected"]] for s in signs
    ]
    summary = [f"X({t['k']}) = {t['threshold']}" for t in thresholds]
    return CommandResult(
        "verify-kth",
        {"command": "verify-kth", "thresholds": thresholds, "signs": signs},
        table,
        summary,
        status,
    )


def cmd_logmono(cfg: RunConfig, sequence: str) -> CommandResult:
    try:
        name = SequenceName(sequence)
    except ValueError:
        name = SequenceName.CUSTOM
    if name is SequenceName.CUSTOM:
        known = ", ".join(n.value for n in SequenceName if n is not SequenceName.CUSTOM)
        raise ConfigurationError(f"unknown sequence {sequence!r}; known: {known}")
    depth = cfg.depth or 1
    n_max = 50 if cfg.n_max is None else cfg.n_max
    lo, hi = cfg.index_range(1, n_max)
    reports = scan_infinite_logmono(
        builtin_sequence(name), depth, (lo, hi), strict=cfg.strict, prec=cfg.prec
    )
    status = ExitStatus.worst(*(_status_of(rep.outcome) for rep in reports))
    payload = {"command": "logmono", **reports_to_dict(reports), "orders": [r.to_dict() for r in reports]}
    table = [["r", "property", "N", "violations", "undecided"]] + [
        [
            str(rep.depth),
            rep.property_name,
            "none" if rep.threshold is None else str(rep.threshold),
            " ".join(map(str, rep.violations)),
            " ".join(map(str, rep.undecided)),
        ]
        for rep in reports
    ]
    return CommandResult(
        "logmono", payload, table, [f"{name.value}, r = 0..{depth}, n in [{lo}, {hi}]"], status
    )


def cmd_sun(cfg: RunConfig) -> CommandResult:
    n_max = 50 if cfg.n_max is None else cfg.n_max
    report = sun_conjecture_check(n_max, prec=cfg.prec)
    if report.all_hold:
        status = ExitStatus.OK
    elif any(report.fails.values()):
        status = ExitStatus.FAILS
    else:
        status = ExitStatus.UNDECIDED
    return CommandResult(
        "sun",
        {"command": "sun", **report.to_dict()},
        report.csv_rows(),
        [f"|B_2n|^(1/n) increasing and its ratios decreasing up to n = {n_max}: {report.all_hold}"],
        status,
    )


def _value_row(name: str, value: Ball, printed: Fraction | None) -> dict[str, Any]:
    mid, rad = value.decimal_parts(DIGITS)
    row: dict[str, Any] = {"name": name, "mid": mid, "rad": rad, "printed": None, "match": True}
    if printed is not None:
        row["printed"] = str(printed)
        low, high = value.lower_fraction(), value.upper_fraction()
        row["match"] = printed - PRINTED_TOLERANCE <= low and high <= printed + PRINTED_TOLERANCE
    return row


def cmd_bounds(cfg: RunConfig) -> CommandResult:
    prec = cfg.prec
    at6 = three_term_bound(Ball.exact(6, prec))
    rows = [
        _value_row("2log2", 2 * log2_ball(prec), Fraction("1.386")),
        _value_row("zeta-part@6", at6.term_zeta, Fraction("2.1545")),
        _value_row("f1(6)", at6.term_gamma, Fraction("-3.787")),
        _value_row("total@6", at6.total, PRINTED_TOTAL_AT_6),
        _value_row("f0(6)", bound_functions("f0", Ball.exact(6, prec)).value, None),
    ]
    for x in cfg.grid(6, 10):
        if x == 6:
            continue
        rows.append(_value_row(f"total@{x}", three_term_bound(Ball.exact(x, prec)).total, None))
    for k in range(2, cfg.k_max + 1):
        value = f_kx(k, Ball.exact(3 * k, prec))
        row = _value_row(f"f({k},{3 * k})", value, None)
        row["cap"] = f_kx_at_3k_cap(k, prec).upper_decimal(8)
        row["match"] = value.upper_fraction() <= f_kx_at_3k_cap(k, prec).lower_fraction()
        rows.append(row)

    mismatched = [r["name"] for r in rows if not r["match"]]
    summary = [f"{len(rows)} bound values, {len(mismatched)} mismatched"]
    total6 = at6.total
    if not total6.contains(PRINTED_TOTAL_AT_6):
        summary.append(
            f"note: recomputed total at 6 is {total6.to_decimal(6)}; printed value {PRINTED_TOTAL_AT_6}"
        )
    status = ExitStatus.FAILS if mismatched else ExitStatus.OK
    table = [["name", "mid", "rad", "printed", "match"]] + [
        [r["name"], r["mid"], r["rad"], r["printed"] or "", "yes" if r["match"] else "NO"] for r in rows
    ]
    return CommandResult(
        "bounds", {"command": "bounds", "rows": rows, "mismatched": mismatched}, table, summary, status
    )
