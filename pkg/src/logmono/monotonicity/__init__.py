"""The R operator, log-concavity verdicts and log-monotonicity scans."""

from .scan import MonotonicityReport, reports_to_dict, scan_infinite_logmono
from .sequences import (
    SequenceHandle,
    SequenceKind,
    SequenceName,
    Term,
    builtin_sequence,
    r_operator,
    r_power,
    sequence_value,
    y_interp,
)
from .sun import SunReport, sun_conjecture_check
from .verdicts import (
    Verdict,
    VerdictTag,
    decreasing_at,
    increasing_at,
    logconcave_at,
    logconvex_at,
)

__all__ = [
    "MonotonicityReport",
    "SequenceHandle",
    "SequenceKind",
    "SequenceName",
    "SunReport",
    "Term",
    "Verdict",
    "VerdictTag",
    "builtin_sequence",
    "decreasing_at",
    "increasing_at",
    "logconcave_at",
    "logconvex_at",
    "r_operator",
    "r_power",
    "reports_to_dict",
    "scan_infinite_logmono",
    "sequence_value",
    "sun_conjecture_check",
    "y_interp",
]
