"""theta(x), the analytic bounds around it, and subdivision sign certificates."""

from .base import (
    BoundBreakdown,
    CertificateLeaf,
    CertificateStatus,
    SignCertificate,
    SignedEnclosure,
    SignFlag,
)
from .bounds import (
    BoundEvaluation,
    BoundFunction,
    DerivativeSignReport,
    TailBoundReport,
    ThresholdCertificate,
    bound_functions,
    f0,
    f1,
    f_kx,
    f_kx_at_3k_cap,
    kth_sign_threshold,
    loggamma_over_x_bound,
    three_term_bound,
    tail_bound_report,
    threshold_bound,
    zeta_term_bound,
)
from .subdivision import CertifiableFunction, SignRegistry, certify_negative, replay_certificate
from .tangent import (
    TangentVariant,
    kth_sign_tangent,
    log_4x_deriv_bound,
    log_4x_deriv_enclosure,
    log_4x_deriv_estimate,
    tangent_interp,
)
from .theta import (
    d2_log_theta,
    inv_theta_deriv_sign,
    kth_deriv_log_theta,
    log_theta,
    logx_over_x_deriv,
    theta,
)

__all__ = [
    "BoundBreakdown",
    "BoundEvaluation",
    "BoundFunction",
    "CertifiableFunction",
    "CertificateLeaf",
    "CertificateStatus",
    "DerivativeSignReport",
    "SignCertificate",
    "SignFlag",
    "SignRegistry",
    "SignedEnclosure",
    "TailBoundReport",
    "TangentVariant",
    "ThresholdCertificate",
    "bound_functions",
    "certify_negative",
    "d2_log_theta",
    "f0",
    "f1",
    "f_kx",
    "f_kx_at_3k_cap",
    "inv_theta_deriv_sign",
    "kth_deriv_log_theta",
    "kth_sign_tangent",
    "kth_sign_threshold",
    "log_4x_deriv_bound",
    "log_4x_deriv_enclosure",
    "log_4x_deriv_estimate",
    "log_theta",
    "loggamma_over_x_bound",
    "logx_over_x_deriv",
    "three_term_bound",
    "replay_certificate",
    "tail_bound_report",
    "tangent_interp",
    "theta",
    "threshold_bound",
    "zeta_term_bound",
]
