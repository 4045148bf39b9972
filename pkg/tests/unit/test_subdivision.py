"""Unit tests for subdivision sign certificates."""

from fractions import Fraction

import pytest

from logmono.ball import Ball
from logmono.certify import (
    CertifiableFunction,
    CertificateStatus,
    SignRegistry,
    certify_negative,
    replay_certificate,
)
from logmono.exceptions import ConfigurationError, DivisionByEnclosedZero, DomainViolation


def hump(x: Ball) -> Ball:
    return x * (6 - x) - Fraction(19, 2)


def fragile(x: Ball) -> Ball:
    if x.upper_fraction() - x.lower_fraction() > 1:
        raise DomainViolation("cell too wide")
    return x - 20


def broken(x: Ball) -> Ball:
    raise DivisionByEnclosedZero("divisor contains zero")


@pytest.fixture
def linear() -> CertifiableFunction:
    """x - 7 on (0, inf)."""
    return CertifiableFunction("x_minus_7", lambda x: x - 7, Fraction(0), "x - 7")


@pytest.fixture
def registered(linear: CertifiableFunction):
    """Register the linear test function by name for the duration of a test."""
    entry = SignRegistry.register(linear.name, linear.evaluate, linear.domain_lo, linear.description)
    yield entry
    SignRegistry.unregister(linear.name)


@pytest.mark.unit
class TestSignRegistry:
    """Test name lookup of certifiable functions."""

    def test_builtin_second_derivative(self):
        entry = SignRegistry.get("d2_log_theta")
        assert entry.domain_lo == 6
        assert "d2_log_theta" in SignRegistry.names()

    def test_kth_entries_resolve_dynamically(self):
        entry = SignRegistry.get("kth_log_theta_3")
        assert entry.name == "kth_log_theta_3"
        assert entry.domain_lo == 6
        assert entry.evaluate(Ball.exact(60, 128)).is_negative()

    def test_even_kth_entry_keeps_sign(self):
        assert SignRegistry.get("kth_log_theta_4").evaluate(Ball.exact(100, 128)).is_negative()

    def test_unknown_names(self):
        for name in ("nope", "kth_log_theta_1", "kth_log_theta_x"):
            with pytest.raises(DomainViolation):
                SignRegistry.get(name)

    def test_register_and_unregister(self, registered: CertifiableFunction):
        assert SignRegistry.get("x_minus_7") is registered
        SignRegistry.unregister("x_minus_7")
        with pytest.raises(DomainViolation):
            SignRegistry.get("x_minus_7")


@pytest.mark.unit
class TestCertifyNegative:
    """Test the best-first bisection loop on simple functions."""

    def test_certifies_on_first_leaf(self, linear: CertifiableFunction):
        cert = certify_negative(linear, 1, 6)
        assert cert.certified
        assert len(cert.leaves) == 1
        assert cert.evaluations == 1
        assert cert.max_upper is not None and cert.max_upper < 0

    def test_degenerate_interval(self, linear: CertifiableFunction):
        cert = certify_negative(linear, 3, 3)
        assert cert.certified
        assert cert.leaves[0].lo == cert.leaves[0].hi == 3

    def test_by_registered_name(self, registered: CertifiableFunction):
        cert = certify_negative("x_minus_7", Fraction(1, 2), Fraction(13, 2))
        assert cert.certified
        assert cert.function == "x_minus_7"

    def test_wide_ball_needs_bisection(self):
        """x (6 - x) - 19/2 has max -1/2; ball products overestimate it until cells shrink."""
        fn = CertifiableFunction("hump", hump, Fraction(0))
        cert = certify_negative(fn, 1, 5)
        assert cert.certified
        assert len(cert.leaves) > 1
        assert cert.leaves[0].lo == 1
        assert cert.leaves[-1].hi == 5
        assert all(a.hi == b.lo for a, b in zip(cert.leaves, cert.leaves[1:]))

    def test_nonnegative_leaf_is_undecided(self, linear: CertifiableFunction):
        cert = certify_negative(linear, 1, 10)
        assert cert.status is CertificateStatus.UNDECIDED
        assert cert.reason.startswith("nonnegative")

    def test_zero_at_endpoint_exhausts_depth(self, linear: CertifiableFunction):
        cert = certify_negative(linear, 5, 7, max_depth=6)
        assert not cert.certified
        assert "depth 6" in cert.reason

    def test_leaf_budget(self, linear: CertifiableFunction):
        cert = certify_negative(linear, 1, 8, max_leaves=2)
        assert not cert.certified
        assert "leaf budget" in cert.reason
        assert len(cert.leaves) == 2

    def test_precision_escalates_on_narrow_cells(self, test_settings):
        """A degenerate point whose enclosure straddles zero climbs to the cap."""
        test_settings.prec_cap = 512
        fn = CertifiableFunction("straddle", lambda x: Ball.from_interval(-1, 1, x.prec), Fraction(0))
        cert = certify_negative(fn, 2, 2)
        assert not cert.certified
        assert "precision cap" in cert.reason
        assert cert.precision_bits == 512

    def test_failed_evaluation_is_bisected(self):
        """Cells the evaluator cannot handle are split until it can."""
        fn = CertifiableFunction("fragile", fragile, Fraction(0))
        cert = certify_negative(fn, 1, 8)
        assert cert.certified
        assert all(leaf.enclosure is not None for leaf in cert.leaves)
        assert all(leaf.hi - leaf.lo <= 1 for leaf in cert.leaves)
        assert replay_certificate(cert, fn)

    def test_failed_evaluation_at_a_point(self, test_settings):
        test_settings.prec_cap = 512
        fn = CertifiableFunction("broken", broken, Fraction(0))
        cert = certify_negative(fn, 2, 2)
        assert not cert.certified
        assert cert.reason == "evaluation failed at 2.0"
        assert cert.precision_bits == 512

    def test_failed_leaves_have_no_upper_bound(self):
        fn = CertifiableFunction("broken", broken, Fraction(0))
        cert = certify_negative(fn, 1, 2, max_depth=3)
        assert "depth 3" in cert.reason
        assert cert.max_upper is None
        data = cert.to_dict()
        assert data["max_upper"] is None
        assert {leaf["upper_bound_decimal"] for leaf in data["leaves"]} == {"inf"}

    def test_deterministic(self):
        fn = CertifiableFunction("hump", hump, Fraction(0))
        assert certify_negative(fn, 1, 5).to_dict() == certify_negative(fn, 1, 5).to_dict()

    def test_validation(self, linear: CertifiableFunction):
        with pytest.raises(DomainViolation):
            certify_negative(linear, 3, 2)
        with pytest.raises(DomainViolation):
            certify_negative(linear, 0, 2)
        with pytest.raises(ConfigurationError):
            certify_negative(linear, 1, 2, max_depth=0)
        with pytest.raises(DomainViolation):
            certify_negative("d2_log_theta", 6, 7)

    def test_to_dict(self, linear: CertifiableFunction):
        data = certify_negative(linear, 1, 6).to_dict()
        assert data["status"] == "certified"
        assert data["function"] == "x_minus_7"
        assert data["reason"] == ""
        assert Fraction(data["interval"][0]) <= 1
        assert Fraction(data["interval"][1]) >= 6
        assert set(data["leaves"][0]) == {"lo", "hi", "upper_bound_decimal"}
        assert Fraction(data["max_upper"]) >= -1


@pytest.mark.unit
class TestReplay:
    """Test independent re-checking of certificates."""

    def test_replay_accepts_valid_certificate(self):
        fn = CertifiableFunction("hump", hump, Fraction(0))
        cert = certify_negative(fn, 1, 5)
        assert replay_certificate(cert, fn)

    def test_replay_by_registered_name(self, registered: CertifiableFunction):
        cert = certify_negative("x_minus_7", 1, 6)
        assert replay_certificate(cert)

    def test_replay_rejects_other_function(self, linear: CertifiableFunction):
        cert = certify_negative(linear, 1, 6)
        other = CertifiableFunction("x_minus_2", lambda x: x - 2, Fraction(0))
        assert not replay_certificate(cert, other)

    def test_replay_rejects_failing_evaluation(self):
        fn = CertifiableFunction("fragile", fragile, Fraction(0))
        cert = certify_negative(fn, 1, 8)
        assert not replay_certificate(cert, CertifiableFunction("broken", broken, Fraction(0)))

    def test_replay_rejects_gaps(self):
        fn = CertifiableFunction("hump", hump, Fraction(0))
        cert = certify_negative(fn, 1, 5)
        del cert.leaves[0]
        assert not replay_certificate(cert, fn)

    @pytest.mark.slow
    def test_second_derivative_of_log_theta_near_six(self):
        cert = certify_negative("d2_log_theta", Fraction("6.5"), 7, max_depth=20)
        assert cert.certified
        assert replay_certificate(cert)
