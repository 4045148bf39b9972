"""Unit tests for zeta and log-gamma enclosures."""

from fractions import Fraction

import mpmath
import pytest

from logmono.ball import Ball
from logmono.exceptions import ConfigurationError, DomainViolation
from logmono.special import (
    LogGammaMethod,
    ZetaEnclosureParams,
    alzer_band_values,
    default_terms,
    log_int,
    log_zeta_derivs,
    loggamma_deriv_enclosure,
    loggamma_derivs,
    loggamma_enclosure,
    stirling_band,
    stirling_main,
    stirling_series,
    zeta_deriv_enclosure,
    zeta_derivs,
    zeta_enclosure,
    zeta_even_exact,
)

ZETA_GRID = [Fraction(3, 2), Fraction(2), Fraction(5, 2), Fraction(4), Fraction(13, 2), Fraction(12)]


def width(ball: Ball) -> Fraction:
    return ball.upper_fraction() - ball.lower_fraction()


def nth_derivative(fn, x, j: int):
    return mpmath.diff(fn, x, j) if j else fn(x)


@pytest.mark.unit
class TestZeta:
    """Test the Dirichlet-series enclosure of zeta."""

    @pytest.mark.parametrize("x", ZETA_GRID)
    def test_contains_true_value(self, x: Fraction, mp_fraction):
        assert zeta_enclosure(Ball.exact(x, 128)).contains(mp_fraction(mpmath.zeta, x, prec=512))

    def test_more_terms_tighten(self):
        x = Ball.exact(2, 128)
        coarse = zeta_enclosure(x, ZetaEnclosureParams(partial_terms=16))
        fine = zeta_enclosure(x, ZetaEnclosureParams(partial_terms=2000))
        assert width(fine) < width(coarse)
        assert fine.overlaps(coarse)

    def test_agrees_with_bernoulli_form(self):
        for n in range(1, 6):
            x = Ball.exact(2 * n, 128)
            assert zeta_enclosure(x).overlaps(zeta_even_exact(n, 128))

    def test_ball_argument(self, mp_fraction):
        x = Ball.from_interval(Fraction(299, 100), Fraction(301, 100), 128)
        assert zeta_enclosure(x).contains(mp_fraction(mpmath.zeta, Fraction(3), prec=512))

    def test_domain(self):
        with pytest.raises(DomainViolation):
            zeta_enclosure(Ball.exact(1, 128))
        with pytest.raises(DomainViolation):
            zeta_enclosure(Ball.from_interval(1, 2, 128))

    def test_params_validation(self):
        with pytest.raises(ConfigurationError):
            ZetaEnclosureParams(partial_terms=1)
        with pytest.raises(ConfigurationError):
            ZetaEnclosureParams(precision=8)

    def test_params_precision_overrides_argument(self):
        value = zeta_enclosure(Ball.exact(3, 64), ZetaEnclosureParams(precision=256))
        assert value.prec == 256

    def test_default_terms(self, test_settings):
        assert default_terms(Ball.exact(3, 64)) == 16
        assert default_terms(Ball.exact(40, 64)) == 40
        assert default_terms(Ball.exact(1000, 64)) == test_settings.zeta_max_terms
        assert default_terms(Ball.exact(3, 64), j=4) == 57

    def test_log_int_is_cached(self):
        assert log_int(7, 128) is log_int(7, 128)


@pytest.mark.unit
class TestZetaEvenExact:
    """Test the closed form zeta(2n) = 2^(2n-1) pi^(2n) |B_2n| / (2n)!."""

    def test_zeta_two(self, mp_fraction):
        value = zeta_even_exact(1, 128)
        assert value.contains(mp_fraction(lambda: mpmath.pi**2 / 6, prec=512))
        assert width(value) < Fraction(1, 10**20)

    @pytest.mark.parametrize("n", [2, 5, 10, 30])
    def test_matches_mpmath(self, n: int, mp_fraction):
        assert zeta_even_exact(n, 128).contains(mp_fraction(mpmath.zeta, Fraction(2 * n), prec=512))

    def test_default_precision(self, test_settings):
        assert zeta_even_exact(2).prec == test_settings.precision

    def test_domain(self):
        with pytest.raises(DomainViolation):
            zeta_even_exact(0)


@pytest.mark.unit
class TestZetaDerivatives:
    """Test enclosures of zeta^(j) and (log zeta)^(j)."""

    @pytest.mark.parametrize("j", [1, 2, 3])
    @pytest.mark.parametrize("x", [Fraction(5, 2), Fraction(6), Fraction(20)])
    def test_contains_true_value(self, j: int, x: Fraction, mp_fraction):
        value = zeta_deriv_enclosure(Ball.exact(x, 128), j)
        assert value.contains(mp_fraction(lambda s: mpmath.zeta(s, 1, j), x, prec=512))

    def test_signs_alternate(self):
        derivs = zeta_derivs(Ball.exact(6, 128), 4)
        for j, value in enumerate(derivs):
            assert value.sign() == (-1) ** j

    def test_order_zero_is_zeta(self):
        x = Ball.exact(3, 128)
        assert zeta_deriv_enclosure(x, 0).overlaps(zeta_enclosure(x))

    def test_truncation_too_short(self):
        with pytest.raises(ConfigurationError):
            zeta_derivs(Ball.exact(3, 128), 3, ZetaEnclosureParams(partial_terms=4))

    def test_negative_order(self):
        with pytest.raises(DomainViolation):
            zeta_derivs(Ball.exact(3, 128), -1)

    def test_log_zeta_derivs(self, mp_fraction):
        x = Fraction(6)
        values = log_zeta_derivs(Ball.exact(x, 128), 3)
        assert len(values) == 4
        for j, value in enumerate(values):
            expected = mp_fraction(lambda s: nth_derivative(lambda t: mpmath.log(mpmath.zeta(t)), s, j), x, prec=512)
            assert value.contains(expected), f"order {j}"

    def test_log_zeta_first_derivative_is_negative(self):
        for x in (Fraction(3, 2), Fraction(6), Fraction(50)):
            assert log_zeta_derivs(Ball.exact(x, 128), 1)[1].is_negative()


@pytest.mark.unit
class TestStirling:
    """Test the Stirling band and series at large arguments."""

    def test_band_contains_loggamma(self, mp_fraction):
        for y in (Fraction(10), Fraction(101, 4), Fraction(1000)):
            for j in range(4):
                expected = mp_fraction(lambda v: nth_derivative(mpmath.loggamma, v, j), y, prec=512)
                assert stirling_band(Ball.exact(y, 128), j).contains(expected), f"y={y}, j={j}"

    def test_series_is_tighter_than_band(self):
        y = Ball.exact(40, 128)
        assert width(stirling_series(y)) < width(stirling_band(y))
        assert stirling_series(y).overlaps(stirling_band(y))

    def test_main_term_derivative(self, mp_fraction):
        y = Fraction(30)
        main = stirling_main(Ball.exact(y, 128), 1)
        assert main.contains(mp_fraction(lambda v: mpmath.log(v) - 1 / (2 * v), y, prec=512))

    def test_domain(self):
        with pytest.raises(DomainViolation):
            stirling_band(Ball.exact(0, 64))
        with pytest.raises(DomainViolation):
            stirling_series(Ball.exact(-1, 64))


@pytest.mark.unit
class TestLogGamma:
    """Test log Gamma and its derivatives through the shift recurrence."""

    @pytest.mark.parametrize("method", list(LogGammaMethod))
    @pytest.mark.parametrize("x", [Fraction(1, 2), Fraction(1), Fraction(5), Fraction(77, 3), Fraction(400)])
    def test_contains_true_value(self, method: LogGammaMethod, x: Fraction, mp_fraction):
        value = loggamma_enclosure(Ball.exact(x, 128), method=method)
        assert value.contains(mp_fraction(mpmath.loggamma, x, prec=512))

    def test_factorial(self, mp_fraction):
        assert loggamma_enclosure(Ball.exact(5, 128)).contains(mp_fraction(mpmath.log, Fraction(24), prec=512))
        assert loggamma_enclosure(Ball.exact(1, 128)).contains(0)
        assert loggamma_enclosure(Ball.exact(2, 128)).contains(0)

    @pytest.mark.parametrize("method", list(LogGammaMethod))
    @pytest.mark.parametrize("j", [1, 2, 3, 5])
    def test_derivatives_match_polygamma(self, method: LogGammaMethod, j: int, mp_fraction):
        for x in (Fraction(3, 4), Fraction(12), Fraction(250)):
            value = loggamma_deriv_enclosure(Ball.exact(x, 128), j, method=method)
            assert value.contains(mp_fraction(lambda v: mpmath.psi(j - 1, v), x, prec=512))

    def test_explicit_shift(self, mp_fraction):
        x = Fraction(7, 2)
        for shift in (0, 5, 40):
            value = loggamma_enclosure(Ball.exact(x, 128), shift=shift)
            assert value.contains(mp_fraction(mpmath.loggamma, x, prec=512))

    @pytest.mark.parametrize("method", list(LogGammaMethod))
    def test_wide_argument(self, method: LogGammaMethod, mp_fraction):
        """A ball from just above 6 to 10^4 still encloses log Gamma at both ends."""
        x = Ball.from_interval(Fraction("6.001"), 10_000, 128)
        value = loggamma_enclosure(x, method=method)
        assert value.contains(mp_fraction(mpmath.loggamma, Fraction("6.001"), prec=512))
        assert value.contains(mp_fraction(mpmath.loggamma, Fraction(10_000), prec=512))
        first = loggamma_deriv_enclosure(x, 1, method=method)
        assert first.contains(mp_fraction(mpmath.digamma, Fraction(10_000), prec=512))

    def test_loggamma_derivs_list(self):
        values = loggamma_derivs(Ball.exact(10, 128), 3)
        assert len(values) == 4
        assert values[1].is_positive()
        assert values[2].is_positive()
        assert values[3].is_negative()

    def test_domain(self):
        with pytest.raises(DomainViolation):
            loggamma_enclosure(Ball.exact(0, 64))
        with pytest.raises(DomainViolation):
            loggamma_deriv_enclosure(Ball.exact(2, 64), 0)
        with pytest.raises(DomainViolation):
            loggamma_deriv_enclosure(Ball.from_interval(-1, 1, 64), 1)


@pytest.mark.unit
class TestAlzerBand:
    """0 < log Gamma(x) - S(x) < 1/(12x) for x > 0."""

    @pytest.mark.parametrize("x", [Fraction(1, 2), Fraction(1), Fraction(5), Fraction(50), Fraction(1000)])
    def test_both_gaps_positive(self, x: Fraction):
        g0, f0 = alzer_band_values(Ball.exact(x, 128))
        assert g0.is_positive()
        assert f0.is_positive()

    def test_domain(self):
        with pytest.raises(DomainViolation):
            alzer_band_values(Ball.exact(0, 64))
