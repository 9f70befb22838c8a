import math

import mpmath as mp
import pytest
import scipy.special as sc
from hypothesis import given, settings, strategies as st

import oracles
from mittag import MlfParams, WrightParams, mlf, mlf_gaussian_deriv, wright, wright_deriv
from mittag.errors import CancellationLoss, DomainError, MaxTermsExceeded
from mittag.gamma import recip_gamma
from mittag.mlf import (
    mlf_gaussian_integral,
    mlf_gaussian_integral_closed_form,
    wright_gaussian_integral,
    wright_gaussian_integral_closed_form,
)


# -- Mittag-Leffler -------------------------------------------------------


def test_mlf_examples():
    assert mlf(1.0, 1.0).value == pytest.approx(2.718281828459045, rel=1e-15)
    for a in (0.1, 0.5, 1.3, 2.0):
        assert mlf(a, 0.0).value == 1.0
    assert mlf(0.5, -1.0).value == pytest.approx(0.42758357615580700, rel=1e-15)


@given(st.floats(min_value=-5.0, max_value=20.0))
def test_e1_is_exp(y):
    assert mlf(1.0, y).value == pytest.approx(math.exp(y), rel=1e-12)


@given(st.floats(min_value=-3.0, max_value=3.0))
def test_e_half_is_erfc_form(z):
    assert mlf(0.5, z).value == pytest.approx(math.exp(z * z) * math.erfc(-z), rel=1e-10)


def test_e2_is_cosh():
    for y in (-4.0, -0.3, 2.0, 9.0):
        ref = math.cosh(math.sqrt(y)) if y >= 0 else math.cos(math.sqrt(-y))
        assert mlf(2.0, y).value == pytest.approx(ref, rel=1e-13)


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.2, max_value=1.0), st.floats(min_value=-10.0, max_value=10.0))
def test_mlf_matches_high_precision_oracle(alpha, y):
    try:
        r = mlf(alpha, y)
    except (CancellationLoss, OverflowError):
        return
    ref = float(oracles.mlf(alpha, y))
    assert abs(r.value - ref) <= max(r.abs_error_estimate, 1e-14 * abs(ref))
    assert abs(r.value - ref) <= 1e-12 * abs(ref)


def test_term_shift_resummation():
    for a in (0.3, 0.5, 0.8):
        for y in (-2.0, 0.5, 3.0):
            with mp.workdps(40):
                shifted = mp.nsum(lambda n: mp.mpf(y) ** n * mp.rgamma(1 + a * (n + 1)), [0, mp.inf])
            assert mlf(a, y).value == pytest.approx(float(1 + y * shifted), rel=1e-12)


@settings(deadline=None)
@given(st.floats(min_value=0.05, max_value=2.0), st.floats(min_value=0.0, max_value=30.0))
def test_positive_for_nonnegative_argument(alpha, y):
    try:
        r = mlf(alpha, y)
    except OverflowError:
        assert y ** (1 / alpha) > 700.0
        return
    assert r.value > 0.0


def test_overflow_is_reported():
    with pytest.raises(OverflowError):
        mlf(0.2, 4.0)


def test_cancellation_is_refused():
    with pytest.raises(CancellationLoss):
        mlf(MlfParams(0.5, series_tol=1e-10), -200.0)
    with pytest.raises(CancellationLoss) as info:
        mlf(MlfParams(0.5, series_tol=1e-10), -9.0)
    res = info.value.result
    assert res is not None and res.cancellation_condition > 1e10
    # refused values still come with an honest absolute error
    assert abs(res.value - float(oracles.mlf(0.5, -9.0))) <= res.abs_error_estimate


def test_cutoff_follows_condition_estimate():
    # not a hard-coded cutoff: a looser budget accepts a larger |y|
    with pytest.raises(CancellationLoss):
        mlf(MlfParams(0.5, series_tol=1e-12), -6.5)
    assert mlf(MlfParams(0.5, series_tol=1e-6), -6.5).value == pytest.approx(float(oracles.mlf(0.5, -6.5)), rel=1e-6)


def test_max_terms():
    with pytest.raises(MaxTermsExceeded):
        mlf(MlfParams(0.5, max_terms=5), 3.0)


def test_params_validation():
    for a in (0.0, -1.0, 2.5):
        with pytest.raises(DomainError):
            MlfParams(a)
    with pytest.raises(DomainError):
        MlfParams(0.5, max_terms=200000)


# -- derivatives of E_alpha(-x^2) -----------------------------------------


def test_gaussian_deriv_examples():
    assert mlf_gaussian_deriv(0.4, 0, 0.0).value == 1.0
    assert mlf_gaussian_deriv(1.0, 1, 1.0).value == pytest.approx(-2 / math.e, rel=1e-15)
    f = lambda v: float(oracles.mlf(0.5, -(v * v)))
    fd = (f(0.7 + 1e-4) - 2 * f(0.7) + f(0.7 - 1e-4)) / 1e-8
    assert mlf_gaussian_deriv(0.5, 2, 0.7).value == pytest.approx(fd, rel=1e-5)


def test_gaussian_deriv_n0_is_mlf_bitwise():
    for a in (0.3, 0.5, 1.0):
        for x in (0.0, 0.4, 1.3):
            assert mlf_gaussian_deriv(a, 0, x) == mlf(a, -(x * x))


@pytest.mark.parametrize("n", range(1, 7))
def test_gaussian_deriv_against_exact_alpha_one(n):
    # d^n/dx^n exp(-x^2) = (-1)^n H_n(x) exp(-x^2), physicists' Hermite H_n
    for x in (0.0, 0.3, 1.2):
        ref = (-1) ** n * sc.eval_hermite(n, x) * math.exp(-x * x)
        assert mlf_gaussian_deriv(1.0, n, x).value == pytest.approx(ref, rel=1e-13, abs=1e-15)


def test_gaussian_deriv_odd_at_zero_vanishes():
    assert mlf_gaussian_deriv(0.5, 3, 0.0).value == 0.0
    assert mlf_gaussian_deriv(0.5, 2, 0.0).value == pytest.approx(-2 * recip_gamma(1.5), rel=1e-15)


# -- Wright ---------------------------------------------------------------


def test_wright_examples():
    for a, b in [(0.5, 0.5), (2.3, 1.0)]:
        assert wright(WrightParams(a, b), 0.0).value == pytest.approx(recip_gamma(a), rel=2.3e-16)
    assert wright(WrightParams(1.0, 1.0), 1.0).value == pytest.approx(2.2795853023360673, rel=1e-15)
    assert wright(WrightParams(1.0, 1.0), -1.0).value == pytest.approx(0.2238907791412357, rel=1e-15)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.1, 3.0), st.floats(0.1, 1.5), st.floats(0.0, 20.0))
def test_wright_matches_scipy_on_positive_axis(alpha, beta, x):
    # scipy's wright_bessel(a, b, x) = sum x^k / (k! Gamma(a k + b))
    ref = sc.wright_bessel(beta, alpha, x)
    assert wright(WrightParams(alpha, beta), x).value == pytest.approx(ref, rel=1e-11)


def test_wright_bessel_j0():
    for x in (0.5, 1.0, 2.0, 3.0):
        assert wright(WrightParams(1.0, 1.0), -x * x).value == pytest.approx(sc.j0(2 * x), rel=1e-12, abs=1e-15)


def test_wright_negative_axis_oracle():
    for a, b, x in [(1.0, 0.5, -4.0), (1.5, 1 / 3, -9.0), (0.5, 0.8, -2.0)]:
        assert wright(WrightParams(a, b), x).value == pytest.approx(float(oracles.wright(a, b, x)), rel=1e-10)


def test_wright_deriv_examples():
    p = WrightParams(1.0, 1.0)
    assert wright_deriv(p, 0, 0.4) == wright(p, 0.4)
    assert wright_deriv(p, 1, 0.0).value == 1.0
    q = WrightParams(1.0, 0.5)
    fd = float(oracles.central(lambda v: oracles.wright(1.0, 0.5, v), 0.3, 2))
    assert wright_deriv(q, 2, 0.3).value == pytest.approx(fd, rel=1e-5)


def test_wright_params_validation():
    with pytest.raises(DomainError):
        WrightParams(1.0, 0.0)
    with pytest.raises(DomainError):
        wright_deriv(WrightParams(1.0, 0.5), -1, 0.0)


# -- whole-line integrals -------------------------------------------------


def test_mlf_gaussian_integral_closed_form_values():
    assert mlf_gaussian_integral_closed_form(1.0) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert mlf_gaussian_integral_closed_form(0.5) == pytest.approx(2.5636933520408476, rel=1e-15)
    assert wright_gaussian_integral_closed_form(1.0, 0.5) == pytest.approx(1.4464090846320771, rel=1e-15)
    assert wright_gaussian_integral_closed_form(1.5, 0.5) == pytest.approx(1.9554821348938476, rel=1e-15)


@pytest.mark.parametrize("alpha", [0.5, 0.75])
def test_mlf_gaussian_integral(alpha):
    q = mlf_gaussian_integral(alpha)
    exact = mlf_gaussian_integral_closed_form(alpha)
    assert q.converged
    assert q.value == pytest.approx(exact, rel=1e-8)
    assert abs(q.value - exact) <= 10 * q.error_estimate + 1e-15


def test_mlf_gaussian_integral_small_alpha_limit():
    # E_0(-x^2) = 1/(1 + x^2) integrates to pi
    q = mlf_gaussian_integral(1e-3)
    assert q.value == pytest.approx(math.pi, rel=1e-2)


def test_mlf_gaussian_integral_domain():
    with pytest.raises(DomainError):
        mlf_gaussian_integral(1.0)


def test_wright_gaussian_integral_symmetry_and_value():
    q = wright_gaussian_integral(1.0, 0.5)
    assert q.value == pytest.approx(1.4464090846320771, rel=1e-8)
    assert abs(q.value - 1.4464090846320771) <= 10 * q.error_estimate


@pytest.mark.parametrize("alpha,beta", [(1.0, 1.0), (0.2, 0.5), (1.0, 0.0)])
def test_wright_gaussian_integral_domain(alpha, beta):
    with pytest.raises(DomainError):
        wright_gaussian_integral(alpha, beta)
