import math

import pytest
from hypothesis import given, settings, strategies as st

from mittag import (
    LevyDensity,
    SubordinationKernel,
    heat_poly,
    heat_poly_eval,
    levy_pdf,
    mlf,
    subordinate_function,
    subordinate_heat_poly,
    subordination_kernel,
)
from mittag.errors import CancellationLoss, DomainError, NonPositiveArgument
from mittag.levy import kernel_normalization, levy_normalization, levy_pdf_half


def test_half_closed_form_examples():
    d = LevyDensity(0.5)
    assert levy_pdf(d, 1.0).value == pytest.approx(0.2196956447338612, rel=1e-14)
    assert levy_pdf(d, 4.0).value == pytest.approx(0.03312544154300357, rel=1e-14)


@given(st.floats(min_value=0.1, max_value=10.0))
def test_half_series_matches_closed_form(u):
    assert levy_pdf(LevyDensity(0.5), u).value == pytest.approx(levy_pdf_half(u), rel=1e-10)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7])
def test_positive_on_log_grid(alpha):
    d = LevyDensity(alpha)
    for i in range(41):
        u = 0.05 * 1000.0 ** (i / 40)
        try:
            assert levy_pdf(d, u).value >= 0.0
        except CancellationLoss as exc:
            # refused only where the density is negligible
            assert exc.result is None or exc.result.value < 1.0


def test_small_u_is_refused_not_wrong():
    with pytest.raises(CancellationLoss):
        levy_pdf(LevyDensity(0.7), 0.01)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7])
def test_normalizations(alpha):
    assert levy_normalization(alpha).value == pytest.approx(1.0, abs=1e-7)
    for t in (0.5, 1.0, 2.0):
        assert kernel_normalization(alpha, t).value == pytest.approx(1.0, abs=1e-7)


def test_kernel_examples():
    k = SubordinationKernel(0.5, 1.0)
    assert subordination_kernel(k, 1.0).value == pytest.approx(math.exp(-0.25) / math.sqrt(math.pi), rel=1e-13)
    for t in (0.5, 1.0, 2.0):
        r = subordination_kernel(SubordinationKernel(0.5, t), 20 * math.sqrt(t))
        assert r.value < 1e-12 and r.abs_error_estimate < 1e-12


@settings(deadline=None)
@given(st.floats(min_value=0.05, max_value=15.0), st.sampled_from([0.5, 1.0, 2.0]))
def test_half_kernel_is_half_gaussian(s, t):
    ref = math.exp(-s * s / (4 * t)) / math.sqrt(math.pi * t)
    try:
        r = subordination_kernel(SubordinationKernel(0.5, t), s)
    except CancellationLoss as exc:
        # a refusal still carries an honest best effort
        r = exc.result
    assert abs(r.value - ref) <= max(1e-12 * ref, r.abs_error_estimate)


def test_kernel_equals_composed_density():
    # n(s, t) = t s^(-1-1/alpha) g(t s^(-1/alpha)) / alpha
    for a, s, t in [(0.3, 0.7, 1.0), (0.7, 1.5, 2.0), (0.5, 0.4, 0.5)]:
        u = t * s ** (-1 / a)
        composed = t * s ** (-1 - 1 / a) * levy_pdf(LevyDensity(a), u).value / a
        assert subordination_kernel(SubordinationKernel(a, t), s).value == pytest.approx(composed, rel=1e-12)


def test_subordination_examples():
    assert subordinate_heat_poly(0.4, 0, 1.0, 1.0).value == pytest.approx(1.0, abs=1e-10)
    assert subordinate_heat_poly(0.5, 2, 1.0, 1.0).value == pytest.approx(1 + 4 / math.sqrt(math.pi), rel=1e-9)
    for a in (0.3, 0.7):
        assert subordinate_heat_poly(a, 1, -0.8, 1.5).value == pytest.approx(-0.8, rel=1e-9)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7])
def test_subordination_identity(alpha):
    for n in (3, 6):
        for x, t in [(0.0, 0.5), (-1.0, 2.0), (2.0, 1.0)]:
            q = subordinate_heat_poly(alpha, n, x, t)
            exact = heat_poly_eval(heat_poly(n, alpha), x, t**alpha).value
            assert q.converged
            assert q.value == pytest.approx(exact, rel=1e-8, abs=1e-12)


def test_subordinate_function():
    assert subordinate_function(lambda x, s: 1.0, 0.6, 0.0, 1.3).value == pytest.approx(1.0, abs=1e-10)
    # heat generating function maps to exp(xi x) E_alpha(xi^2 y)
    xi, x, y = 0.3, 0.7, 1.4
    q = subordinate_function(lambda x, s: math.exp(xi * x + xi * xi * s), 0.5, x, y)
    assert q.value == pytest.approx(math.exp(xi * x) * mlf(0.5, xi * xi * y).value, rel=1e-9)
    # y = t^alpha correspondence
    a, n, x, t = 0.7, 4, 1.1, 1.8
    q = subordinate_function(lambda x, s: heat_poly_eval(heat_poly(n, 1.0), x, s).value, a, x, t**a)
    assert q.value == pytest.approx(subordinate_heat_poly(a, n, x, t).value, rel=1e-10)


def test_validation():
    with pytest.raises(DomainError):
        LevyDensity(1.0)
    with pytest.raises(NonPositiveArgument):
        SubordinationKernel(0.5, 0.0)
    with pytest.raises(NonPositiveArgument):
        levy_pdf(LevyDensity(0.5), 0.0)
    with pytest.raises(DomainError):
        subordinate_heat_poly(0.5, 21, 1.0, 1.0)
