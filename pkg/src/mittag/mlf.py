"""Mittag-Leffler and Wright functions on the real line.

Both are evaluated from their defining power series,

    E_alpha(y)      = sum_n y**n / Gamma(1 + alpha*n)
    W_{alpha,beta}(x) = sum_k x**k / (k! Gamma(alpha + beta*k)),

summed in double-double arithmetic.  When the alternating sum for a
negative argument cancels more digits than the working precision holds,
the evaluation is refused with :class:`~mittag.errors.CancellationLoss`
instead of returning a value that looks accurate but is not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _entire
from .errors import CancellationLoss, DomainError, NotConverged
from .gamma import coefficient_table, recip_gamma
from .quadrature import QuadratureSpec, QuadResult, integrate
from .series import EvalResult, TINY

__all__ = [
    "MlfParams",
    "WrightParams",
    "mlf",
    "mlf_gaussian_deriv",
    "mlf_gaussian_integral",
    "wright",
    "wright_deriv",
    "wright_gaussian_integral",
    "mlf_gaussian_integral_closed_form",
    "wright_gaussian_integral_closed_form",
]

DEFAULT_SERIES_TOL = 1e-15
DEFAULT_MAX_TERMS = 10000
# never hand back fewer than ~4 significant digits
_MAX_REL_LOSS = 1e-4


@dataclass(frozen=True)
class MlfParams:
    alpha: float
    series_tol: float = DEFAULT_SERIES_TOL
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self):
        if not 0.0 < self.alpha <= 2.0:
            raise DomainError(f"alpha must lie in (0, 2], got {self.alpha!r}")
        _check_budget(self.series_tol, self.max_terms)


@dataclass(frozen=True)
class WrightParams:
    alpha: float
    beta: float
    series_tol: float = DEFAULT_SERIES_TOL
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self):
        if not self.beta > 0.0:
            raise DomainError(f"beta must be positive, got {self.beta!r}")
        if not math.isfinite(self.alpha):
            raise DomainError("alpha must be finite")
        _check_budget(self.series_tol, self.max_terms)


def _check_budget(tol: float, max_terms: int) -> None:
    if not tol > 0.0:
        raise DomainError("series_tol must be positive")
    if not 1 <= max_terms <= 100000:
        raise DomainError("max_terms must lie in 1..100000")


def _finish(s: _entire.SeriesSum, tol: float, what: str, factor: float = 1.0) -> EvalResult:
    value = s.hi * factor
    f = abs(factor)
    res = EvalResult(value, s.abs_error * f, s.abs_sum / max(abs(s.hi), TINY))
    if s.rounding_error > min(tol, _MAX_REL_LOSS) * abs(s.hi):
        raise CancellationLoss(
            f"{what}: cancellation condition {res.cancellation_condition:.3g} exceeds the precision budget",
            res,
        )
    return res


def _hopeless(log_abs_sum: float) -> bool:
    # a-priori: with sum|terms| > ~1e35 the double-double rounding alone
    # exceeds 1e4, far above any value these functions take for negative
    # arguments; skip the (long) summation
    return log_abs_sum > 82.0


def _mlf_table(alpha: float, deriv: int = 0):
    return coefficient_table(1, 0.0, float(alpha), False, deriv)


def mlf(p: MlfParams | float, y: float) -> EvalResult:
    """Mittag-Leffler function E_alpha(y) for real y.

    ``p`` may be an :class:`MlfParams` or a bare ``alpha``.

    Raises
    ------
    CancellationLoss
        Negative ``y`` whose alternating sum cancels beyond the budget.
    OverflowError
        Positive ``y`` with ``E_alpha(y)`` beyond the double range.
    MaxTermsExceeded
        The series did not truncate within ``max_terms``.
    """
    if not isinstance(p, MlfParams):
        p = MlfParams(float(p))
    y = float(y)
    if y > 0.0 and math.log(y) / p.alpha > math.log(800.0):
        # E_alpha(y) ~ exp(y**(1/alpha)) / alpha: skip the hopeless summation
        raise OverflowError(f"E_{p.alpha}({y}) exceeds the double range")
    if y < 0.0:
        a = p.alpha
        # sum|terms| = E_alpha(|y|) ~ exp(|y|**(1/alpha)) / alpha
        if _hopeless(abs(y) ** (1.0 / a) - math.log(a)):
            raise CancellationLoss(f"E_{a}({y}) is beyond the series precision budget")
    s = _entire.sum_series(_mlf_table(p.alpha), y, p.series_tol, p.max_terms)
    return _finish(s, p.series_tol, f"E_{p.alpha}({y})")


def mlf_gaussian_deriv(
    alpha: float,
    n: int,
    x: float,
    series_tol: float = DEFAULT_SERIES_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """n-th x-derivative of E_alpha(-x**2) from its term-wise series.

    Sums ``(-1)**k (2k)!/(2k-n)! x**(2k-n) / Gamma(1 + alpha*k)`` over the
    k with 2k >= n.  For n = 0 this is the same computation as
    ``mlf(alpha, -x**2)``.
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha!r}")
    if n < 0 or int(n) != n:
        raise DomainError("derivative order must be a nonnegative integer")
    n = int(n)
    x = float(x)
    if n == 0:
        return mlf(MlfParams(alpha, series_tol, max_terms), -(x * x))
    k0 = (n + 1) // 2
    z = -(x * x)
    if _hopeless((x * x) ** (1.0 / alpha) + n * math.log1p(abs(x)) + n):
        raise CancellationLoss(f"d^{n}/dx^{n} E_{alpha}(-x^2) at x={x} is beyond the precision budget")
    s = _entire.sum_series(_mlf_table(alpha, n), z, series_tol, max_terms, start=k0)
    factor = (-1.0) ** k0 * (x ** (2 * k0 - n))
    return _finish(s, series_tol, f"d^{n} E_{alpha}(-x^2)", factor)


def wright(p: WrightParams, x: float) -> EvalResult:
    """Wright function W_{alpha,beta}(x) = sum_k x**k / (k! Gamma(alpha + beta k))."""
    x = float(x)
    if x < 0.0:
        # sum|terms| grows like exp((1 + beta) * (|x| / beta**beta)**(1/(1+beta)))
        b = p.beta
        grow = (1.0 + b) * (abs(x) * b ** (-b)) ** (1.0 / (1.0 + b))
        if _hopeless(grow):
            raise CancellationLoss(f"W_{p.alpha},{p.beta}({x}) is beyond the series precision budget")
    table = coefficient_table(0, float(p.alpha), float(p.beta), True)
    s = _entire.sum_series(table, x, p.series_tol, p.max_terms)
    return _finish(s, p.series_tol, f"W_{p.alpha},{p.beta}({x})")


def wright_deriv(p: WrightParams, m: int, x: float) -> EvalResult:
    """m-th derivative of W_{alpha,beta} via the shift alpha -> alpha + m*beta."""
    if m < 0 or int(m) != m:
        raise DomainError("derivative order must be a nonnegative integer")
    if m == 0:
        return wright(p, x)
    shifted = WrightParams(p.alpha + m * p.beta, p.beta, p.series_tol, p.max_terms)
    return wright(shifted, x)


# -- whole-line integrals ----------------------------------------------------


def mlf_gaussian_integral_closed_form(alpha: float) -> float:
    """pi / Gamma(1 - alpha/2)."""
    return math.pi * recip_gamma(1.0 - 0.5 * alpha)


def wright_gaussian_integral_closed_form(alpha: float, beta: float) -> float:
    """sqrt(pi) / Gamma(alpha - beta/2)."""
    return math.sqrt(math.pi) * recip_gamma(alpha - 0.5 * beta)


def _series_horizon(sum_abs, x0: float, limit: float, max_terms: int = 4000) -> float:
    """Largest x on a geometric ladder from ``x0`` where ``sum_abs(x)`` stays below ``limit``.

    ``sum_abs(x)`` returns the positive-argument series (the sum of the
    absolute values of the terms) and its term count.
    """
    x = x0
    best = None
    for _ in range(200):
        try:
            total, count = sum_abs(x)
        except (OverflowError, ArithmeticError):
            break
        if total > limit or count > max_terms:
            break
        best = x
        x *= 1.05
    if best is None:
        raise NotConverged("could not place the series horizon")
    return best


def _accept_absolute(fn, x: float, abs_floor: float) -> float:
    try:
        return fn(x).value
    except CancellationLoss as exc:
        res = exc.result
        if res is not None and res.abs_error_estimate <= abs_floor:
            return res.value
        raise


def mlf_gaussian_integral(alpha: float, rel_tol: float = 1e-10, max_refinement_level: int = 10) -> QuadResult:
    """Quadrature of E_alpha(-x**2) over the whole real line.

    E_alpha(-x**2) decays only like 1/x**2, far past the range where its
    alternating series is usable.  The integral is therefore split at a
    horizon X inside that range: the core ``[-X, X]`` integrates the
    series directly, and the two tails use the subordination
    representation ``E_alpha(-x**2) = int_0^inf n_alpha(s, 1) exp(-x**2 s) ds``
    with the x-integral done in closed form,

        int_{|x|>X} E_alpha(-x**2) dx = sqrt(pi) int_0^inf n_alpha(s, 1) erfc(X sqrt(s)) / sqrt(s) ds.
    """
    from .levy import SubordinationKernel, _kernel_sample

    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")
    table = _mlf_table(alpha)

    def sum_abs(x):
        s = _entire.sum_series(table, x * x, 1e-17, DEFAULT_MAX_TERMS)
        return s.hi, s.n_terms

    horizon = _series_horizon(sum_abs, 0.5, 1e14)
    params = MlfParams(alpha, series_tol=1e-13)

    def core_integrand(x):
        return _accept_absolute(lambda v: mlf(params, -(v * v)), x, 1e-15)

    core = integrate(
        core_integrand,
        QuadratureSpec.finite(0.0, horizon, rel_tol=rel_tol, max_refinement_level=max_refinement_level),
    )
    kernel = SubordinationKernel(alpha, 1.0)

    def tail_integrand(s):
        w = math.erfc(horizon * math.sqrt(s)) / math.sqrt(s)
        if w == 0.0:
            return 0.0
        return _kernel_sample(kernel, s) * w

    tail = integrate(
        tail_integrand,
        QuadratureSpec.semi_infinite(0.0, rel_tol=rel_tol, max_refinement_level=max_refinement_level),
    )
    sqrt_pi = math.sqrt(math.pi)
    value = 2.0 * core.value + sqrt_pi * tail.value
    err = 2.0 * core.error_estimate + sqrt_pi * tail.error_estimate
    return QuadResult(value, err, core.evaluations + tail.evaluations, core.converged and tail.converged)


def wright_gaussian_integral(
    alpha: float, beta: float, rel_tol: float = 1e-10, max_refinement_level: int = 10
) -> QuadResult:
    """Quadrature of W_{alpha,beta}(-x**2) over the whole real line.

    For ``0 < beta < 1`` the integrand decays like a stretched exponential
    (with oscillation) at roughly half the rate at which the absolute
    series grows, so a horizon kept inside the series' precision budget
    already lies where the integrand is negligible.  The neglected tail is
    estimated from the integrand envelope near the horizon and added to
    the error estimate.

    Raises
    ------
    DomainError
        Unless ``0 < beta < 1`` and ``alpha - beta/2 > 0``.
    """
    if not 0.0 < beta < 1.0:
        raise DomainError(f"beta must lie in (0, 1), got {beta!r}")
    if not alpha - 0.5 * beta > 0.0:
        raise DomainError(f"need alpha - beta/2 > 0, got alpha={alpha!r}, beta={beta!r}")
    table = coefficient_table(0, float(alpha), float(beta), True)

    def sum_abs(x):
        s = _entire.sum_series(table, x * x, 1e-17, DEFAULT_MAX_TERMS)
        return s.hi, s.n_terms

    horizon = _series_horizon(sum_abs, 0.5, 1e18)
    params = WrightParams(alpha, beta, series_tol=1e-13)

    def integrand(x):
        return _accept_absolute(lambda v: wright(params, -(v * v)), x, 1e-10)

    core = integrate(
        integrand,
        QuadratureSpec.finite(0.0, horizon, rel_tol=rel_tol, max_refinement_level=max_refinement_level),
    )
    envelope = max(abs(integrand(horizon * f)) for f in (0.9, 0.925, 0.95, 0.975, 1.0))
    tail = envelope * horizon
    return QuadResult(
        2.0 * core.value, 2.0 * (core.error_estimate + tail), core.evaluations, core.converged
    )
