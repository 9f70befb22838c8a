"""One-sided Levy stable densities and the subordination kernel.

The density ``g_alpha`` (Laplace transform ``exp(-p**alpha)``) is summed
from its convergent series

    g_alpha(u) = sum_{k>=1} (-1)**(k-1) sin(pi k alpha) Gamma(k alpha + 1) / (pi k!) * u**(-k alpha - 1)
               = alpha * u**(-1-alpha) * M_alpha(u**-alpha),

where ``M_alpha(z) = sum_j (-z)**j / (j! Gamma(1 - alpha - alpha j))`` is the
M-Wright function.  The subordination kernel

    n_alpha(s, t) = (1/alpha) t s**(-1-1/alpha) g_alpha(t s**(-1/alpha)) = t**-alpha M_alpha(s t**-alpha)

turns ordinary heat polynomials in the time variable ``s`` into the
fractional ones: ``H_n(x, t**alpha; alpha) = int_0^inf n_alpha(s, t) H_n(x, s; 1) ds``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import _entire
from .errors import CancellationLoss, DomainError, NonPositiveArgument, NotConverged
from .gamma import coefficient_table
from .heat import heat_poly, heat_poly_eval
from .mlf import DEFAULT_MAX_TERMS, DEFAULT_SERIES_TOL, _finish, _hopeless
from .quadrature import QuadratureSpec, QuadResult, integrate
from .series import EvalResult

__all__ = [
    "LevyDensity",
    "SubordinationKernel",
    "levy_pdf",
    "levy_pdf_half",
    "subordination_kernel",
    "subordinate_heat_poly",
    "subordinate_function",
    "levy_normalization",
    "kernel_normalization",
    "m_wright_horizon",
]

# kernel values whose absolute error is below this are still usable as
# quadrature samples even when their relative accuracy is gone
KERNEL_ABS_FLOOR = 1e-14
# sum|terms| allowed at the reliability horizon of the M-Wright series
_HORIZON_ABS_SUM = 5e14


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie strictly inside (0, 1), got {alpha!r}")


@dataclass(frozen=True)
class LevyDensity:
    alpha: float
    series_tol: float = DEFAULT_SERIES_TOL
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self):
        _check_alpha(self.alpha)


@dataclass(frozen=True)
class SubordinationKernel:
    alpha: float
    t: float
    series_tol: float = DEFAULT_SERIES_TOL
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self):
        _check_alpha(self.alpha)
        if not self.t > 0.0:
            raise NonPositiveArgument(f"t must be positive, got {self.t!r}")


@lru_cache(maxsize=1 << 16)
def _m_wright(alpha: float, z: float, tol: float, max_terms: int) -> _entire.SeriesSum:
    # growth of sum|terms| for M_alpha(z), z > 0
    a1 = 1.0 - alpha
    if _hopeless(a1 * (alpha**alpha * z) ** (1.0 / a1)):
        raise CancellationLoss(f"M_{alpha}({z}) is beyond the series precision budget")
    return _entire.sum_series(coefficient_table(1, -alpha, -alpha, True), -z, tol, max_terms)


@lru_cache(maxsize=256)
def m_wright_horizon(alpha: float) -> float:
    """Largest argument at which the M-Wright series is trusted as a quadrature sample.

    Placed where the sum of absolute terms reaches ``_HORIZON_ABS_SUM``, so
    the absolute rounding error there stays near ``KERNEL_ABS_FLOOR``.  The
    function itself is already far below that level at the horizon
    (its decay mirrors the growth of the absolute sum), so quadratures
    treat it as zero beyond.
    """
    table = coefficient_table(1, -alpha, -alpha, True)
    z, best = 1.0, 1.0
    while z < 1e6:
        try:
            s = _entire.sum_series(table, -z, DEFAULT_SERIES_TOL, DEFAULT_MAX_TERMS)
        except ArithmeticError:
            break
        if s.abs_sum > _HORIZON_ABS_SUM:
            break
        best = z
        z *= 1.02
    return best


@lru_cache(maxsize=256)
def _horizon_value(alpha: float) -> float:
    m = _m_wright(alpha, m_wright_horizon(alpha), DEFAULT_SERIES_TOL, DEFAULT_MAX_TERMS)
    return abs(m.hi) + m.abs_error


def levy_pdf(d: LevyDensity, u: float) -> EvalResult:
    """One-sided stable density g_alpha(u), u > 0."""
    u = float(u)
    if not u > 0.0:
        raise NonPositiveArgument(f"levy_pdf needs u > 0, got {u!r}")
    a = d.alpha
    z = u**-a
    factor = a * u ** (-1.0 - a)
    s = _m_wright(a, z, d.series_tol, d.max_terms)
    return _finish(s, d.series_tol, f"g_{a}({u})", factor)


def levy_pdf_half(u: float) -> float:
    """Closed form of g_{1/2}: u**-1.5 exp(-1/(4u)) / (2 sqrt(pi))."""
    return u**-1.5 * math.exp(-0.25 / u) / (2.0 * math.sqrt(math.pi))


def subordination_kernel(k: SubordinationKernel, s: float) -> EvalResult:
    """n_alpha(s, t), evaluated as t**-alpha M_alpha(s t**-alpha).

    Algebraically identical to composing ``levy_pdf`` at ``t s**(-1/alpha)``
    but free of the overflowing powers of s near 0.
    """
    s = float(s)
    if not s > 0.0:
        raise NonPositiveArgument(f"kernel needs s > 0, got {s!r}")
    a = k.alpha
    scale = k.t**-a
    z_h = m_wright_horizon(a)
    if s * scale > z_h:
        # M_alpha decreases past its mode, which lies well inside the horizon,
        # so the value here is bounded by the (tiny) value at the horizon
        return EvalResult(0.0, _horizon_value(a) * scale)
    m = _m_wright(a, s * scale, k.series_tol, k.max_terms)
    return _finish(m, k.series_tol, f"n_{a}({s}, {k.t})", scale)


def _kernel_sample(k: SubordinationKernel, s: float) -> float:
    if s * k.t**-k.alpha > m_wright_horizon(k.alpha):
        return 0.0
    try:
        return subordination_kernel(k, s).value
    except CancellationLoss as exc:
        res = exc.result
        if res is not None and res.abs_error_estimate <= KERNEL_ABS_FLOOR:
            return res.value
        raise NotConverged(f"kernel n_{k.alpha}(s, {k.t}) unavailable at s={s!r}", res) from exc


def _with_tail(q: QuadResult, k: SubordinationKernel, G: Callable[[float], float]) -> QuadResult:
    # crude estimate of the mass cut off at the horizon: width s_h times the integrand there
    s_h = m_wright_horizon(k.alpha) * k.t**k.alpha
    try:
        edge = abs(_kernel_sample(k, s_h) * G(s_h)) * s_h
    except ArithmeticError:
        edge = 0.0
    return QuadResult(q.value, q.error_estimate + edge, q.evaluations, q.converged)


def subordinate_function(
    G: Callable[[float, float], float],
    alpha: float,
    x: float,
    y: float,
    rel_tol: float = 1e-10,
    max_refinement_level: int = 10,
) -> QuadResult:
    """F(x) = int_0^inf n_alpha(s, y**(1/alpha)) G(x, s) ds."""
    _check_alpha(alpha)
    if not y > 0.0:
        raise NonPositiveArgument(f"y must be positive, got {y!r}")
    k = SubordinationKernel(alpha, y ** (1.0 / alpha))

    def integrand(s):
        w = _kernel_sample(k, s)
        return w * G(x, s) if w != 0.0 else 0.0

    interval = QuadratureSpec.semi_infinite(0.0, rel_tol=rel_tol, max_refinement_level=max_refinement_level)
    return _with_tail(integrate(integrand, interval), k, lambda s: G(x, s))


def subordinate_heat_poly(
    alpha: float,
    n: int,
    x: float,
    t: float,
    rel_tol: float = 1e-10,
    max_refinement_level: int = 10,
) -> QuadResult:
    """int_0^inf n_alpha(s, t) H_n(x, s; 1) ds, which equals H_n(x, t**alpha; alpha)."""
    _check_alpha(alpha)
    if n > 20:
        raise DomainError("subordinate_heat_poly supports n <= 20")
    if not t > 0.0:
        raise NonPositiveArgument(f"t must be positive, got {t!r}")
    h1 = heat_poly(n, 1.0)
    k = SubordinationKernel(alpha, t)

    def integrand(s):
        return _kernel_sample(k, s) * heat_poly_eval(h1, x, s).value

    interval = QuadratureSpec.semi_infinite(0.0, rel_tol=rel_tol, max_refinement_level=max_refinement_level)
    return _with_tail(integrate(integrand, interval), k, lambda s: heat_poly_eval(h1, x, s).value)


def levy_normalization(alpha: float, rel_tol: float = 1e-10) -> QuadResult:
    """int_0^inf g_alpha(u) du (should be 1)."""
    d = LevyDensity(alpha)
    z_h = m_wright_horizon(alpha)

    def integrand(u):
        if u**-alpha > z_h:
            return 0.0
        try:
            return levy_pdf(d, u).value
        except CancellationLoss as exc:
            res = exc.result
            # g(u) du = M(z) dz, so the relevant absolute error is that of M
            if res is not None and res.abs_error_estimate * u ** (1.0 + alpha) / alpha <= KERNEL_ABS_FLOOR:
                return res.value
            raise NotConverged(f"g_{alpha} unavailable at u={u!r}", res) from exc

    return integrate(integrand, QuadratureSpec.semi_infinite(0.0, rel_tol=rel_tol))


def kernel_normalization(alpha: float, t: float, rel_tol: float = 1e-10) -> QuadResult:
    """int_0^inf n_alpha(s, t) ds (should be 1)."""
    k = SubordinationKernel(alpha, t)
    q = integrate(lambda s: _kernel_sample(k, s), QuadratureSpec.semi_infinite(0.0, rel_tol=rel_tol))
    return _with_tail(q, k, lambda s: 1.0)
