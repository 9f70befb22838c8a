"""Exact series solution of the fractional diffusion equation for polynomial data.

For ``D_t^alpha F = k d^2F/dx^2 + t**(-alpha)/Gamma(1-alpha) f(x)`` with
Riemann-Liouville ``D_t``, the solution is ``E_alpha(k t**alpha d^2/dx^2) f``.
Each monomial ``x**n`` maps to the fractional heat polynomial
``H_n(x, k t**alpha)``, so polynomial data evolve exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .heat import heat_coefficient
from .series import BivariateSeries, EvalResult, GenPowerSeries, Residual

__all__ = ["DiffusionProblem", "evolve", "evolve_eval", "ffp_residual", "mass_first_moments"]


@dataclass(frozen=True)
class DiffusionProblem:
    """Fractional order ``alpha``, diffusivity ``k`` and polynomial initial data ``f``."""

    alpha: float
    k: float
    f: GenPowerSeries

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha!r}")
        if not self.k > 0.0:
            raise DomainError(f"diffusivity must be positive, got {self.k!r}")
        if not self.f.has_integer_exponents() or any(mu < 0 for mu in self.f.exponents):
            raise DomainError("initial data must be a polynomial with nonnegative integer powers")

    @classmethod
    def from_coefficients(cls, alpha: float, k: float, coefficients) -> "DiffusionProblem":
        """Initial data ``sum_n coefficients[n] x**n``."""
        return cls(alpha, k, GenPowerSeries.polynomial(coefficients, "x"))


def _terms(p: DiffusionProblem):
    # (coefficient, power of x, m) with the time factor (k t^alpha)^m left out
    for c, mu in p.f.terms:
        n = int(round(mu))
        for m in range(n // 2 + 1):
            yield c * heat_coefficient(n, m, p.alpha), n - 2 * m, m


def evolve(p: DiffusionProblem, t: float) -> GenPowerSeries:
    """The solution at time t as a polynomial in x."""
    if t < 0.0:
        raise DomainError("time must be nonnegative")
    if t == 0.0:
        return p.f
    y = p.k * t**p.alpha
    return GenPowerSeries(((c * y**m, px) for c, px, m in _terms(p)), p.f.var)


def evolve_eval(p: DiffusionProblem, t: float, x: float) -> EvalResult:
    return evolve(p, t).eval(x)


def ffp_residual(p: DiffusionProblem) -> Residual:
    """Residual of the evolution equation over (x-power, t-exponent) terms.

    ``F`` is expanded into ``x**(n-2m) t**(alpha m)`` monomials, the
    Riemann-Liouville derivative in t is applied term-wise, and
    ``k d^2F/dx^2`` plus the source term are subtracted.  The reference
    scale is the largest coefficient of F.
    """
    a, k = p.alpha, p.k
    F = BivariateSeries.from_terms(((c * k**m, px, a * m) for c, px, m in _terms(p)), "x", "t")
    lhs = F.map_inner(lambda s: s.frac_diff_rl(a))
    spatial = F.outer_series(lambda s: s.diff().diff()).scale(k)
    kernel = GenPowerSeries.constant(1.0, "t").frac_diff_rl(a)
    source = BivariateSeries({mu: kernel.scale(c) for c, mu in p.f.terms}, "x", "t")
    r = lhs - spatial - source
    return Residual(tuple((c, px, pt) for c, px, pt in r.terms()), F.max_abs_coefficient())


def mass_first_moments(p: DiffusionProblem, t: float) -> tuple[float, float]:
    """Change of the x**0 and x**1 coefficients between f and the solution at t."""
    F = evolve(p, t)
    return F.coefficient(0.0) - p.f.coefficient(0.0), F.coefficient(1.0) - p.f.coefficient(1.0)
