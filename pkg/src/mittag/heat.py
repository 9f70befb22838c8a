"""Fractional heat polynomials.

    H_n(x, y; alpha) = n! * sum_{m=0}^{n//2} x**(n-2m) y**m / ((n-2m)! Gamma(1 + alpha m))

They are the image of ``x**n`` under the evolution operator
``E_alpha(y d^2/dx^2)`` and reduce to the classical heat polynomials at
alpha = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegreeTooLarge, DomainError, TailNotNegligible
from .gamma import recip_gamma
from .mlf import MlfParams, mlf
from .series import EPS, BivariateSeries, EvalResult, GenPowerSeries, Residual

__all__ = [
    "HeatPoly",
    "heat_poly",
    "heat_poly_eval",
    "heat_gen_function_check",
    "appell_recurrence_x",
    "appell_recurrence_y",
    "expand_in_heat_basis",
]

MAX_DEGREE = 170


@dataclass(frozen=True)
class HeatPoly:
    """Coefficient table of H_n(x, y; alpha).

    ``coeffs[m]`` multiplies ``x**(n-2m) * y**m``.
    """

    n: int
    alpha: float
    coeffs: tuple[float, ...]

    def as_bivariate(self) -> BivariateSeries:
        return BivariateSeries.from_terms(
            ((c, self.n - 2 * m, m) for m, c in enumerate(self.coeffs)), "x", "y"
        )

    def as_bivariate_tau(self) -> BivariateSeries:
        """Terms ``x**(n-2m) tau**(alpha m)``, i.e. the polynomial at ``y = tau**alpha``."""
        return BivariateSeries.from_terms(
            ((c, self.n - 2 * m, self.alpha * m) for m, c in enumerate(self.coeffs)), "x", "tau"
        )

    def in_x(self, y: float) -> GenPowerSeries:
        """The polynomial in x at fixed y."""
        return GenPowerSeries(((c * y**m, self.n - 2 * m) for m, c in enumerate(self.coeffs)), "x")

    def to_dict(self) -> dict:
        return {"n": self.n, "alpha": self.alpha, "coeffs": [[m, c] for m, c in enumerate(self.coeffs)]}


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha!r}")


def heat_coefficient(n: int, m: int, alpha: float) -> float:
    """n! / ((n-2m)! Gamma(1 + alpha m)).

    The falling factorial is an exact integer (below 2**1024 for n <= 170),
    so the only roundings are its conversion and the reciprocal gamma.
    """
    if m == 0:
        return 1.0
    falling = math.perm(n, 2 * m)
    if alpha == 1.0:
        return falling / math.factorial(m)  # exact rational, correctly rounded
    return float(falling) * recip_gamma(1.0 + alpha * m)


def heat_poly(n: int, alpha: float) -> HeatPoly:
    if n < 0 or int(n) != n:
        raise DomainError("degree must be a nonnegative integer")
    if n > MAX_DEGREE:
        raise DegreeTooLarge(f"degree {n} exceeds {MAX_DEGREE}")
    _check_alpha(alpha)
    n = int(n)
    return HeatPoly(n, float(alpha), tuple(heat_coefficient(n, m, alpha) for m in range(n // 2 + 1)))


def heat_poly_eval(h: HeatPoly, x: float, y: float) -> EvalResult:
    x, y = float(x), float(y)
    vals = [c * x ** (h.n - 2 * m) * y**m for m, c in enumerate(h.coeffs)]
    value = math.fsum(vals)
    abs_sum = math.fsum(abs(v) for v in vals)
    return EvalResult.from_terms(value, abs_sum, (h.n + 3.0) * EPS * abs_sum)


def heat_gen_function_check(alpha: float, xi: float, x: float, y: float, N: int = 60, tol: float = 1e-13):
    """Both sides of the generating function identity, truncated at degree N.

    Returns ``(lhs, rhs)`` with ``lhs = sum_{n<=N} xi**n/n! H_n(x, y)`` and
    ``rhs = E_alpha(xi**2 y) exp(xi x)``.  Raises
    :class:`TailNotNegligible` when the next terms are not below
    ``tol * |rhs|``.
    """
    _check_alpha(alpha)
    rhs = mlf(MlfParams(alpha), xi * xi * y).value * math.exp(xi * x)
    terms = []
    w = 1.0
    for n in range(N + 1):
        if n:
            w *= xi / n
        terms.append(w * heat_poly_eval(heat_poly(n, alpha), x, y).value)
    lhs = math.fsum(terms)
    last = max(abs(t) for t in terms[-3:])
    if last > tol * max(abs(rhs), 1e-300):
        raise TailNotNegligible(f"generating-function tail {last:.3g} not negligible at N={N}")
    return lhs, rhs


def appell_recurrence_x(h: HeatPoly) -> Residual:
    """Residual of d/dx H_n - n H_{n-1}, coefficient-wise over (x, y) monomials."""
    if h.n < 1:
        raise DomainError("the x-recurrence needs n >= 1")
    p = h.as_bivariate()
    lhs = p.outer_series(lambda s: s.diff())
    rhs = heat_poly(h.n - 1, h.alpha).as_bivariate().scale(float(h.n))
    r = lhs - rhs
    return Residual(tuple((c, px, py) for c, px, py in r.terms()), max(abs(c) for c in h.coeffs))


def appell_recurrence_y(h: HeatPoly) -> Residual:
    """Residual of the fractional recurrence in the second variable.

    With ``y = tau**alpha`` the polynomial is a series in ``tau`` with
    exponents ``alpha*m``, and the Riemann-Liouville derivative in tau
    satisfies

        D_tau^alpha H_n = n(n-1) H_{n-2} + tau**(-alpha)/Gamma(1-alpha) x**n

    (the same correspondence as ``y = k t**alpha`` in the diffusion
    equation).  The residual is returned over (x-power, tau-exponent)
    terms; ``H_{n-2}`` is taken as zero for n < 2.
    """
    a = h.alpha
    p = h.as_bivariate_tau()
    lhs = p.map_inner(lambda s: s.frac_diff_rl(a))
    source = BivariateSeries(
        {float(h.n): GenPowerSeries.constant(1.0, "tau").frac_diff_rl(a)}, "x", "tau"
    )
    r = lhs - source
    if h.n >= 2:
        r = r - heat_poly(h.n - 2, a).as_bivariate_tau().scale(float(h.n * (h.n - 1)))
    return Residual(tuple((c, px, pt) for c, px, pt in r.terms()), max(abs(c) for c in h.coeffs))


def expand_in_heat_basis(a: Sequence[float], alpha: float, x: float, y: float, N: int | None = None) -> EvalResult:
    """sum_{n<N} a_n H_n(x, y; alpha)."""
    if N is None:
        N = len(a)
    if N > len(a):
        raise DomainError(f"N={N} exceeds the {len(a)} coefficients supplied")
    vals = []
    err = 0.0
    for n in range(N):
        if a[n] == 0.0:
            continue
        r = heat_poly_eval(heat_poly(n, alpha), x, y)
        vals.append(a[n] * r.value)
        err += abs(a[n]) * r.abs_error_estimate
    value = math.fsum(vals)
    abs_sum = math.fsum(abs(v) for v in vals)
    return EvalResult.from_terms(value, abs_sum, err + 2.0 * EPS * abs_sum)
