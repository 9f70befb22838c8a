"""Fractional two-variable Laguerre polynomials.

    L_n(x, y; alpha) = sum_{k=0}^{n} (-1)**k C(n, k) x**(alpha k) y**(n-k) / Gamma(1 + alpha k)

They evolve in y under the fractional Laguerre derivative
``-(1/alpha) D_x^alpha x d/dx`` from the initial value
``(-1)**n x**(n alpha) / Gamma(1 + n alpha)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegreeTooLarge, DivergentParameter, DomainError, TailNotNegligible
from .gamma import recip_gamma
from .mlf import MlfParams, WrightParams, mlf, wright
from .series import EPS, BivariateSeries, EvalResult, GenPowerSeries, Residual

__all__ = [
    "LaguerrePoly",
    "laguerre_poly",
    "laguerre_eval",
    "laguerre_derivative",
    "laguerre_ode_residual",
    "laguerre_gen_mlf_check",
    "laguerre_gen_wright_check",
]

MAX_DEGREE = 170


@dataclass(frozen=True)
class LaguerrePoly:
    """Coefficient table of L_n(x, y; alpha).

    ``coeffs[k]`` multiplies ``x**(alpha k) * y**(n-k)``.
    """

    n: int
    alpha: float
    coeffs: tuple[float, ...]

    def as_bivariate(self) -> BivariateSeries:
        return BivariateSeries.from_terms(
            ((c, self.alpha * k, self.n - k) for k, c in enumerate(self.coeffs)), "x", "y"
        )

    def in_x(self, y: float) -> GenPowerSeries:
        """The series in x at fixed y."""
        return GenPowerSeries(
            ((c * y ** (self.n - k), self.alpha * k) for k, c in enumerate(self.coeffs)), "x"
        )

    def to_dict(self) -> dict:
        return {"n": self.n, "alpha": self.alpha, "coeffs": [[k, c] for k, c in enumerate(self.coeffs)]}


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha!r}")


def laguerre_poly(n: int, alpha: float) -> LaguerrePoly:
    if n < 0 or int(n) != n:
        raise DomainError("degree must be a nonnegative integer")
    if n > MAX_DEGREE:
        raise DegreeTooLarge(f"degree {n} exceeds {MAX_DEGREE}")
    _check_alpha(alpha)
    n = int(n)
    # exact binomials keep the k = 0 and k = n entries exact
    if alpha == 1.0:
        coeffs = tuple((-1.0) ** k * (math.comb(n, k) / math.factorial(k)) for k in range(n + 1))
    else:
        coeffs = tuple((-1.0) ** k * float(math.comb(n, k)) * recip_gamma(1.0 + alpha * k) for k in range(n + 1))
    return LaguerrePoly(n, float(alpha), coeffs)


def laguerre_eval(L: LaguerrePoly, x: float, y: float) -> EvalResult:
    """Evaluate L_n at (x, y); x must be nonnegative unless alpha = 1."""
    x, y = float(x), float(y)
    if x < 0.0 and L.alpha != 1.0:
        raise DomainError("negative x needs an integer power of x (alpha = 1)")
    if L.alpha == 1.0:
        vals = [c * x**k * y ** (L.n - k) for k, c in enumerate(L.coeffs)]
    else:
        vals = [c * (x ** (L.alpha * k) if k else 1.0) * y ** (L.n - k) for k, c in enumerate(L.coeffs)]
    value = math.fsum(vals)
    abs_sum = math.fsum(abs(v) for v in vals)
    err = (L.n + 4.0) * EPS * abs_sum
    if L.alpha != 1.0 and x > 0.0:
        # the rounded exponent alpha*k is amplified by |ln x|
        err += EPS * abs(math.log(x)) * math.fsum(L.alpha * k * abs(v) for k, v in enumerate(vals))
    return EvalResult.from_terms(value, abs_sum, err)


def laguerre_derivative(s: GenPowerSeries, alpha: float) -> GenPowerSeries:
    """Apply ``-(1/alpha) D_x^alpha x d/dx`` term-wise (Riemann-Liouville D)."""
    _check_alpha(alpha)
    inner = s.diff() * GenPowerSeries.monomial(1.0, 1.0, s.var)
    return inner.frac_diff_rl(alpha).scale(-1.0 / alpha)


def laguerre_ode_residual(n: int, alpha: float) -> Residual:
    """Residual of ``d/dy L_n - D_L L_n`` over (x-exponent, y-power) terms.

    Also checks that the y = 0 entry of the table is exactly
    ``(-1)**n / Gamma(1 + n alpha)``; a mismatch raises ``AssertionError``.
    """
    L = laguerre_poly(n, alpha)
    initial = (-1.0) ** L.n * recip_gamma(1.0 + alpha * L.n)
    if L.coeffs[-1] != initial:
        raise AssertionError(f"initial-value entry {L.coeffs[-1]!r} differs from {initial!r}")
    p = L.as_bivariate()
    lhs = p.map_inner(lambda s: s.diff())
    rhs = p.outer_series(lambda s: laguerre_derivative(s, alpha))
    r = lhs - rhs
    return Residual(tuple((c, px, py) for c, px, py in r.terms()), max(abs(c) for c in L.coeffs))


def _tail_check(terms: list[float], rhs: float, tol: float, N: int) -> None:
    last = max(abs(t) for t in terms[-3:])
    if last > tol * max(abs(rhs), 1e-300):
        raise TailNotNegligible(f"generating-function tail {last:.3g} not negligible at N={N}")


def laguerre_gen_mlf_check(alpha: float, t: float, x: float, y: float, N: int = 60, tol: float = 1e-13):
    """Both sides of ``sum_n t**n L_n = E_alpha(-x**alpha t / (1 - y t)) / (1 - y t)``.

    Returns ``(lhs, rhs)``.

    Raises
    ------
    DivergentParameter
        When ``|y t| >= 1``.
    TailNotNegligible
        When the last partial-sum terms exceed ``tol * |rhs|``.
    """
    _check_alpha(alpha)
    if abs(y * t) >= 1.0:
        raise DivergentParameter(f"|y t| = {abs(y * t)!r} >= 1")
    if x < 0.0:
        raise DomainError("x must be nonnegative")
    d = 1.0 - y * t
    rhs = mlf(MlfParams(alpha), -(x**alpha) * t / d).value / d
    terms = [t**n * laguerre_eval(laguerre_poly(n, alpha), x, y).value for n in range(N + 1)]
    _tail_check(terms, rhs, tol, N)
    return math.fsum(terms), rhs


def laguerre_gen_wright_check(alpha: float, t: float, x: float, y: float, N: int = 60, tol: float = 1e-13):
    """Both sides of ``sum_n t**n/n! L_n = exp(y t) W_{1,alpha}(-x**alpha t)``.

    Returns ``(lhs, rhs)``; raises :class:`TailNotNegligible` when N is too
    small.
    """
    _check_alpha(alpha)
    if x < 0.0:
        raise DomainError("x must be nonnegative")
    rhs = math.exp(y * t) * wright(WrightParams(1.0, alpha), -(x**alpha) * t).value
    terms = []
    w = 1.0
    for n in range(N + 1):
        if n:
            w *= t / n
        terms.append(w * laguerre_eval(laguerre_poly(n, alpha), x, y).value)
    _tail_check(terms, rhs, tol, N)
    return math.fsum(terms), rhs
