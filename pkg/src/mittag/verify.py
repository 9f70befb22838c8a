"""Identity-verification suites run by ``mittag verify``.

Each check evaluates an identity over a fixed grid and reports the worst
error against its tolerance.  Everything is deterministic: fixed grids, no
randomness, fixed output formatting.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, TextIO

from .diffusion import DiffusionProblem, evolve, ffp_residual, mass_first_moments
from . import _entire
from .errors import CancellationLoss
from .gamma import coefficient_table, gamma, recip_gamma
from .heat import appell_recurrence_x, appell_recurrence_y, heat_gen_function_check, heat_poly, heat_poly_eval
from .laguerre import laguerre_gen_mlf_check, laguerre_gen_wright_check, laguerre_ode_residual, laguerre_poly
from .levy import (
    LevyDensity,
    SubordinationKernel,
    kernel_normalization,
    levy_normalization,
    levy_pdf,
    levy_pdf_half,
    subordinate_heat_poly,
    subordination_kernel,
)
from .mlf import (
    MlfParams,
    WrightParams,
    mlf,
    mlf_gaussian_deriv,
    mlf_gaussian_integral,
    mlf_gaussian_integral_closed_form,
    wright,
    wright_deriv,
    wright_gaussian_integral,
    wright_gaussian_integral_closed_form,
)
from .series import GenPowerSeries

__all__ = ["Check", "SUITES", "run_suite", "format_report"]


@dataclass(frozen=True)
class Check:
    name: str
    grid: str
    max_error: float
    tol: float

    @property
    def passed(self) -> bool:
        return math.isfinite(self.max_error) and self.max_error <= self.tol


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b) if b != 0.0 else abs(a)


def _linspace(a: float, b: float, n: int) -> list[float]:
    return [a + (b - a) * i / (n - 1) for i in range(n)]


def _central(f: Callable[[float], float], x: float, h: float = 1e-4) -> float:
    return (f(x + h) - f(x - h)) / (2.0 * h)


# -- gamma --------------------------------------------------------------------


def _gamma_checks() -> Iterable[Check]:
    mus = [(i + 0.5) / 100 for i in range(100)]
    err = max(abs(gamma(m) * gamma(1 - m) * math.sin(math.pi * m) / math.pi - 1.0) for m in mus)
    yield Check("gamma reflection", "mu in (0,1), 100 pts", err, 1e-12)
    err = max(_rel(gamma(m + 1.0), m * gamma(m)) for m in _linspace(0.1, 50.0, 200))
    yield Check("gamma recurrence", "mu in [0.1,50], 200 pts", err, 1e-13)
    err = max(abs(recip_gamma(n + 1.0) * math.factorial(n) - 1.0) for n in range(21))
    yield Check("recip_gamma(n+1) n! = 1", "n = 0..20", err, 1e-14)
    err = max(abs(recip_gamma(-float(k))) for k in range(50))
    yield Check("recip_gamma zeros at poles", "mu = 0..-49", err, 0.0)
    # 1/Gamma(-k + d) = (-1)^k k! d (1 + O(d log k)): continuous, vanishing linearly
    err = 0.0
    for k, d in itertools.product(range(11), (-1e-8, 1e-8)):
        mu = -k + d
        err = max(err, abs(recip_gamma(mu) / ((-1) ** k * math.factorial(k) * (mu + k)) - 1.0))
    yield Check("recip_gamma linear through poles", "k <= 10, +-1e-8", err, 1e-6)


# -- mlf ----------------------------------------------------------------------


def _mlf_checks() -> Iterable[Check]:
    ys = _linspace(-5.0, 20.0, 101)
    err = max(abs(mlf(1.0, y).value - math.exp(y)) / math.exp(y) for y in ys)
    yield Check("E_1 = exp", "y in [-5,20], 101 pts", err, 1e-12)
    zs = _linspace(-3.0, 3.0, 61)
    err = max(_rel(mlf(0.5, z).value, math.exp(z * z) * math.erfc(-z)) for z in zs)
    yield Check("E_1/2(z) = exp(z^2) erfc(-z)", "z in [-3,3], 61 pts", err, 1e-10)
    err = 0.0
    for a, y in itertools.product((0.3, 0.5, 0.8), (-2.0, -0.5, 0.5, 3.0)):
        shifted = _entire.sum_series(coefficient_table(1, a, a), y, 1e-16, 10000).hi
        err = max(err, _rel(1.0 + y * shifted, mlf(a, y).value))
    yield Check("E_a term-shift resummation", "a in {.3,.5,.8}, 4 y", err, 1e-12)
    err = 0.0
    for a, x in itertools.product((0.5, 0.8), (0.0, 0.3, 1.5)):
        err = max(err, abs(mlf_gaussian_deriv(a, 0, x).value - mlf(a, -(x * x)).value))
    yield Check("Gaussian derivative n=0 = E_a(-x^2)", "a in {.5,.8}, 3 x", err, 0.0)
    err = 0.0
    for a, n, x in itertools.product((0.5, 0.8), (1, 2, 3), (0.3, 0.7, 1.5)):
        fd = _central(lambda v: mlf_gaussian_deriv(a, n - 1, v).value, x)
        err = max(err, _rel(mlf_gaussian_deriv(a, n, x).value, fd))
    yield Check("Gaussian derivative series vs central FD", "n=1..3, a in {.5,.8}, 3 x", err, 1e-5)
    err = max(
        _rel(mlf_gaussian_integral(a).value, mlf_gaussian_integral_closed_form(a)) for a in (0.25, 0.5, 0.75, 0.9)
    )
    yield Check("int E_a(-x^2) = pi/Gamma(1-a/2)", "a in {.25,.5,.75,.9}", err, 1e-8)


# -- wright -------------------------------------------------------------------


def _wright_checks() -> Iterable[Check]:
    err = max(
        _rel(wright(WrightParams(a, b), 0.0).value, recip_gamma(a)) for a, b in itertools.product((0.5, 1.0, 2.5), (0.3, 1.0))
    )
    yield Check("W(0) = 1/Gamma(a)", "6 (a,b)", err, 1e-15)
    err = 0.0
    for (a, b), m, x in itertools.product(((1.0, 0.5), (1.0, 1.0), (1.5, 0.3)), (1, 2, 3), (-1.0, 0.3, 2.0)):
        p = WrightParams(a, b)
        fd = _central(lambda v: wright_deriv(p, m - 1, v).value, x)
        err = max(err, _rel(wright_deriv(p, m, x).value, fd))
    yield Check("Wright derivative shift vs central FD", "m=1..3, 3 (a,b), 3 x", err, 1e-5)
    err = 0.0
    for x in (-2.0, -0.5, 0.0, 1.0):
        p = WrightParams(1.0, 0.5)
        err = max(err, abs(wright_deriv(p, 0, x).value - wright(p, x).value))
    yield Check("Wright derivative m=0 = W", "4 x", err, 0.0)
    err = max(
        _rel(wright_gaussian_integral(a, b).value, wright_gaussian_integral_closed_form(a, b))
        for a, b in ((1.0, 0.5), (1.5, 0.5), (1.0, 1.0 / 3.0))
    )
    yield Check("int W(-x^2) = sqrt(pi)/Gamma(a-b/2)", "3 (a,b)", err, 1e-8)


# -- heat ---------------------------------------------------------------------


def _heat_checks() -> Iterable[Check]:
    err = 0.0
    for a, xi, x, y in itertools.product((0.3, 0.5, 1.0), (0.1, 0.25, 0.4), (-1.0, 0.0, 2.0), (0.5, 1.0, 2.0)):
        lhs, rhs = heat_gen_function_check(a, xi, x, y, 60)
        err = max(err, _rel(lhs, rhs))
    yield Check("heat generating function", "81-point grid, N=60", err, 1e-9)
    err = max(
        appell_recurrence_x(heat_poly(n, a)).relative for a in (0.3, 0.5, 0.8, 1.0) for n in range(1, 16)
    )
    yield Check("Appell recurrence in x", "n=1..15, 4 a", err, 1e-12)
    err = max(appell_recurrence_y(heat_poly(n, a)).relative for a in (0.3, 0.5, 0.8) for n in range(16))
    yield Check("fractional recurrence in y", "n=0..15, 3 a", err, 1e-12)
    err = 0.0
    for n in range(21):
        h = heat_poly(n, 1.0)
        for m, c in enumerate(h.coeffs):
            exact = math.factorial(n) / (math.factorial(n - 2 * m) * math.factorial(m))
            err = max(err, _rel(c, exact))
    yield Check("a=1 classical coefficients", "n <= 20", err, 1e-13)
    err = 0.0
    for n, a, x, y in itertools.product(range(9), (0.3, 0.7), (0.5, 1.7), (0.0, 1.5)):
        h = heat_poly(n, a)
        err = max(err, abs(heat_poly_eval(h, -x, y).value - (-1) ** n * heat_poly_eval(h, x, y).value))
        if y == 0.0:
            err = max(err, abs(heat_poly_eval(h, x, 0.0).value - x**n))
    yield Check("parity and H_n(x,0) = x^n", "n <= 8", err, 0.0)


# -- levy ---------------------------------------------------------------------


def _levy_checks() -> Iterable[Check]:
    us = [0.1 * 100.0 ** (i / 60) for i in range(61)]
    d = LevyDensity(0.5)
    err = max(_rel(levy_pdf(d, u).value, levy_pdf_half(u)) for u in us)
    yield Check("g_1/2 series vs closed form", "u in [0.1,10], 61 pts", err, 1e-10)
    neg = 0.0
    for a in (0.3, 0.5, 0.7):
        da = LevyDensity(a)
        for i in range(41):
            u = 0.05 * 1000.0 ** (i / 40)
            try:
                neg = max(neg, -levy_pdf(da, u).value)
            except CancellationLoss:
                pass  # refused: no value was returned
    yield Check("g_a >= 0 where evaluated", "u in [0.05,50], 3 a", neg, 0.0)
    err = max(abs(levy_normalization(a).value - 1.0) for a in (0.3, 0.5, 0.7))
    yield Check("int g_a = 1", "a in {.3,.5,.7}", err, 1e-7)
    err = max(abs(kernel_normalization(a, t).value - 1.0) for a in (0.3, 0.5, 0.7) for t in (0.5, 1.0, 2.0))
    yield Check("int n_a(s,t) ds = 1", "3 a x 3 t", err, 1e-7)
    err = max(subordination_kernel(SubordinationKernel(0.5, t), 20.0 * math.sqrt(t)).value for t in (0.5, 1.0, 2.0))
    yield Check("n_1/2 decay at s = 20 sqrt(t)", "t in {.5,1,2}", err, 1e-12)
    for a, tol in ((0.5, 1e-6), (0.3, 1e-4), (0.7, 1e-4)):
        err = 0.0
        for n, x, t in itertools.product(range(7), (0.0, 1.0, -1.0, 2.0), (0.5, 1.0, 2.0)):
            q = subordinate_heat_poly(a, n, x, t)
            exact = heat_poly_eval(heat_poly(n, a), x, t**a).value
            err = max(err, _rel(q.value, exact) if q.converged else math.inf)
        yield Check(f"subordination identity a={a}", "n<=6, 4 x, 3 t", err, tol)


# -- laguerre -----------------------------------------------------------------


def _laguerre_checks() -> Iterable[Check]:
    err = max(laguerre_ode_residual(n, a).relative for a in (0.3, 0.5, 0.8) for n in range(11))
    yield Check("Laguerre evolution residual", "n<=10, 3 a", err, 1e-12)
    err = 0.0
    for a, n in itertools.product((0.3, 0.5, 0.8), range(11)):
        L = laguerre_poly(n, a)
        err = max(err, abs(L.coeffs[-1] - (-1.0) ** n * recip_gamma(1.0 + n * a)), abs(L.coeffs[0] - 1.0))
    yield Check("Laguerre y=0 and x=0 table entries", "n<=10, 3 a", err, 0.0)
    for name, fn in (("E_a", laguerre_gen_mlf_check), ("Wright", laguerre_gen_wright_check)):
        err = 0.0
        for a, t, x, y in itertools.product((0.5, 0.8), (-0.25, -0.1, 0.1, 0.25), (0.0, 1.0), (0.5, 1.0)):
            lhs, rhs = fn(a, t, x, y, 60)
            err = max(err, _rel(lhs, rhs))
        yield Check(f"Laguerre generating function ({name})", "N=60, 32 pts", err, 1e-9)


# -- diffusion ----------------------------------------------------------------


def _diffusion_checks() -> Iterable[Check]:
    err = 0.0
    for a, k, n in itertools.product((0.3, 0.5, 0.8), (0.5, 1.0), range(13)):
        err = max(err, ffp_residual(DiffusionProblem(a, k, GenPowerSeries.monomial(1.0, n))).relative)
    yield Check("fractional Fokker-Planck residual", "n<=12, 3 a, 2 k", err, 1e-12)
    f = GenPowerSeries.polynomial([1.0, -2.0, 0.5, 3.0, 0.0, 1.25])
    same = evolve(DiffusionProblem(0.5, 1.0, f), 0.0) == f
    yield Check("evolve at t=0 returns f", "degree-5 f", 0.0 if same else math.inf, 0.0)
    err = 0.0
    for n, k, t in itertools.product(range(11), (0.5, 1.0), (0.3, 2.0)):
        F = evolve(DiffusionProblem(1.0, k, GenPowerSeries.monomial(1.0, n)), t)
        for m in range(n // 2 + 1):
            exact = math.factorial(n) / (math.factorial(n - 2 * m) * math.factorial(m)) * (k * t) ** m
            err = max(err, _rel(F.coefficient(float(n - 2 * m)), exact))
    yield Check("a=1 classical heat limit", "n<=10", err, 1e-13)
    err = 0.0
    for f in (GenPowerSeries.constant(1.0), GenPowerSeries.polynomial([0.5, -2.0])):
        err = max(err, *map(abs, mass_first_moments(DiffusionProblem(0.6, 1.0, f), 1.7)))
    yield Check("degree <= 1 data unchanged", "2 f", err, 0.0)
    err = 0.0
    for n, x, t in itertools.product(range(7), (0.0, 1.0, 2.0), (0.5, 1.0, 2.0)):
        F = evolve(DiffusionProblem(0.5, 1.0, GenPowerSeries.monomial(1.0, n)), t).eval(x).value
        q = subordinate_heat_poly(0.5, n, x, t)
        err = max(err, _rel(q.value, F) if F != 0.0 else abs(q.value))
    yield Check("evolve vs subordination (a=1/2)", "n<=6, 3 x, 3 t", err, 1e-6)


SUITES: dict[str, Callable[[], Iterable[Check]]] = {
    "gamma": _gamma_checks,
    "mlf": _mlf_checks,
    "wright": _wright_checks,
    "heat": _heat_checks,
    "levy": _levy_checks,
    "laguerre": _laguerre_checks,
    "diffusion": _diffusion_checks,
}


def run_suite(name: str = "all", tol: float | None = None) -> list[tuple[str, Check]]:
    """Run one suite (or ``"all"``); ``tol`` overrides every tolerance."""
    names = list(SUITES) if name == "all" else [name]
    out = []
    for n in names:
        for c in SUITES[n]():
            if tol is not None:
                c = Check(c.name, c.grid, c.max_error, tol)
            out.append((n, c))
    return out


def format_report(results: list[tuple[str, Check]], stream: TextIO) -> bool:
    """Write the report table; returns True when every check passed."""
    stream.write(f"{'suite':<10} {'identity':<42} {'grid':<28} {'max_error':>10} {'tol':>9}  result\n")
    for suite, c in results:
        stream.write(
            f"{suite:<10} {c.name:<42} {c.grid:<28} {c.max_error:>10.3e} {c.tol:>9.1e}  "
            f"{'PASS' if c.passed else 'FAIL'}\n"
        )
    failed = sum(not c.passed for _, c in results)
    stream.write(f"{len(results)} checks, {failed} failed\n")
    return failed == 0
