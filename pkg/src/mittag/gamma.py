"""Gamma-function kernels: gamma, ln gamma and the entire reciprocal 1/gamma.

The double-precision routines wrap the C library (``math.gamma`` and
``math.lgamma``) behind the pole semantics the rest of the package relies
on.  :class:`CoefficientTable` supplies the extended-precision coefficients
``1 / (n!^f * Gamma(c + a + b*n))`` consumed by the double-double series
kernels; those are generated once per parameter set with mpmath.
"""

from __future__ import annotations

import math
import threading
from functools import lru_cache

import mpmath

from .errors import NonPositiveArgument, PoleArgument

__all__ = [
    "gamma",
    "recip_gamma",
    "ln_gamma",
    "sinpi",
    "CoefficientTable",
    "coefficient_table",
    "gamma_ratio",
]

# Above this Gamma overflows a double.
_GAMMA_OVERFLOW = 171.6


def _is_nonpositive_integer(mu: float) -> bool:
    return mu <= 0.0 and mu == math.floor(mu)


def sinpi(x: float) -> float:
    """sin(pi*x) with exact argument reduction, so zeros at integers are exact."""
    r = math.fmod(x, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r <= -1.0:
        r += 2.0
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def gamma(mu: float) -> float:
    """Gamma function for real ``mu`` off the poles.

    Raises :class:`PoleArgument` when ``mu`` is within one ulp of a
    nonpositive integer.
    """
    mu = float(mu)
    k = round(mu)
    if k <= 0 and abs(mu - k) <= math.ulp(float(k)):
        raise PoleArgument(f"gamma has a pole at {mu!r}")
    try:
        return math.gamma(mu)
    except OverflowError:
        # only reachable for huge mu or mu next to 0
        return math.inf if mu > 0.0 else math.copysign(math.inf, recip_gamma(mu))


def recip_gamma(mu: float) -> float:
    """Entire reciprocal gamma 1/Gamma(mu); exactly zero at 0, -1, -2, ..."""
    mu = float(mu)
    if math.isnan(mu):
        return math.nan
    if mu > 0.0:
        if mu.is_integer() and mu <= 200.0:
            return 1 / math.factorial(int(mu) - 1)  # int division: correctly rounded
        if mu < 1e-300:
            return mu / math.gamma(1.0 + mu)  # Gamma(mu) itself overflows here
        if mu < _GAMMA_OVERFLOW:
            return 1.0 / math.gamma(mu)
        return math.exp(-math.lgamma(mu))
    if _is_nonpositive_integer(mu):
        return 0.0
    # reflection: 1/Gamma(mu) = Gamma(1 - mu) sin(pi mu) / pi
    s = sinpi(mu)
    w = 1.0 - mu
    if w < _GAMMA_OVERFLOW:
        return math.gamma(w) * s / math.pi
    try:
        return math.copysign(math.exp(math.lgamma(w) + math.log(abs(s) / math.pi)), s)
    except OverflowError:
        return math.copysign(math.inf, s)


def ln_gamma(mu: float) -> float:
    """ln Gamma(mu) for mu > 0."""
    mu = float(mu)
    if not mu > 0.0:
        raise NonPositiveArgument(f"ln_gamma needs a positive argument, got {mu!r}")
    return math.lgamma(mu)


# -- extended-precision coefficient tables ---------------------------------

_HP = mpmath.MPContext()
_HP.prec = 128


def _scaled_dd(v) -> tuple[float, float, int]:
    if not v:
        return 0.0, 0.0, 0
    m, e = _HP.frexp(v)
    hi = float(m)
    lo = float(m - hi)
    return hi, lo, int(e)


class CoefficientTable:
    """Lazily grown table of ``(2n)!/(2n-m)! / (n!^f * Gamma(c + a + b*n))``.

    ``c`` is an exact integer offset and ``a``, ``b`` are doubles; the gamma
    argument is formed in 128-bit arithmetic so the coefficients carry no
    rounding from the parameter arithmetic.  Entries are scaled
    double-doubles ``(hi, lo, exponent)`` with ``hi`` in [0.5, 1), which
    keeps coefficients representable long after ``Gamma`` overflows.
    The falling-factorial prefactor (order ``m = even_falling``, default 0)
    serves the derivative series of ``E_alpha(-x**2)``.
    """

    def __init__(self, c: int, a: float, b: float, factorial: bool = False, even_falling: int = 0):
        self.c = int(c)
        self.a = float(a)
        self.b = float(b)
        self.factorial = factorial
        self.even_falling = int(even_falling)
        self._entries: list[tuple[float, float, int]] = []
        self._lock = threading.Lock()

    def _compute(self, n: int):
        arg = _HP.mpf(self.c) + _HP.mpf(self.a) + _HP.mpf(self.b) * n
        v = _HP.rgamma(arg)
        if self.factorial:
            v = v / _HP.factorial(n)
        m = self.even_falling
        if m:
            if 2 * n < m:
                return 0.0, 0.0, 0
            v = v * math.prod(range(2 * n - m + 1, 2 * n + 1))
        return _scaled_dd(v)

    def __getitem__(self, n: int) -> tuple[float, float, int]:
        entries = self._entries
        if n < len(entries):
            return entries[n]
        with self._lock:
            while len(self._entries) <= n:
                self._entries.append(self._compute(len(self._entries)))
        return self._entries[n]

    def argument(self, n: int) -> float:
        return self.c + self.a + self.b * n

    def log_envelope(self, n: int) -> float:
        """Upper bound on ln|coefficient n| from double-precision lgamma."""
        w = self.argument(n)
        if w > 0.0:
            out = -math.lgamma(w)
        else:
            # |1/Gamma(w)| = |sin(pi w)| Gamma(1-w)/pi <= Gamma(1-w)/pi
            out = math.lgamma(1.0 - w) - math.log(math.pi)
        if self.factorial:
            out -= math.lgamma(n + 1.0)
        m = self.even_falling
        if m:
            if 2 * n < m:
                return -math.inf
            out += math.lgamma(2.0 * n + 1.0) - math.lgamma(2.0 * n - m + 1.0)
        return out


@lru_cache(maxsize=512)
def coefficient_table(
    c: int, a: float, b: float, factorial: bool = False, even_falling: int = 0
) -> CoefficientTable:
    return CoefficientTable(c, a, b, factorial, even_falling)


def gamma_ratio(a: float, b: float) -> float:
    """Gamma(a) / Gamma(b), zero when ``b`` is a pole and ``a`` is not.

    Falls back to lgamma differences when either value would overflow.
    """
    if _is_nonpositive_integer(b):
        return 0.0
    if a < _GAMMA_OVERFLOW and b < _GAMMA_OVERFLOW:
        return gamma(a) * recip_gamma(b)
    if a > 0.0 and b > 0.0:
        return math.exp(math.lgamma(a) - math.lgamma(b))
    return gamma(a) * recip_gamma(b)
