"""Double-double summation of entire power series ``sum c_n z**n``.

Coefficients come from a :class:`~mittag.gamma.CoefficientTable`; powers
of ``z`` are formed in scaled double-double so that the alternating sums
of the Mittag-Leffler, Wright and stable-density series can lose up to
~30 digits to cancellation before the double result is affected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _dd
from .errors import MaxTermsExceeded
from .gamma import CoefficientTable


@dataclass(frozen=True)
class SeriesSum:
    hi: float
    lo: float
    abs_sum: float
    rounding_error: float
    tail_bound: float
    n_terms: int

    @property
    def abs_error(self) -> float:
        return self.rounding_error + self.tail_bound + 0.5 * math.ulp(self.hi)


def _first_regular_index(table: CoefficientTable) -> int:
    """Index after which the coefficient envelope is log-concave."""
    base = table.c + table.a
    b = table.b
    if b > 0.0:
        return max(0, math.ceil((2.0 - base) / b))
    if b < 0.0:
        return max(0, math.ceil((base + 1.0) / -b))
    return 0


def sum_series(
    table: CoefficientTable,
    z: float,
    tol: float,
    max_terms: int,
    start: int = 0,
) -> SeriesSum:
    """Sum ``sum_{n >= start} table[n] * z**(n - start)``.

    Summation stops once the coefficient envelope is decreasing, past its
    peak, and the geometric bound on the remaining tail is below
    ``tol * |partial sum|`` (with a factor 64 to spare).  Truncation is
    never looser than 1e-15 relative: the extra terms are cheap and a loose
    ``tol`` is meant as a refusal threshold, not an accuracy target.
    """
    tail_tol = min(tol, 1e-15) / 64.0
    z = float(z)
    if z == 0.0 or math.isinf(z):
        if z == 0.0:
            ch, cl, ce = table[start]
            hi, lo = _dd.ldexp((ch, cl), ce)
            return SeriesSum(hi, lo, abs(hi), 0.0, 0.0, 1)
        raise OverflowError("infinite series argument")

    zm, ze = math.frexp(z)
    logz = math.log(abs(z))
    p, pe = (1.0, 0.0), 0
    s = (0.0, 0.0)
    abs_sum = 0.0
    regular = max(_first_regular_index(table), start)
    env = table.log_envelope
    peak = -math.inf
    n = start
    while True:
        if n - start >= max_terms:
            raise MaxTermsExceeded(f"series not converged after {max_terms} terms (z={z!r})")
        ch, cl, ce = table[n]
        if ch != 0.0:
            t = _dd.mul((ch, cl), p)
            try:
                th, tl = _dd.ldexp(t, ce + pe)
            except OverflowError:
                th = math.inf
            if math.isinf(th):
                raise OverflowError(f"series term exceeds the double range at n={n} (z={z!r})")
            s = _dd.add(s, (th, tl))
            abs_sum += abs(th)
        ln_env = (n - start) * logz + env(n)
        peak = max(peak, ln_env)
        if n >= regular:
            l1 = (n + 1 - start) * logz + env(n + 1)
            l2 = (n + 2 - start) * logz + env(n + 2)
            if l1 < ln_env and l2 < l1 and ln_env < peak and l1 < 700.0:
                r = math.exp(l2 - l1)
                tail = math.exp(l1) / (1.0 - r)
                if tail <= tail_tol * abs(s[0]) or (s[0] == 0.0 and tail <= 1e-300):
                    count = n + 1 - start
                    rounding = (2.0 * count + 4.0) * _dd.U_DD * abs_sum
                    return SeriesSum(s[0], s[1], abs_sum, rounding, tail, count)
        p = _dd.mul_float(p, zm)
        pe += ze
        p, e = _dd.normalize_exponent(p)
        pe += e
        n += 1
