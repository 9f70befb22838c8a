"""Double-double arithmetic on ``(hi, lo)`` float pairs.

Only the handful of error-free transformations the series kernels need.
No FMA on Python 3.10, so products use Dekker splitting.
"""

from __future__ import annotations

import math

DD = tuple[float, float]

# 2**-104; unit roundoff of a normalized double-double
U_DD = 4.93e-32
_SPLIT = 134217729.0  # 2**27 + 1
_SPLIT_LIMIT = 6.69692879491417e299  # 2**996


def two_sum(a: float, b: float) -> DD:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a: float, b: float) -> DD:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a: float) -> DD:
    if abs(a) > _SPLIT_LIMIT:
        a *= 3.7252902984e-09  # 2**-28
        t = _SPLIT * a
        hi = t - (t - a)
        return hi * 268435456.0, (a - hi) * 268435456.0
    t = _SPLIT * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> DD:
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def add(a: DD, b: DD) -> DD:
    s, e = two_sum(a[0], b[0])
    t, f = two_sum(a[1], b[1])
    e += t
    s, e = quick_two_sum(s, e)
    e += f
    return quick_two_sum(s, e)


def mul(a: DD, b: DD) -> DD:
    p, e = two_prod(a[0], b[0])
    e += a[0] * b[1] + a[1] * b[0]
    return quick_two_sum(p, e)


def mul_float(a: DD, b: float) -> DD:
    p, e = two_prod(a[0], b)
    e += a[1] * b
    return quick_two_sum(p, e)


def ldexp(a: DD, e: int) -> DD:
    return math.ldexp(a[0], e), math.ldexp(a[1], e)


def normalize_exponent(a: DD) -> tuple[DD, int]:
    """Rescale ``a`` so its high word lies in [0.5, 1); returns (mantissa, exponent)."""
    if a[0] == 0.0:
        return (0.0, 0.0), 0
    _, e = math.frexp(a[0])
    return (math.ldexp(a[0], -e), math.ldexp(a[1], -e)), e
