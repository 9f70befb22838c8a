"""Double-exponential quadrature on finite, half-infinite and whole-line intervals.

The three interval kinds use the tanh-sinh, exp-sinh and sinh-sinh
substitutions respectively; the transformed integrand is summed with the
trapezoidal rule on a step that halves at every refinement level, so that
each level only evaluates the new odd nodes.  The estimate is declared
converged when two successive levels agree within tolerance, and the last
inter-level difference is reported as the error estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import NonFiniteSample

__all__ = ["QuadratureSpec", "QuadResult", "integrate"]

HALF_PI = 0.5 * math.pi
T_MAX = 6.5
MIN_LEVEL = 3
_KINDS = ("finite", "semi_infinite", "whole_line")


@dataclass(frozen=True)
class QuadratureSpec:
    """Interval kind with its bounds, tolerances and refinement limit.

    Use the :meth:`finite`, :meth:`semi_infinite` and :meth:`whole_line`
    constructors rather than filling ``kind`` by hand.
    """

    kind: str
    a: float = 0.0
    b: float = 0.0
    rel_tol: float = 1e-10
    abs_tol: float = 1e-15
    max_refinement_level: int = 10

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown interval kind {self.kind!r}")
        if not (0.0 < self.rel_tol < 1.0 and 0.0 < self.abs_tol < 1.0):
            raise ValueError("rel_tol and abs_tol must lie in (0, 1)")
        if not 1 <= self.max_refinement_level <= 12:
            raise ValueError("max_refinement_level must lie in 1..12")
        if self.kind == "finite" and not self.a < self.b:
            raise ValueError("finite interval needs a < b")

    @classmethod
    def finite(cls, a: float, b: float, **kw) -> "QuadratureSpec":
        return cls("finite", float(a), float(b), **kw)

    @classmethod
    def semi_infinite(cls, a: float = 0.0, **kw) -> "QuadratureSpec":
        return cls("semi_infinite", float(a), math.inf, **kw)

    @classmethod
    def whole_line(cls, **kw) -> "QuadratureSpec":
        return cls("whole_line", -math.inf, math.inf, **kw)


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    evaluations: int
    converged: bool

    def __float__(self) -> float:
        return self.value


def _node(interval: QuadratureSpec, t: float):
    """Abscissa and weight at ``t``; None once the node is unusable."""
    u = HALF_PI * math.sinh(t)
    if interval.kind == "finite":
        half = 0.5 * (interval.b - interval.a)
        try:
            # distance to the nearer endpoint, computed without cancellation
            e = math.exp(-2.0 * abs(u))
            delta = half * 2.0 * e / (1.0 + e)
            w = half * HALF_PI * math.cosh(t) * 4.0 * e / (1.0 + e) ** 2
        except OverflowError:
            return None
        x = interval.a + delta if t < 0.0 else interval.b - delta
        if t == 0.0:
            x = interval.a + half
        if not interval.a < x < interval.b or w == 0.0:
            return None
        return x, w
    if interval.kind == "semi_infinite":
        try:
            ex = math.exp(u)
        except OverflowError:
            return None
        x = interval.a + ex
        w = HALF_PI * math.cosh(t) * ex
        if x == interval.a or math.isinf(x) or w == 0.0:
            return None
        return x, w
    try:
        x = math.sinh(u)
        w = HALF_PI * math.cosh(t) * math.cosh(u)
    except OverflowError:
        return None
    if math.isinf(x) or math.isinf(w):
        return None
    return x, w


def integrate(f: Callable[[float], float], interval: QuadratureSpec) -> QuadResult:
    """Integrate ``f`` over the interval described by ``interval``.

    ``f`` may have integrable algebraic singularities at finite endpoints;
    it is never evaluated exactly at an endpoint.  Raises
    :class:`NonFiniteSample` if ``f`` returns NaN or infinity at a node.
    Failure to converge within ``interval.max_refinement_level`` levels is
    reported through ``converged=False`` with the best estimate.
    """
    evaluations = 0
    abs_total = 0.0

    def sweep(h: float, first: int, step: int, reference: float) -> float:
        nonlocal evaluations, abs_total
        total = 0.0
        for direction in (1, -1):
            k = first if direction == 1 else -first
            if direction == -1 and first == 0:
                k = -step
            quiet = 0
            while True:
                t = k * h
                if abs(t) > T_MAX:
                    break
                node = _node(interval, t)
                if node is None:
                    break
                x, w = node
                v = f(x)
                evaluations += 1
                if not math.isfinite(v):
                    raise NonFiniteSample(f"integrand returned {v!r} at x={x!r}")
                c = w * v
                total += c
                abs_total += abs(c)
                scale = max(interval.rel_tol * abs(reference + total * h), interval.abs_tol) / h
                if abs(c) <= 0.01 * scale and abs(t) > 0.5:
                    quiet += 1
                    if quiet >= 2:
                        break
                else:
                    quiet = 0
                k += direction * step
        return total

    h = 1.0
    acc = sweep(h, 0, 1, 0.0)
    prev = acc * h
    err = math.inf
    for level in range(1, interval.max_refinement_level + 1):
        h *= 0.5
        acc += sweep(h, 1, 2, prev)
        est = acc * h
        err = abs(est - prev)
        if level >= MIN_LEVEL and err <= max(interval.rel_tol * abs(est), interval.abs_tol):
            rounding = 1e-15 * abs_total * h
            return QuadResult(est, err + rounding, evaluations, True)
        prev = est
    return QuadResult(prev, err, evaluations, False)
