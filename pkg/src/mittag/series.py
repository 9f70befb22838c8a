"""Generalized power series with real exponents.

:class:`GenPowerSeries` is a finite sum of terms ``c * x**mu`` and carries
every polynomial and truncated series in the package.  Besides ring
operations it supports term-wise ordinary and Riemann-Liouville fractional
differentiation, which turns the recurrence and evolution-equation checks
into exact coefficient bookkeeping.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DomainError, ExponentOutOfRange, VariableMismatch
from .gamma import gamma_ratio

__all__ = [
    "EvalResult",
    "GenPowerSeries",
    "BivariateSeries",
    "Residual",
    "add",
    "scale",
    "multiply",
    "diff",
    "frac_diff_rl",
    "evaluate",
]

EPS = 2.0**-52
TINY = 1e-300
EXPONENT_RTOL = 1e-12


@dataclass(frozen=True)
class EvalResult:
    """A value with an absolute error estimate and a cancellation condition.

    ``cancellation_condition`` is ``sum(|terms|) / max(|value|, tiny)``,
    clipped below at 1.
    """

    value: float
    abs_error_estimate: float
    cancellation_condition: float = 1.0

    def __post_init__(self):
        if not self.abs_error_estimate >= 0.0:
            object.__setattr__(self, "abs_error_estimate", abs(self.abs_error_estimate))
        if not self.cancellation_condition >= 1.0:
            object.__setattr__(self, "cancellation_condition", 1.0)

    @classmethod
    def from_terms(cls, value: float, abs_sum: float, abs_error: float) -> "EvalResult":
        return cls(value, abs_error, abs_sum / max(abs(value), TINY))

    def __float__(self) -> float:
        return self.value


def _same_exponent(m1: float, m2: float) -> bool:
    return abs(m1 - m2) <= EXPONENT_RTOL * max(1.0, abs(m1))


def _snap(mu: float) -> float:
    # exponents produced by arithmetic on alpha land a few ulps off integers
    r = round(mu)
    return float(r) if _same_exponent(mu, r) else mu


def _normalize(terms: Iterable[tuple[float, float]]) -> tuple[tuple[float, float], ...]:
    items = sorted(((_snap(float(mu)), float(c)) for c, mu in terms), key=lambda t: t[0])
    merged: list[tuple[float, list[float]]] = []
    for mu, c in items:
        if merged and _same_exponent(merged[-1][0], mu):
            merged[-1][1].append(c)
        else:
            merged.append((mu, [c]))
    out = []
    for mu, cs in merged:
        c = math.fsum(cs) if len(cs) > 1 else cs[0]
        if abs(c) > TINY:
            out.append((c, mu))
    return tuple(out)


@dataclass(frozen=True, init=False)
class GenPowerSeries:
    """Finite sum of ``(coefficient, exponent)`` terms in one variable.

    Terms are kept normalized: exponents strictly increasing, exponents
    within a relative 1e-12 merged, and only true underflow (|c| <= 1e-300)
    pruned.  An empty term tuple is the zero series.
    """

    var: str
    terms: tuple[tuple[float, float], ...]

    def __init__(self, terms: Iterable[tuple[float, float]] = (), var: str = "x"):
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "terms", _normalize(terms))

    @classmethod
    def monomial(cls, coefficient: float, exponent: float, var: str = "x") -> "GenPowerSeries":
        return cls([(coefficient, exponent)], var)

    @classmethod
    def constant(cls, c: float, var: str = "x") -> "GenPowerSeries":
        return cls([(c, 0.0)], var)

    @classmethod
    def polynomial(cls, coefficients: Iterable[float], var: str = "x") -> "GenPowerSeries":
        """From ascending coefficients ``c0, c1, ...``."""
        return cls([(c, float(k)) for k, c in enumerate(coefficients)], var)

    # -- inspection ---------------------------------------------------------

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def exponents(self) -> tuple[float, ...]:
        return tuple(mu for _, mu in self.terms)

    def coefficient(self, exponent: float) -> float:
        for c, mu in self.terms:
            if _same_exponent(mu, exponent):
                return c
        return 0.0

    def max_abs_coefficient(self) -> float:
        return max((abs(c) for c, _ in self.terms), default=0.0)

    def has_integer_exponents(self) -> bool:
        return all(mu == math.floor(mu) and mu >= 0 for _, mu in self.terms)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "GenPowerSeries") -> None:
        if other.var != self.var:
            raise VariableMismatch(f"cannot combine series in {self.var!r} and {other.var!r}")

    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = GenPowerSeries.constant(other, self.var)
        if not isinstance(other, GenPowerSeries):
            return NotImplemented
        self._check(other)
        return GenPowerSeries(self.terms + other.terms, self.var)

    __radd__ = __add__

    def __neg__(self) -> "GenPowerSeries":
        return GenPowerSeries([(-c, mu) for c, mu in self.terms], self.var)

    def __sub__(self, other):
        if isinstance(other, (int, float)):
            other = GenPowerSeries.constant(other, self.var)
        if not isinstance(other, GenPowerSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: float) -> "GenPowerSeries":
        return GenPowerSeries([(c * factor, mu) for c, mu in self.terms], self.var)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(float(other))
        if not isinstance(other, GenPowerSeries):
            return NotImplemented
        self._check(other)
        return GenPowerSeries(
            [(c1 * c2, m1 + m2) for c1, m1 in self.terms for c2, m2 in other.terms], self.var
        )

    __rmul__ = __mul__

    def shift(self, mu: float) -> "GenPowerSeries":
        """Multiply by ``var**mu``."""
        return GenPowerSeries([(c, m + mu) for c, m in self.terms], self.var)

    # -- calculus -----------------------------------------------------------

    def diff(self) -> "GenPowerSeries":
        return GenPowerSeries([(c * mu, mu - 1.0) for c, mu in self.terms if mu != 0.0], self.var)

    def frac_diff_rl(self, alpha: float) -> "GenPowerSeries":
        """Term-wise Riemann-Liouville derivative of order ``alpha`` in (0, 1].

        ``x**mu -> Gamma(mu+1)/Gamma(mu+1-alpha) * x**(mu-alpha)``; a term
        whose target gamma argument is a pole drops out.
        """
        if not 0.0 < alpha <= 1.0:
            raise DomainError(f"fractional order must lie in (0, 1], got {alpha!r}")
        out = []
        for c, mu in self.terms:
            if mu <= -1.0:
                raise ExponentOutOfRange(f"exponent {mu!r} <= -1 in {self.var!r}")
            out.append((c * gamma_ratio(mu + 1.0, mu + 1.0 - alpha), mu - alpha))
        return GenPowerSeries(out, self.var)

    # -- evaluation ---------------------------------------------------------

    def eval(self, x: float) -> EvalResult:
        x = float(x)
        if x <= 0.0:
            for _, mu in self.terms:
                if mu < 0.0 and x == 0.0:
                    raise DomainError(f"negative exponent {mu!r} at {self.var}=0")
                if x < 0.0 and mu != math.floor(mu):
                    raise DomainError(f"fractional exponent {mu!r} at negative {self.var}={x!r}")
        vals = [c * (x**mu if mu != 0.0 else 1.0) for c, mu in self.terms]
        value = math.fsum(vals)
        abs_sum = math.fsum(abs(v) for v in vals)
        err = 3.0 * EPS * abs_sum + 0.5 * (math.ulp(value) if value else 0.0)
        return EvalResult.from_terms(value, abs_sum, err)

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {"var": self.var, "terms": [[c, mu] for c, mu in self.terms]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "GenPowerSeries":
        return cls([(float(c), float(mu)) for c, mu in data["terms"]], str(data["var"]))

    @classmethod
    def from_json(cls, text: str) -> "GenPowerSeries":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        body = " + ".join(f"{c:.17g}*{self.var}^{mu:.17g}" for c, mu in self.terms) or "0"
        return f"GenPowerSeries({body})"


def add(a: GenPowerSeries, b: GenPowerSeries | float) -> GenPowerSeries:
    return a + b


def scale(a: GenPowerSeries, factor: float) -> GenPowerSeries:
    return a.scale(factor)


def multiply(a: GenPowerSeries, b: GenPowerSeries | float) -> GenPowerSeries:
    return a * b


def diff(s: GenPowerSeries) -> GenPowerSeries:
    return s.diff()


def frac_diff_rl(s: GenPowerSeries, alpha: float) -> GenPowerSeries:
    return s.frac_diff_rl(alpha)


def evaluate(s: GenPowerSeries, x: float) -> EvalResult:
    return s.eval(x)


class BivariateSeries:
    """Sum of ``outer**p * S_p(inner)`` with each ``S_p`` a :class:`GenPowerSeries`.

    Used for the two-variable polynomials, where one variable is acted on
    by ordinary derivatives and the other by fractional ones.
    """

    def __init__(self, rows: Mapping[float, GenPowerSeries], outer: str = "x", inner: str = "y"):
        self.outer = outer
        self.inner = inner
        merged: dict[float, GenPowerSeries] = {}
        for p, s in rows.items():
            if s.var != inner:
                raise VariableMismatch(f"row in {s.var!r}, expected {inner!r}")
            key = next((q for q in merged if _same_exponent(q, p)), float(p))
            merged[key] = merged.get(key, GenPowerSeries((), inner)) + s
        self.rows = {p: s for p, s in sorted(merged.items()) if s}

    @classmethod
    def from_terms(
        cls, terms: Iterable[tuple[float, float, float]], outer: str = "x", inner: str = "y"
    ) -> "BivariateSeries":
        """From ``(coefficient, outer_exponent, inner_exponent)`` triples."""
        rows: dict[float, list] = {}
        for c, p, q in terms:
            rows.setdefault(float(p), []).append((c, q))
        return cls({p: GenPowerSeries(ts, inner) for p, ts in rows.items()}, outer, inner)

    def terms(self) -> list[tuple[float, float, float]]:
        return [(c, p, q) for p, s in self.rows.items() for c, q in s.terms]

    def max_abs_coefficient(self) -> float:
        return max((abs(c) for c, _, _ in self.terms()), default=0.0)

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check(other)
        rows = dict(self.rows)
        for p, s in other.rows.items():
            key = next((q for q in rows if _same_exponent(q, p)), p)
            rows[key] = rows.get(key, GenPowerSeries((), self.inner)) + s
        return BivariateSeries(rows, self.outer, self.inner)

    def __neg__(self) -> "BivariateSeries":
        return self.scale(-1.0)

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        return self + (-other)

    def _check(self, other: "BivariateSeries") -> None:
        if (other.outer, other.inner) != (self.outer, self.inner):
            raise VariableMismatch("variable tags differ")

    def scale(self, factor: float) -> "BivariateSeries":
        return BivariateSeries({p: s.scale(factor) for p, s in self.rows.items()}, self.outer, self.inner)

    def map_inner(self, fn) -> "BivariateSeries":
        return BivariateSeries({p: fn(s) for p, s in self.rows.items()}, self.outer, self.inner)

    def outer_series(self, fn) -> "BivariateSeries":
        """Apply ``fn`` to the outer-variable dependence, row by row.

        ``fn`` maps a :class:`GenPowerSeries` in the outer variable to
        another; it is applied to each single-row monomial and the results
        are recombined.
        """
        out = BivariateSeries({}, self.outer, self.inner)
        for p, s in self.rows.items():
            image = fn(GenPowerSeries.monomial(1.0, p, self.outer))
            out = out + BivariateSeries({q: s.scale(c) for c, q in image.terms}, self.outer, self.inner)
        return out

    def eval(self, x: float, y: float) -> EvalResult:
        vals = []
        for p, s in self.rows.items():
            px = x**p if p != 0.0 else 1.0
            for c, q in s.terms:
                vals.append(c * px * (y**q if q != 0.0 else 1.0))
        value = math.fsum(vals)
        abs_sum = math.fsum(abs(v) for v in vals)
        return EvalResult.from_terms(value, abs_sum, 4.0 * EPS * abs_sum)

    def __repr__(self) -> str:
        return f"BivariateSeries({self.terms()!r})"


@dataclass(frozen=True)
class Residual:
    """Coefficients left after subtracting the two sides of an identity.

    ``reference`` is the coefficient scale the residual is compared to
    (the largest coefficient of the object under test).
    """

    terms: tuple[tuple[float, ...], ...]
    reference: float

    @property
    def max_abs(self) -> float:
        return max((abs(t[0]) for t in self.terms), default=0.0)

    @property
    def relative(self) -> float:
        return self.max_abs / self.reference if self.reference > 0.0 else self.max_abs

    def vanishes(self, rtol: float = 1e-12) -> bool:
        return self.relative <= rtol
