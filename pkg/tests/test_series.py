import json
import math

import mpmath as mp
import pytest
from hypothesis import given, strategies as st

from mittag import series as S
from mittag.errors import DomainError, ExponentOutOfRange, VariableMismatch
from mittag.gamma import recip_gamma
from mittag.series import BivariateSeries, GenPowerSeries as G

coef = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False).filter(lambda c: abs(c) > 1e-6)
expo = st.floats(min_value=-0.9, max_value=8.0, allow_nan=False)
series = st.lists(st.tuples(coef, expo), min_size=1, max_size=6).map(G)
alphas = st.floats(min_value=0.05, max_value=0.95)


def test_ring_examples():
    assert S.add(G([(1, 0)]), G([(-1, 0)])).terms == ()
    assert S.multiply(G([(1, 1)]), G([(1, 1)])).terms == ((1.0, 2.0),)
    assert S.scale(G([(2, 3)]), 0.5).terms == ((1.0, 3.0),)


def test_diff_examples():
    assert S.diff(G([(1, 0)])).terms == ()
    assert S.diff(G([(1, 2)])).terms == ((2.0, 1.0),)
    assert S.diff(G([(3, 0.5)])).terms == ((1.5, -0.5),)


def test_frac_diff_examples():
    for a in (0.2, 0.5, 0.9):
        assert S.frac_diff_rl(G([(1, 0)]), a).terms == pytest.approx([(recip_gamma(1 - a), -a)], rel=1e-15)
        (c, mu), = S.frac_diff_rl(G([(recip_gamma(1 + a), a)]), a).terms
        assert mu == 0.0 and c == pytest.approx(1.0, rel=1e-14)


def test_frac_diff_rejects_exponents_at_or_below_minus_one():
    with pytest.raises(ExponentOutOfRange):
        S.frac_diff_rl(G([(1.0, -1.0)]), 0.5)


def test_frac_diff_drops_pole_terms():
    # x^(alpha - 1) is annihilated by D^alpha
    assert S.frac_diff_rl(G([(1.0, -0.5)]), 0.5).terms == ()


def test_frac_diff_tends_to_diff_as_alpha_to_one():
    s = G([(1.0, 4.0)])
    errors = []
    for k in range(3, 7):
        (c, mu), = S.frac_diff_rl(s, 1 - 10.0**-k).terms
        errors.append(abs(c - 4.0))
    assert all(b < a for a, b in zip(errors, errors[1:]))
    assert errors[-1] < 1e-4


def test_semigroup_spot_check():
    s = G([(1.0, 5.0)])
    a = S.frac_diff_rl(S.frac_diff_rl(s, 0.3), 0.4)
    b = S.frac_diff_rl(s, 0.7)
    (ca, ma), = a.terms
    (cb, mb), = b.terms
    assert ma == pytest.approx(mb, abs=1e-14)
    assert ca == pytest.approx(cb, rel=1e-12)


@given(series, series, st.floats(-3, 3), st.floats(-3, 3), alphas)
def test_frac_diff_is_linear(s, u, a, b, alpha):
    lhs = S.frac_diff_rl(s.scale(a) + u.scale(b), alpha)
    rhs = S.frac_diff_rl(s, alpha).scale(a) + S.frac_diff_rl(u, alpha).scale(b)
    scale = max(lhs.max_abs_coefficient(), rhs.max_abs_coefficient(), 1.0)
    assert (lhs - rhs).max_abs_coefficient() <= 1e-13 * scale * 10


@given(series)
def test_normalized_invariants(s):
    mus = s.exponents
    assert all(a < b for a, b in zip(mus, mus[1:]))
    assert all(c != 0.0 for c, _ in s.terms)


def test_exponent_merging_tolerance():
    s = G([(1.0, 0.3), (2.0, 0.3 + 1e-14), (1.0, 0.3 + 1e-9)])
    assert len(s) == 2
    assert s.terms[0][0] == 3.0


def test_no_relative_pruning():
    s = G([(1.0, 0.0), (1e-200, 1.0)])
    assert len(s) == 2
    assert len(G([(1e-301, 1.0)])) == 0


def test_variable_mismatch():
    with pytest.raises(VariableMismatch):
        G([(1, 1)], "x") + G([(1, 1)], "y")
    with pytest.raises(VariableMismatch):
        G([(1, 1)], "x") * G([(1, 1)], "t")


def test_eval_examples():
    assert G([(1, 0), (2, 1)]).eval(3.0).value == 7.0
    assert G([(1, 0.5)]).eval(4.0).value == 2.0
    assert G([(1, 3)]).eval(-2.0).value == -8.0
    with pytest.raises(DomainError):
        G([(1, 0.5)]).eval(-1.0)
    with pytest.raises(DomainError):
        G([(1, -0.5)]).eval(0.0)


def test_eval_reports_cancellation():
    # 40-term truncation of exp(-10)
    s = G([((-1) ** n * 10.0**n / math.factorial(n), n) for n in range(40)])
    r = s.eval(1.0)
    ref = float(mp.fsum((-1) ** n * mp.mpf(10) ** n / mp.factorial(n) for n in range(40)))
    # the coefficients themselves are rounded; compare with the represented terms
    represented = math.fsum(c for c, _ in s.terms)
    assert r.value == represented
    assert abs(r.value - ref) <= 1e-12
    assert r.cancellation_condition > 1e8
    assert r.abs_error_estimate >= abs(r.value - represented)


def test_json_round_trip():
    s = G([(1.5, 0.0), (-2.25, 0.7)], "t")
    data = json.loads(s.to_json())
    assert data == {"var": "t", "terms": [[1.5, 0.0], [-2.25, 0.7]]}
    assert G.from_json(s.to_json()) == s


@given(series)
def test_json_round_trip_property(s):
    assert G.from_json(s.to_json()) == s


def test_bivariate_outer_and_inner_maps():
    p = BivariateSeries.from_terms([(1.0, 2, 0), (3.0, 0, 1)], "x", "y")
    dx = p.outer_series(lambda s: s.diff())
    assert dx.terms() == [(2.0, 1.0, 0.0)]
    dy = p.map_inner(lambda s: s.diff())
    assert dy.terms() == [(3.0, 0.0, 0.0)]
    assert p.eval(2.0, 1.0).value == 7.0
