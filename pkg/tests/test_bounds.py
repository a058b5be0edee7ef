"""Closed-form bound evaluators: oracles, scaling laws, extremal cases."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stokespec import (
    bathtub_bound,
    check_sum_bound,
    lambda1_floor,
    li_yau_sum_bound,
    omega_n,
    stokes_each_bound,
    stokes_sum_bound,
    weyl_coefficient,
)


def analytic_square_spectrum(count):
    """Dirichlet eigenvalues of the unit square, pi^2 (p^2 + q^2), sorted."""
    ks = np.arange(1, 40)
    vals = np.sort((np.pi**2 * (ks[:, None] ** 2 + ks[None, :] ** 2)).ravel())
    return vals[:count]


def test_ball_volumes():
    assert omega_n(1) == pytest.approx(2.0, rel=1e-15)
    assert omega_n(2) == pytest.approx(math.pi, rel=1e-15)
    assert omega_n(3) == pytest.approx(4.0 * math.pi / 3.0, rel=1e-15)
    assert omega_n(4) == pytest.approx(math.pi**2 / 2.0, rel=1e-15)


@settings(max_examples=30, deadline=None)
@given(n=st.integers(min_value=3, max_value=30))
def test_ball_volume_recursion(n):
    assert omega_n(n) == pytest.approx(omega_n(n - 2) * 2.0 * math.pi / n,
                                       rel=1e-12)


def test_planar_closed_forms():
    # at n=2 and unit measure every evaluator collapses to a round number
    assert li_yau_sum_bound(2, 1.0, 7) == pytest.approx(2.0 * math.pi * 49, rel=1e-14)
    assert stokes_sum_bound(2, 1.0, 7) == pytest.approx(2.0 * math.pi * 49, rel=1e-14)
    assert stokes_each_bound(2, 1.0, 7) == pytest.approx(2.0 * math.pi * 7, rel=1e-14)
    assert lambda1_floor(2, 1.0) == pytest.approx(2.0 * math.pi, rel=1e-14)
    assert weyl_coefficient(2, 1.0) == pytest.approx(4.0 * math.pi, rel=1e-14)


def test_stokes_bound_is_li_yau_with_shrunk_measure():
    for n in (2, 3, 4):
        for m in (1, 5, 20):
            assert stokes_sum_bound(n, 3.0, m) == pytest.approx(
                li_yau_sum_bound(n, (n - 1) * 3.0, m), rel=1e-13)


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=6),
    measure=st.floats(min_value=1e-3, max_value=1e3),
    t=st.floats(min_value=1e-2, max_value=1e2),
    m=st.integers(min_value=1, max_value=1000),
)
def test_li_yau_measure_scaling(n, measure, t, m):
    # bound scales like measure^(-2/n)
    a = li_yau_sum_bound(n, t * measure, m)
    b = li_yau_sum_bound(n, measure, m) * t ** (-2.0 / n)
    assert a == pytest.approx(b, rel=1e-11)


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=6),
    measure=st.floats(min_value=1e-3, max_value=1e3),
    m=st.integers(min_value=1, max_value=500),
)
def test_sum_bounds_grow_superlinearly(n, measure, m):
    a = li_yau_sum_bound(n, measure, m)
    b = li_yau_sum_bound(n, measure, m + 1)
    assert b > a
    # increments grow: the bound is strictly convex in m
    c = li_yau_sum_bound(n, measure, m + 2)
    assert c - b > b - a


def _ball_moment(n, c, r):
    # integral of c |x|^2 over the radius-r ball
    return c * omega_n(n) * r ** (n + 2) * n / (n + 2.0)


def test_bathtub_equality_for_ball_indicators():
    for n in (1, 2, 3):
        for c, r in ((1.0, 1.0), (2.5, 0.7), (0.3, 4.0)):
            mass = c * omega_n(n) * r**n
            assert bathtub_bound(n, c, _ball_moment(n, c, r)) == pytest.approx(
                mass, rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=4),
    cap=st.floats(min_value=1e-3, max_value=1e3),
    r=st.floats(min_value=1e-2, max_value=1e2),
    u=st.floats(min_value=0.05, max_value=1.0),
)
def test_bathtub_dominates_slack_indicators(n, cap, r, u):
    # any indicator that does not saturate the sup cap stays below the
    # bound evaluated at the original caps
    c = u * cap
    M2 = _ball_moment(n, c, r)
    mass = c * omega_n(n) * r**n
    assert mass <= bathtub_bound(n, cap, M2) * (1.0 + 1e-12)


def test_bad_arguments_rejected():
    with pytest.raises(ValueError):
        omega_n(0)
    with pytest.raises(ValueError):
        li_yau_sum_bound(2, -1.0, 3)
    with pytest.raises(ValueError):
        li_yau_sum_bound(2, 1.0, 0)
    with pytest.raises(ValueError):
        stokes_sum_bound(1, 1.0, 3)
    with pytest.raises(ValueError):
        bathtub_bound(2, 0.0, 1.0)


def test_check_sum_bound_on_analytic_square():
    vals = analytic_square_spectrum(50)
    recs = check_sum_bound(vals, li_yau_sum_bound, 2, 1.0, slack_frac=0.0)
    assert len(recs) == 50
    assert all(r.passed for r in recs)
    assert all(r.margin > 0 for r in recs)
    assert [r.m for r in recs] == list(range(1, 51))


def test_check_sum_bound_rejects_decreasing():
    with pytest.raises(ValueError):
        check_sum_bound([3.0, 2.0], li_yau_sum_bound, 2, 1.0)


def test_check_sum_bound_slack_window():
    # a spectrum sitting 0.5% below the bound passes at 1% slack only
    vals = [0.995 * li_yau_sum_bound(2, 1.0, 1)]
    strict = check_sum_bound(vals, li_yau_sum_bound, 2, 1.0, slack_frac=0.0)
    loose = check_sum_bound(vals, li_yau_sum_bound, 2, 1.0, slack_frac=0.01)
    assert not strict[0].passed
    assert loose[0].passed
    assert loose[0].margin < 0


def test_boundcheck_row_shape():
    rec = check_sum_bound([7.0], li_yau_sum_bound, 2, 1.0)[0]
    row = rec.row()
    assert row[0] == "li_yau_sum_bound"
    assert row[1] == 1
    assert isinstance(row[2], str) and float(row[2]) == 7.0


def test_sum_ratio_decays_toward_sharpness():
    # ratio of the true sums to the bound falls with m like a + b/sqrt(m):
    # the fitted limit sits well under 1.35, evidence the constant cannot
    # be improved by that factor
    vals = analytic_square_spectrum(50)
    sums = np.cumsum(vals)
    ms = np.arange(10, 51)
    ratios = np.array([sums[m - 1] / li_yau_sum_bound(2, 1.0, int(m)) for m in ms])
    assert (ratios >= 1.0).all()
    assert ratios[-1] < ratios[0]
    A = np.column_stack([np.ones_like(ms, dtype=float), 1.0 / np.sqrt(ms)])
    coef, *_ = np.linalg.lstsq(A, ratios, rcond=None)
    assert coef[0] <= 1.35
