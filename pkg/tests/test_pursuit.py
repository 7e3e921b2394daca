import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from interception import pursuit
from interception.errors import DomainError

X_GRID = np.linspace(0.0, 0.99, 100)


def test_bouguer_start():
    s = pursuit.bouguer(0.0)
    assert (s.x, s.y, s.slope, s.gap) == (0.0, 0.0, 0.0, 1.0)
    assert s.evader_height == 0.0


@pytest.mark.parametrize("x", [-0.1, 1.0, 1.5])
def test_bouguer_domain(x):
    with pytest.raises(DomainError):
        pursuit.bouguer(x)


@given(st.floats(0.0, 0.999))
def test_pursuit_state_invariants(x):
    s = pursuit.bouguer(x)
    u = 1.0 - x
    assert s.y == pytest.approx(u * u / 4 - math.log(u) / 2 - 0.25, abs=1e-12)
    assert s.gap == pytest.approx(0.5 + u * u / 2, abs=1e-12)
    assert s.y >= 0.0


def test_closed_form_vs_ivp():
    traj = pursuit.pursuit_ivp(0.99)
    assert max(abs(traj(x)[0] - pursuit.bouguer_y(x)) for x in X_GRID) < 1e-8
    assert abs(traj(0.5)[0] - pursuit.bouguer_y(0.5)) < 1e-8


def test_ivp_range():
    with pytest.raises(DomainError):
        pursuit.pursuit_ivp(0.9995)


def test_gap_strictly_decreasing_with_floor():
    gaps = np.array([pursuit.bouguer(x).gap for x in X_GRID])
    h = X_GRID[1] - X_GRID[0]
    assert np.all(np.diff(gaps) < 0)
    # central differences of a quadratic are exact up to rounding
    deriv = (gaps[2:] - gaps[:-2]) / (2 * h)
    np.testing.assert_allclose(deriv, -(1.0 - X_GRID[1:-1]), atol=1e-9)
    assert gaps.min() > 0.5
    assert pursuit.gap_formula(0.999999) == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("x", [0.0, 0.3, 0.5, 0.9, 0.99])
def test_equal_speed(x):
    arc, evader = pursuit.pursuit_equal_speed_check(x)
    assert abs(arc - evader) < 1e-8
    # independent arc length with scipy
    ref, _ = quad(lambda t: math.hypot(1.0, pursuit.bouguer_slope(t)), 0.0, x, epsabs=1e-13)
    assert arc == pytest.approx(ref, abs=1e-10)


def test_line_strategy():
    assert pursuit.line_strategy_gap(0.0) == 1.0
    assert pursuit.line_strategy_gap(0.75) == pytest.approx(0.5, abs=1e-15)
    ks = np.linspace(0.0, 1e3, 200)
    gaps = [pursuit.line_strategy_gap(k) for k in ks]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    assert pursuit.line_strategy_gap(1e12) < 1e-11
    with pytest.raises(DomainError):
        pursuit.line_strategy_gap(-1.0)


def test_comparison_report():
    report = pursuit.comparison_report()
    rows = report.as_dict()
    assert rows["pursuit"] == 0.5
    assert abs(rows["interception"] - 0.3588850048) < 1e-6
    assert rows["line(k=0.75)"] == pytest.approx(0.5)
    assert report.interception_beats_pursuit
