import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from interception import spherical
from interception.errors import DegenerateTriangle, DomainError

THETA_GRID = np.linspace(0.05, 20.0, 60)
thetas = st.floats(0.05, 20.0)


def test_point_invariants():
    for theta, phi in [(0.3, 0.1), (-2.0, 3.0), (7.0, math.pi / 2)]:
        p = spherical.SphericalPoint.from_angles(theta, phi)
        assert abs(np.linalg.norm(p.vec) - 1.0) < 1e-14
        q = spherical.SphericalPoint.from_vec(p.vec, theta_hint=theta)
        assert (q.theta, q.phi) == pytest.approx((theta, phi), abs=1e-13)


def test_great_circle_normalises():
    c = spherical.GreatCircle(np.array([0.0, 3.0, 4.0]))
    assert abs(np.linalg.norm(c.normal) - 1.0) < 1e-14


def test_gd_curve_examples():
    assert spherical.gd_curve(0.0).phi == 0.0
    assert math.pi / 2 - spherical.gd_curve(10.0).phi < 1e-4
    assert math.sin(spherical.gd_curve(1.0).phi) == pytest.approx(math.tanh(1.0), rel=1e-15)


@given(st.floats(0.0, 30.0))
def test_gd_matches_high_precision(theta):
    ref = mpmath.atan(mpmath.sinh(mpmath.mpf(theta)))
    assert spherical.gd(theta) == pytest.approx(float(ref), rel=5e-16)
    assert math.pi / 2 - spherical.gd(theta) == pytest.approx(float(mpmath.pi / 2 - ref), rel=1e-13)


@given(thetas)
def test_tangent_great_circle(theta):
    circle = spherical.tangent_great_circle(theta)
    p = spherical.gd_curve(theta).vec
    v = spherical.tangent_vector(theta)
    assert abs(np.linalg.norm(circle.normal) - 1.0) < 1e-14
    assert abs(circle.normal @ p) < 1e-14
    assert abs(circle.normal @ v) < 1e-14 * np.linalg.norm(v)


def test_equator_crossing_longitude_at_one():
    theta = 1.0
    phi = spherical.gd(theta)
    Theta = spherical.equator_crossing_longitude(theta)
    expected = (math.tan(theta) + math.sin(phi)) / (1 - math.tan(theta) * math.sin(phi))
    assert math.tan(Theta) == pytest.approx(expected, rel=1e-12)


@given(thetas)
def test_crossing_longitude_closed_form(theta):
    Theta = spherical.equator_crossing_longitude(theta)
    assert abs(Theta - (theta + math.atan(math.tanh(theta)))) < 1e-12


@given(thetas)
def test_sphere_triangle_identities(theta):
    e = spherical.triangle_elements_sph(theta)
    r = e.arc_identity_residuals()
    assert r["PT+QT=pi/2"] < 1e-12
    assert r["angQPT=BP"] < 1e-11
    assert r["angBPT=PQ+pi/2"] < 1e-11
    assert spherical.closed_form_deviation(e) < 1e-12


def test_sphere_triangle_examples():
    e = spherical.triangle_elements_sph(1.0)
    assert math.tan(e.arc_PT) * math.tan(e.arc_QT) == pytest.approx(1.0, abs=1e-14)
    assert e.ang_QPT == pytest.approx(spherical.gd(1.0), abs=1e-12)
    assert math.cos(e.arc_PT) == pytest.approx(math.cos(e.arc_PQ) * math.cos(e.arc_QT), abs=1e-13)
    far = spherical.triangle_elements_sph(20.0)
    assert abs(far.arc_PT - math.pi / 4) < 1e-8 and abs(far.arc_QT - math.pi / 4) < 1e-8


def test_sphere_triangle_monotone_arcs_and_gap():
    e = [spherical.triangle_elements_sph(t) for t in THETA_GRID]
    qt, pt, pq = (np.array([getattr(x, k) for x in e]) for k in ("arc_QT", "arc_PT", "arc_PQ"))
    assert np.all(np.diff(qt) >= 0) and np.all(np.diff(pt) <= 0)
    # both arcs reach pi/4 to double precision well before theta = 20
    early = THETA_GRID < 10
    assert np.all(np.diff(qt[early]) > 0) and np.all(np.diff(pt[early]) < 0)
    assert np.all(np.diff(pq) < 0)


@pytest.mark.parametrize("theta", [0.0, -1.0])
def test_triangle_domain(theta):
    with pytest.raises(DomainError):
        spherical.triangle_elements_sph(theta)


@pytest.mark.parametrize("theta", [1.0, 5.0])
def test_arc_length(theta):
    arc, claim = spherical.arc_length_check_sph(theta)
    assert abs(arc - claim) < 1e-10


@given(thetas)
def test_unit_speed(theta):
    h = 1e-6
    hi, lo = theta + h, theta - h
    d = spherical.gd_curve(hi).vec - spherical.gd_curve(lo).vec
    assert abs(np.linalg.norm(d) / (hi - lo) - 1.0) < 1e-9


@given(thetas)
def test_small_circle_formula_vs_construction(theta):
    assert (
        abs(spherical.small_circle_radius(theta) - spherical.small_circle_radius_constructed(theta))
        < 1e-10
    )


def test_small_circle_limit_and_monotone():
    assert math.tan(spherical.small_circle_radius(1e-8)) ** 2 == pytest.approx(0.25, abs=1e-12)
    radii = [spherical.small_circle_radius(t) for t in THETA_GRID]
    assert np.all(np.diff(radii) >= 0)
    assert np.all(np.diff(radii[:30]) > 0)


def test_sph_helpers():
    eq = np.array([1.0, 0.0, 0.0])
    assert spherical.sph_distance(spherical.POLE, eq) == pytest.approx(math.pi / 2)
    assert spherical.sph_angle(spherical.POLE, eq, np.array([0.0, 1.0, 0.0])) == pytest.approx(
        math.pi / 2
    )
    # right triangle with legs a, b: tan(A) = tan(a) / sin(b)
    assert spherical.right_triangle_angle(0.3, math.pi / 2) == pytest.approx(0.3)
    # three points on a great circle: radius pi/2
    assert spherical.circumradius(
        eq, np.array([0.0, 1.0, 0.0]), np.array([-1.0, 0.0, 0.0])
    ) == pytest.approx(math.pi / 2)
    with pytest.raises(DegenerateTriangle):
        spherical.circumradius(eq, eq, np.array([0.0, 1.0, 0.0]))


@given(
    st.floats(0.0, math.pi),
    st.floats(-math.pi, math.pi),
    st.floats(0.05, 1.5),
    st.lists(st.floats(0.0, 2 * math.pi), min_size=3, max_size=3, unique=True),
)
def test_circumradius_recovers_known_circle(phi, theta, radius, angles):
    # three points placed on a small circle of known centre and radius
    angles = sorted(angles)
    if min(np.diff(angles + [angles[0] + 2 * math.pi])) < 0.2:
        return
    c = spherical.SphericalPoint.from_angles(theta, phi).vec
    e1 = np.cross(c, [0.3, -0.5, 0.8])
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(c, e1)
    pts = [
        math.cos(radius) * c + math.sin(radius) * (math.cos(a) * e1 + math.sin(a) * e2)
        for a in angles
    ]
    assert spherical.circumradius(*pts) == pytest.approx(radius, abs=1e-11)
