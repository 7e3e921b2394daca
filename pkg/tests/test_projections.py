import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from interception import projections, spherical
from interception.errors import DomainError, PoleError, RootNotFound
from interception.spherical import SphericalPoint

THETA_GRID = np.linspace(0.05, 20.0, 60)


def test_equator_maps():
    p = SphericalPoint.from_angles(0.7, math.pi / 2)
    c = projections.mercator(p)
    assert c.x == 0.7 and abs(c.y) < 1e-15
    assert projections.stereographic(p).r == pytest.approx(1.0, abs=1e-15)


def test_poles_rejected():
    with pytest.raises(PoleError):
        projections.mercator(SphericalPoint.from_angles(0.0, 0.0))
    with pytest.raises(PoleError):
        projections.mercator(SphericalPoint.from_angles(0.0, math.pi))
    with pytest.raises(PoleError):
        projections.stereographic(spherical.gd_curve(0.0))


@given(st.floats(-math.pi, math.pi), st.floats(0.01, math.pi - 0.01))
def test_mercator_matches_latitude_formula(theta, phi):
    lat = math.pi / 2 - phi
    c = projections.mercator(SphericalPoint.from_angles(theta, phi))
    assert c.y == pytest.approx(math.log(math.tan(math.pi / 4 + lat / 2)), abs=1e-12)
    assert projections.mercator_xy(SphericalPoint.from_angles(theta, phi).vec)[1] == pytest.approx(
        c.y, abs=1e-12
    )


@given(st.floats(-math.pi, math.pi), st.floats(0.01, math.pi - 0.01))
def test_stereographic_vector_and_angle_forms_agree(theta, phi):
    p = SphericalPoint.from_angles(theta, phi)
    polar = projections.stereographic(p)
    assert polar.r >= 0
    np.testing.assert_allclose(
        projections.stereographic_xy(p.vec), polar.xy, rtol=1e-12, atol=1e-12
    )


def test_images_of_interception_curve():
    for t in THETA_GRID:
        merc = projections.mercator(spherical.gd_curve(t))
        assert merc.y == pytest.approx(math.log(1 / math.tanh(t / 2)), abs=1e-10)
        stereo = projections.stereographic(spherical.gd_curve(t))
        assert stereo.r == pytest.approx(1 / math.tanh(t / 2), rel=1e-12)
        assert stereo.angle == t


def test_mercator_image_self_inverse():
    for x in np.linspace(0.05, 5.0, 60):
        once = projections.mercator_image_curve(x).y
        assert projections.mercator_image_curve(once).y == pytest.approx(x, abs=1e-12)


@given(st.floats(-3.0, 3.0))
def test_spiral_catalogue(theta):
    p = projections.spherical_spiral(theta)
    assert abs(np.linalg.norm(p.vec) - 1.0) < 1e-14
    merc = projections.mercator_xy(p.vec)
    assert merc[1] == pytest.approx(theta, abs=1e-12)
    assert projections.mercator(p).y == pytest.approx(theta, abs=1e-12)
    stereo = projections.stereographic(p)
    assert stereo.r == pytest.approx(math.exp(theta), rel=1e-12)
    assert abs(projections.meridian_crossing_angle(theta) - math.pi / 4) < 1e-12


def test_spiral_start():
    np.testing.assert_allclose(projections.spherical_spiral(0.0).vec, [1.0, 0.0, 0.0], atol=0)


@given(st.floats(0.05, 20.0))
def test_conformality_slope(theta):
    slope, cot = projections.conformality_check(theta)
    assert abs(slope - cot) < 1e-10


def test_conformality_large_theta():
    slope, cot = projections.conformality_check(30.0)
    assert -1e-12 < slope < 0 and -1e-12 < cot <= 0


@given(
    st.floats(-math.pi, math.pi),
    st.floats(0.2, math.pi - 0.2),
    st.tuples(st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1)),
    st.tuples(st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1)),
)
def test_maps_preserve_angles(theta, phi, u1, u2):
    vec = SphericalPoint.from_angles(theta, phi).vec
    u1, u2 = np.array(u1), np.array(u2)
    t1, t2 = u1 - (u1 @ vec) * vec, u2 - (u2 @ vec) * vec
    if np.linalg.norm(t1) < 0.1 or np.linalg.norm(t2) < 0.1:
        return
    if np.linalg.norm(np.cross(t1, t2)) < 0.05 * np.linalg.norm(t1) * np.linalg.norm(t2):
        return
    # keep clear of the longitude seam of the Mercator chart
    if abs(abs(theta) - math.pi) > 0.01:
        assert projections.differential_angle_error(projections.mercator_xy, vec, u1, u2) < 1e-9
    assert projections.differential_angle_error(projections.stereographic_xy, vec, u1, u2) < 1e-9


def test_asymptote():
    assert abs(projections.stereographic_asymptote_check(0.01) - 2.0) < 1e-4
    assert abs(projections.stereographic_asymptote_check(0.1) - 2.0) < 4e-3
    values = [projections.stereographic_asymptote_check(t) for t in np.linspace(0.9, 0.001, 50)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert all(v < 2.0 for v in values)
    with pytest.raises(DomainError):
        projections.stereographic_asymptote_check(0.0)


def test_right_angle_intersections():
    r = projections.right_angle_intersections()
    assert 0.4 < r.x_star < 1.2
    assert abs(r.x_star - math.log(1 + math.sqrt(2))) < 1e-14
    assert abs(math.sinh(r.x_star) - 1.0) < 1e-14
    assert r.slope_product_residual < 1e-12
    assert r.sphere_angle_residual < 1e-9
    assert r.plane_angle_residual < 1e-9
    assert r.point_mismatch < 1e-12


def test_right_angle_bad_bracket():
    with pytest.raises(RootNotFound):
        projections.right_angle_intersections((1.0, 2.0))
