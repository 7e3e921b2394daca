"""Mercator and stereographic charts of the sphere and the curves they produce.

Mercator is the unrolled cylinder chart x = longitude, y = ln tan(pi/4 + lat/2).
Stereographic projects from the pole B(0, 0, 1) onto the equatorial plane.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .errors import DomainError, PoleError, RootNotFound
from .spherical import SphericalPoint, tangent_vector, triangle_elements_sph

FD_STEP = 1e-6


@dataclass(frozen=True)
class CylinderPoint:
    x: float
    y: float


@dataclass(frozen=True)
class PolarPoint:
    r: float
    angle: float

    @property
    def xy(self):
        return self.r * math.cos(self.angle), self.r * math.sin(self.angle)


def mercator(p):
    if not 0.0 < p.phi < math.pi:
        raise PoleError(f"Mercator chart is undefined at the poles (phi={p.phi})")
    # latitude pi/2 - phi gives ln tan(pi/4 + lat/2) = -ln tan(phi/2)
    return CylinderPoint(p.theta, -math.log(math.tan(0.5 * p.phi)))


def stereographic(p):
    if not p.phi > 0.0:
        raise PoleError("stereographic projection from B is undefined at B")
    return PolarPoint(1.0 / math.tan(0.5 * p.phi), p.theta)


def mercator_xy(vec):
    """Mercator chart straight from a unit vector (longitude not unwrapped)."""
    x, y, z = vec
    if abs(z) >= 1.0:
        raise PoleError("Mercator chart is undefined at the poles")
    return np.array([math.atan2(y, x), math.atanh(z)])


def stereographic_xy(vec):
    x, y, z = vec
    if z >= 1.0:
        raise PoleError("stereographic projection from B is undefined at B")
    return np.array([x, y]) / (1.0 - z)


# -- the curve catalogue ------------------------------------------------------


def spherical_spiral(theta):
    """Loxodrome crossing every meridian at pi/4; its Mercator image is y = x."""
    theta = float(theta)
    c = 1.0 / math.cosh(theta) if abs(theta) < 700 else 0.0
    vec = np.array([math.cos(theta) * c, math.sin(theta) * c, math.tanh(theta)])
    # polar angle pi/2 - gd(theta), written without cancellation
    return SphericalPoint(theta, 2.0 * math.atan(math.exp(-theta)), vec)


def spiral_tangent(theta):
    """Unit tangent of the spherical spiral."""
    c, t = 1.0 / math.cosh(theta), math.tanh(theta)
    d = np.array(
        [
            -math.sin(theta) * c - math.cos(theta) * c * t,
            math.cos(theta) * c - math.sin(theta) * c * t,
            c * c,
        ]
    )
    return d / np.linalg.norm(d)


def meridian_crossing_angle(theta):
    """Angle in [0, pi/2] between the spiral and the meridian through its point."""
    p = spherical_spiral(theta)
    meridian = np.array(
        [
            math.cos(theta) * math.cos(p.phi),
            math.sin(theta) * math.cos(p.phi),
            -math.sin(p.phi),
        ]
    )
    d = spiral_tangent(theta)
    angle = math.atan2(np.linalg.norm(np.cross(d, meridian)), float(d @ meridian))
    return min(angle, math.pi - angle)


def mercator_image_curve(x):
    """Cylinder image of the interception curve: y = ln coth(x/2)."""
    if not x > 0:
        raise DomainError(f"need x > 0, got {x}")
    return CylinderPoint(x, -math.log(math.tanh(0.5 * x)))


def stereographic_image_curve(theta):
    """Plane image of the interception curve: r = coth(theta/2)."""
    if not theta > 0:
        raise DomainError(f"need theta > 0, got {theta}")
    return PolarPoint(1.0 / math.tanh(0.5 * theta), theta)


def helix(x):
    """Cylinder image of the spherical spiral."""
    return CylinderPoint(x, x)


def log_spiral(theta):
    """Plane image of the spherical spiral."""
    return PolarPoint(math.exp(theta), theta)


# -- checks -------------------------------------------------------------------


def conformality_check(theta):
    """Slope of the Mercator image next to cot of the sphere angle BPT."""
    if not theta > 0:
        raise DomainError(f"need theta > 0, got {theta}")
    slope_cyl = -1.0 / math.sinh(theta)
    ang = triangle_elements_sph(theta).ang_BPT
    return slope_cyl, math.cos(ang) / math.sin(ang)


def stereographic_asymptote_check(theta):
    """Cartesian ordinate coth(theta/2) sin(theta) of the stereographic image."""
    if not 0.0 < theta < 1.0:
        raise DomainError(f"asymptote check needs 0 < theta < 1, got {theta}")
    return math.sin(theta) / math.tanh(0.5 * theta)


def _angle(u, v):
    return math.atan2(abs(u[0] * v[1] - u[1] * v[0]), float(u @ v))


def differential_angle_error(chart, vec, u1, u2, h=FD_STEP):
    """How much ``chart`` distorts the angle between tangent directions u1, u2 at vec.

    The image directions come from central differences along the great
    circles through vec in each direction.
    """
    vec = np.asarray(vec, dtype=float)
    tangents, images = [], []
    for u in (u1, u2):
        u = np.asarray(u, dtype=float)
        u = u - (u @ vec) * vec
        u = u / np.linalg.norm(u)
        forward = math.cos(h) * vec + math.sin(h) * u
        backward = math.cos(h) * vec - math.sin(h) * u
        tangents.append(u)
        images.append((chart(forward) - chart(backward)) / (2.0 * h))
    t1, t2 = tangents
    sphere_angle = math.atan2(np.linalg.norm(np.cross(t1, t2)), float(t1 @ t2))
    return abs(sphere_angle - _angle(images[0], images[1]))


@dataclass(frozen=True)
class IntersectionReport:
    x_star: float
    x_star_closed_form: float
    slope_product_residual: float  # |slope_1 * slope_2 + 1| on the cylinder
    sphere_angle_residual: float  # |angle - pi/2| between the sphere curves
    plane_angle_residual: float  # |angle - pi/2| between the plane images
    point_mismatch: float  # distance between the two sphere curves at x_star

    @property
    def max_residual(self):
        return max(
            abs(self.x_star - self.x_star_closed_form),
            self.slope_product_residual,
            self.sphere_angle_residual,
            self.plane_angle_residual,
            self.point_mismatch,
        )


def right_angle_intersections(bracket=(0.4, 1.2)):
    """Where the interception curve meets the spiral, in all three pictures."""

    def h(x):
        return -math.log(math.tanh(0.5 * x)) - x

    lo, hi = bracket
    if not h(lo) * h(hi) < 0:
        raise RootNotFound(f"ln coth(x/2) - x does not change sign on {bracket}")
    x_star = bisect(h, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)

    # slopes 1 (helix) and -1/sinh x (interception image)
    slope_product = -1.0 / math.sinh(x_star)

    gd_vec = np.array(
        [
            math.cos(x_star) * math.tanh(x_star),
            math.sin(x_star) * math.tanh(x_star),
            1.0 / math.cosh(x_star),
        ]
    )
    spiral_vec = spherical_spiral(x_star).vec
    t1, t2 = tangent_vector(x_star), spiral_tangent(x_star)
    sphere_angle = math.atan2(np.linalg.norm(np.cross(t1, t2)), float(t1 @ t2))

    def polar_tangent(r, dr, a):
        return np.array([dr * math.cos(a) - r * math.sin(a), dr * math.sin(a) + r * math.cos(a)])

    s = math.sinh(0.5 * x_star)
    d1 = polar_tangent(1.0 / math.tanh(0.5 * x_star), -0.5 / (s * s), x_star)
    d2 = polar_tangent(math.exp(x_star), math.exp(x_star), x_star)

    return IntersectionReport(
        x_star=x_star,
        x_star_closed_form=math.asinh(1.0),
        slope_product_residual=abs(slope_product + 1.0),
        sphere_angle_residual=abs(sphere_angle - math.pi / 2),
        plane_angle_residual=abs(_angle(d1, d2) - math.pi / 2),
        point_mismatch=float(np.linalg.norm(gd_vec - spiral_vec)),
    )
