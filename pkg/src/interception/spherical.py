"""The spherical interception curve and the spherical trigonometry behind it.

Q runs along the equator z = 0 from A(1, 0, 0) while P starts at the pole
B(0, 0, 1) and stays on the meridian through Q, both at unit speed. With
longitude theta and polar angle phi the curve is phi = gd(theta).

Triangle quantities are built in a frame rotated about the z-axis so that P
sits on the meridian of longitude 0. All arcs and angles are invariant under
that rotation, and it keeps the cross products exact enough to resolve P and
Q when they are only a few 1e-9 apart.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import ConsistencyError, DegenerateTangent, DegenerateTriangle, DomainError
from .numerics import integrate

POLE = np.array([0.0, 0.0, 1.0])
CLOSED_FORM_TOL = 1e-12


@dataclass(frozen=True)
class SphericalPoint:
    theta: float
    phi: float
    vec: np.ndarray

    @classmethod
    def from_angles(cls, theta, phi):
        s = math.sin(phi)
        vec = np.array([math.cos(theta) * s, math.sin(theta) * s, math.cos(phi)])
        return cls(float(theta), float(phi), vec)

    @classmethod
    def from_vec(cls, vec, theta_hint=None):
        v = np.asarray(vec, dtype=float)
        v = v / np.linalg.norm(v)
        phi = math.atan2(math.hypot(v[0], v[1]), v[2])
        theta = math.atan2(v[1], v[0])
        if theta_hint is not None:
            # unwrap to the branch nearest the hint
            theta += 2 * math.pi * round((theta_hint - theta) / (2 * math.pi))
        return cls(theta, phi, v)


@dataclass(frozen=True)
class GreatCircle:
    normal: np.ndarray

    def __post_init__(self):
        n = np.linalg.norm(self.normal)
        if abs(n - 1.0) > 1e-14:
            object.__setattr__(self, "normal", self.normal / n)

    def distance_to(self, point):
        """Signed angular distance of ``point`` from the circle."""
        return math.asin(max(-1.0, min(1.0, float(self.normal @ point))))


@dataclass(frozen=True)
class SphericalTriangleElements:
    P: SphericalPoint
    Q: SphericalPoint
    T: SphericalPoint
    arc_PT: float
    arc_QT: float
    arc_PQ: float
    arc_BP: float
    ang_QPT: float
    ang_BPT: float

    def arc_identity_residuals(self):
        return {
            "PT+QT=pi/2": abs(self.arc_PT + self.arc_QT - math.pi / 2),
            "angQPT=BP": abs(self.ang_QPT - self.arc_BP),
            "angBPT=PQ+pi/2": abs(self.ang_BPT - (self.arc_PQ + math.pi / 2)),
        }


# -- spherical trigonometry helpers -------------------------------------------


def sph_distance(a, b):
    """Great-circle distance between unit vectors."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return math.atan2(float(np.linalg.norm(np.cross(a, b))), float(a @ b))


def sph_angle(vertex, a, b):
    """Spherical angle at ``vertex`` between the great circles to ``a`` and ``b``."""
    v = np.asarray(vertex, dtype=float)
    na = np.cross(v, a)
    nb = np.cross(v, b)
    if np.linalg.norm(na) == 0 or np.linalg.norm(nb) == 0:
        raise DegenerateTriangle("angle undefined: a point coincides with the vertex")
    return math.atan2(float(np.linalg.norm(np.cross(na, nb))), float(na @ nb))


def right_triangle_angle(arc_opp, arc_adj):
    """Angle of a right spherical triangle: tan(angle) = tan(opposite) / sin(adjacent)."""
    return math.atan2(math.tan(arc_opp), math.sin(arc_adj))


def circumradius(a, b, c):
    """Spherical radius of the small circle through three points of the unit sphere."""
    a, b, c = (np.asarray(v, dtype=float) for v in (a, b, c))
    m = np.cross(b - a, c - a)
    norm = np.linalg.norm(m)
    scale = max(np.linalg.norm(b - a) * np.linalg.norm(c - a), np.finfo(float).tiny)
    if norm <= 1e-14 * scale:
        raise DegenerateTriangle("points lie on one great circle or coincide")
    m = m / norm
    if m @ a < 0:
        m = -m
    return sph_distance(m, a)


# -- the curve ----------------------------------------------------------------


def gd(theta):
    """Gudermannian function."""
    if abs(theta) < 1.0:
        return math.atan(math.sinh(theta))
    return math.copysign(math.pi / 2 - 2.0 * math.atan(math.exp(-abs(theta))), theta)


def _colatitude_gap(theta):
    """pi/2 - gd(theta) for theta >= 0, without cancellation."""
    return 2.0 * math.atan(math.exp(-theta))


def _sech(theta):
    return 1.0 / math.cosh(theta) if theta < 700 else 0.0


def gd_curve(theta):
    """Point of the spherical interception curve at longitude ``theta``."""
    if not theta >= 0:
        raise DomainError(f"curve is parametrised by theta >= 0, got {theta}")
    theta = float(theta)
    s, c = math.tanh(theta), _sech(theta)  # sin(phi), cos(phi)
    vec = np.array([math.cos(theta) * s, math.sin(theta) * s, c])
    return SphericalPoint(theta, gd(theta), vec)


def _rot_z(angle):
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def _local_frame(theta):
    """Position and tangent of the curve with P rotated onto longitude 0."""
    s, c = math.tanh(theta), _sech(theta)
    r = np.array([s, 0.0, c])
    # d/dtheta of the position with phi' = cos(phi), taken at longitude 0
    v = np.array([c * c, s, -s * c])
    return r, v


def tangent_vector(theta):
    """Unit tangent of the curve (the parametrisation has unit speed)."""
    r, v = _local_frame(theta)
    return _rot_z(theta) @ v


def tangent_great_circle(theta):
    """Great circle tangent to the curve at P, as the unit normal of its plane."""
    if not theta > 0:
        raise DomainError(f"tangent circle needs theta > 0, got {theta}")
    r, v = _local_frame(theta)
    n = np.cross(v, r)
    norm = np.linalg.norm(n)
    if norm < 1e-13:
        raise DegenerateTangent(f"tangent parallel to position at theta={theta}")
    return GreatCircle(_rot_z(theta) @ (n / norm))


def _forward_equator_crossing_local(theta):
    """Equator point T hit by the tangent great circle ahead of P (local frame)."""
    r, v = _local_frame(theta)
    n = np.cross(v, r)
    t = np.cross(n, POLE)
    t = t / np.linalg.norm(t)
    if t @ v < 0:
        t = -t
    return r, v, t


def equator_crossing_longitude(theta):
    """Longitude of T, unwrapped so that it lies ahead of theta."""
    if not theta > 0:
        raise DomainError(f"need theta > 0, got {theta}")
    _, _, t = _forward_equator_crossing_local(theta)
    return theta + math.atan2(t[1], t[0])


def triangle_elements_sph(theta):
    """Arcs and angles of triangle PQT and the arc BP, from vector geometry."""
    if not theta > 0:
        raise DomainError(f"triangle needs theta > 0, got {theta}")
    theta = float(theta)
    r, v, t = _forward_equator_crossing_local(theta)
    q = np.array([1.0, 0.0, 0.0])

    rot = _rot_z(theta)
    big_theta = theta + math.atan2(t[1], t[0])
    P = SphericalPoint(theta, gd(theta), rot @ r)
    Q = SphericalPoint(theta, math.pi / 2, rot @ q)
    T = SphericalPoint(big_theta, math.pi / 2, rot @ t)
    elements = SphericalTriangleElements(
        P=P,
        Q=Q,
        T=T,
        arc_PT=sph_distance(r, t),
        arc_QT=sph_distance(q, t),
        arc_PQ=sph_distance(r, q),
        arc_BP=sph_distance(POLE, r),
        ang_QPT=sph_angle(r, q, t),
        ang_BPT=sph_angle(r, POLE, t),
    )
    deviation = closed_form_deviation(elements)
    if deviation > CLOSED_FORM_TOL:
        raise ConsistencyError(f"vector and closed-form triangle differ by {deviation:.3e}")
    return elements


def closed_form_deviation(elements):
    """Largest gap between a vector-built triangle and the closed forms."""
    forms = closed_forms_sph(elements.P.theta)
    forms["Theta"] -= elements.T.theta
    return max(
        abs(forms.pop("Theta")),
        *(abs(getattr(elements, name) - value) for name, value in forms.items()),
    )


def closed_forms_sph(theta):
    """The same triangle quantities from their closed forms in theta."""
    phi = gd(theta)
    arc_pq = _colatitude_gap(theta)
    return {
        "Theta": theta + math.atan(math.tanh(theta)),
        "arc_QT": math.atan(math.tanh(theta)),
        "arc_PT": math.atan2(1.0, math.tanh(theta)),
        "arc_PQ": arc_pq,
        "arc_BP": phi,
        "ang_QPT": phi,
        "ang_BPT": arc_pq + math.pi / 2,
    }


def arc_length_check_sph(theta, abs_tol=1e-13, rel_tol=1e-13):
    """Length of the curve from B up to longitude ``theta``, and the claimed value theta.

    The speed sqrt(sin^2 phi + phi'^2) is evaluated with phi' = sech(t), the
    derivative of the closed form, not the differential equation.
    """
    if not theta > 0:
        raise DomainError(f"need theta > 0, got {theta}")

    def speed(t):
        phi = np.arctan(np.sinh(t))
        dphi = 1.0 / np.cosh(t)
        return np.sqrt(np.sin(phi) ** 2 + dphi**2)

    return integrate(speed, 0.0, float(theta), abs_tol, rel_tol).value, float(theta)


def small_circle_radius(theta):
    """Radius R of the small circle through B tangent to the curve at P.

    tan^2 R = sec^4(BP / 2) / 4.
    """
    if not theta > 0:
        raise DomainError(f"need theta > 0, got {theta}")
    half = 0.5 * gd(theta)
    return math.atan(0.5 / math.cos(half) ** 2)


def small_circle_radius_constructed(theta):
    """Same radius, by placing the centre and solving the distance constraints.

    The centre lies on the great circle through P orthogonal to the tangent,
    at distance R from P, and must also be at distance R from B.
    """
    if not theta > 0:
        raise DomainError(f"need theta > 0, got {theta}")
    r, v = _local_frame(theta)
    t_hat = v / np.linalg.norm(v)
    n_hat = np.cross(r, t_hat)  # points towards B for theta > 0

    def centre(radius):
        return math.cos(radius) * r + math.sin(radius) * n_hat

    def mismatch(radius):
        return sph_distance(centre(radius), POLE) - radius

    return brentq(mismatch, 1e-12, math.pi / 2, xtol=1e-16, rtol=4 * np.finfo(float).eps)
