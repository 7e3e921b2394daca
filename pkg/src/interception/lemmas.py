"""Brute-force checks of the finite-difference versions of the curve theorems.

Each lemma describes two nearby positions P1, P2 of the moving point with
|P1P2| = |Q1Q2|. The constructions here place the points explicitly, measure
everything with vectors, and compare against the stated identities. Letting
Q1 approach Q2 with P2 on an interception curve recovers the tangent-line
theorems, and ``limiting_case_convergence`` measures how fast.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .errors import DegenerateConfig, DegenerateTriangle, DomainError, NoSolution
from .planar import state_at, tangent_circle_radii, triangle_elements
from .spherical import (
    POLE,
    circumradius,
    gd,
    small_circle_radius,
    sph_angle,
    sph_distance,
    triangle_elements_sph,
)

HALF_PI = 0.5 * math.pi
ROOT_XTOL = 1e-15
ROOT_RTOL = 4 * np.finfo(float).eps

LEMMA1_TOL = 1e-9
LEMMA2_TOL = 1e-8
LEMMA3_TOL = 1e-9


# -- sphere -------------------------------------------------------------------


@dataclass(frozen=True)
class SphericalLemmaConfig:
    x_arc: float  # arc Q1Q2 = arc P1P2
    a: float  # arc P1Q1
    b: float  # arc P2Q2
    B: np.ndarray
    Q1: np.ndarray
    Q2: np.ndarray
    P1: np.ndarray
    P2: np.ndarray
    T: np.ndarray

    @property
    def constraint_residual(self):
        return abs(sph_distance(self.P1, self.P2) - self.x_arc)

    @property
    def coplanarity_residual(self):
        """|det(P1, P2, T)|, zero when the three lie on one great circle."""
        return abs(float(np.linalg.det(np.array([self.P1, self.P2, self.T]))))


def _meridian_point(longitude, height):
    """Point at arc ``height`` above the equator on the meridian at ``longitude``."""
    c = math.cos(height)
    return np.array([c * math.cos(longitude), c * math.sin(longitude), math.sin(height)])


def _forward_equator_crossing(p1, p2):
    """Where the great circle from P1 through P2 first meets the equator."""
    w = p2 - (p2 @ p1) * p1
    norm = np.linalg.norm(w)
    if norm == 0.0:
        raise DegenerateConfig("P1 and P2 coincide")
    w = w / norm
    # cos(s) P1_z + sin(s) w_z = 0 with s in (0, pi)
    s = math.atan2(p1[2], -w[2])
    return math.cos(s) * p1 + math.sin(s) * w


def _assemble(x_arc, a, b):
    q1 = np.array([1.0, 0.0, 0.0])
    q2 = np.array([math.cos(x_arc), math.sin(x_arc), 0.0])
    p1 = _meridian_point(0.0, a)
    p2 = _meridian_point(x_arc, b)
    t = _forward_equator_crossing(p1, p2)
    return SphericalLemmaConfig(x_arc, a, b, POLE.copy(), q1, q2, p1, p2, t)


def _check_arc(name, value):
    if not 0.0 < value < HALF_PI:
        raise DomainError(f"{name} must lie in (0, pi/2), got {value}")


def build_spherical_config(x_arc, a):
    """Place P1 at height ``a`` and solve for the height b of P2 with P1P2 = Q1Q2.

    Two heights satisfy the arc constraint. The lemma's picture, with the
    angle BP1P2 obtuse, is the one with P2 lower than P1, so b is sought in
    (0, a).
    """
    _check_arc("x_arc", x_arc)
    _check_arc("a", a)
    p1 = _meridian_point(0.0, a)

    def mismatch(b):
        return sph_distance(p1, _meridian_point(x_arc, b)) - x_arc

    lo, hi = mismatch(0.0), mismatch(a)
    if not (lo > 0.0 > hi):
        raise NoSolution(f"no height b in (0, a) gives P1P2 = {x_arc} for a = {a}")
    b = brentq(mismatch, 0.0, a, xtol=ROOT_XTOL, rtol=ROOT_RTOL)
    return _assemble(x_arc, a, b)


def build_spherical_config_from_b(x_arc, b):
    """Same configuration, but with P2's height given and P1's solved for."""
    _check_arc("x_arc", x_arc)
    _check_arc("b", b)
    p2 = _meridian_point(x_arc, b)

    def mismatch(a):
        return sph_distance(_meridian_point(0.0, a), p2) - x_arc

    lo, hi = mismatch(b), mismatch(HALF_PI)
    if not (lo < 0.0 < hi):
        raise NoSolution(f"no height a in (b, pi/2) gives P1P2 = {x_arc} for b = {b}")
    a = brentq(mismatch, b, HALF_PI, xtol=ROOT_XTOL, rtol=ROOT_RTOL)
    return _assemble(x_arc, a, b)


def verify_lemma1(config):
    """Residuals of P1T + TQ2 = pi/2 and P2T + TQ1 = pi/2."""
    c = config
    return {
        "P1T+TQ2=pi/2": abs(sph_distance(c.P1, c.T) + sph_distance(c.T, c.Q2) - HALF_PI),
        "P2T+TQ1=pi/2": abs(sph_distance(c.P2, c.T) + sph_distance(c.T, c.Q1) - HALF_PI),
    }


def lemma2_rhs(config, exponent=2):
    """(1/4) sec^k(P1P2/2) sec^k(BP1/2) sec^k(BP2/2).

    With k = 2 this equals tan^2 of the circumradius of BP1P2 and reduces to
    (1/4) sec^4(BP/2) as P1 and P2 merge. The value k = 4 gives a formula
    that fails the check; it is kept so that the failure can be shown.
    """
    arcs = (
        config.x_arc,
        sph_distance(config.B, config.P1),
        sph_distance(config.B, config.P2),
    )
    product = 1.0
    for arc in arcs:
        product /= math.cos(0.5 * arc) ** exponent
    return 0.25 * product


def verify_lemma2(config, exponent=2):
    """tan^2 of the constructed circumradius of BP1P2, and the closed form."""
    radius = circumradius(config.B, config.P1, config.P2)
    return math.tan(radius) ** 2, lemma2_rhs(config, exponent)


# -- plane --------------------------------------------------------------------


@dataclass(frozen=True)
class PlanarLemmaConfig:
    O: np.ndarray
    Q1: np.ndarray
    Q2: np.ndarray
    P1: np.ndarray
    P2: np.ndarray
    U: np.ndarray  # line P1P2 meets x = 0
    T: np.ndarray  # line P1P2 meets x = 1
    x1: float
    x2: float

    @property
    def constraint_residual(self):
        return abs(np.linalg.norm(self.P2 - self.P1) - np.linalg.norm(self.Q2 - self.Q1))


def _planar_from_points(q1, q2, p1, p2):
    d = p2 - p1
    scale = np.linalg.norm(d)
    if scale == 0.0 or abs(d[0]) < 1e-12 * scale:
        raise DegenerateConfig("line P1P2 is parallel to the barrier")
    if abs(p1[0] * p2[1] - p1[1] * p2[0]) < 1e-14 * np.linalg.norm(p1) * np.linalg.norm(p2):
        raise DegenerateConfig("O, P1, P2 are collinear")
    u = p1 - (p1[0] / d[0]) * d
    t = p1 + ((1.0 - p1[0]) / d[0]) * d
    u[0], t[0] = 0.0, 1.0
    return PlanarLemmaConfig(np.zeros(2), q1, q2, p1, p2, u, t, float(p1[0]), float(p2[0]))


def _ray_circle_roots(direction, centre, radius):
    """Parameters s with |s*direction - centre| = radius, ascending."""
    aa = direction @ direction
    bb = direction @ centre
    cc = centre @ centre - radius * radius
    disc = bb * bb - aa * cc
    if disc < 0.0:
        raise NoSolution("ray misses the circle")
    root = math.sqrt(disc)
    # product-of-roots form for the smaller-magnitude root
    big = (bb + math.copysign(root, bb)) / aa
    small = cc / (aa * big) if big != 0.0 else 0.0
    return tuple(sorted((small, big)))


def build_planar_config(q1, q2, t1):
    """Q1 = (1, q1), Q2 = (1, q2), P1 = t1*Q1; P2 on OQ2 with |P1P2| = |Q1Q2|.

    P2 is taken as the farther of the two candidates on the ray, matching the
    ordering of points along an interception curve.
    """
    if not q2 > q1:
        raise DomainError(f"need q2 > q1, got {q1}, {q2}")
    if not 0.0 < t1 < 1.0:
        raise DomainError(f"P1 must lie inside the segment OQ1, got t1 = {t1}")
    Q1, Q2 = np.array([1.0, q1]), np.array([1.0, q2])
    P1 = t1 * Q1
    t2 = _ray_circle_roots(Q2, P1, q2 - q1)[1]
    if not 0.0 < t2 <= 1.0:
        raise NoSolution(f"P2 falls outside the segment OQ2 (t2 = {t2})")
    return _planar_from_points(Q1, Q2, P1, t2 * Q2)


def _sin_angle(vertex, a, b):
    u, v = a - vertex, b - vertex
    return abs(u[0] * v[1] - u[1] * v[0]) / (np.linalg.norm(u) * np.linalg.norm(v))


def planar_circumradius(a, b, c):
    ab, bc, ca = np.linalg.norm(b - a), np.linalg.norm(c - b), np.linalg.norm(a - c)
    u, v = b - a, c - a
    area2 = abs(u[0] * v[1] - u[1] * v[0])
    if area2 <= 1e-15 * ab * ca:
        raise DegenerateTriangle("collinear points have no circumcircle")
    return ab * bc * ca / (2.0 * area2)


def _rel(lhs, rhs):
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), np.finfo(float).tiny)


def verify_lemma3(config):
    """Relative residuals of all three parts of the planar lemma."""
    c = config
    dist = lambda p, q: float(np.linalg.norm(p - q))
    OU, UP1, UP2 = abs(c.U[1]), dist(c.U, c.P1), dist(c.U, c.P2)
    TQ1, TQ2 = dist(c.T, c.Q1), dist(c.T, c.Q2)
    P1T, P2T = dist(c.P1, c.T), dist(c.P2, c.T)
    OP1, OP2 = np.linalg.norm(c.P1), np.linalg.norm(c.P2)

    sin_products = (
        _sin_angle(c.P1, c.Q1, c.T) * _sin_angle(c.P2, c.Q2, c.T),
        OP1 * OP2 * (_sin_angle(c.Q1, c.T, c.P1) * _sin_angle(c.Q2, c.T, c.P2)) ** 2,
    )
    return {
        "OU+TQ2=UP1": _rel(OU + TQ2, UP1),
        "OU+TQ1=UP2": _rel(OU + TQ1, UP2),
        "R(OP1P2)=R(OQ1Q2)": _rel(
            planar_circumradius(c.O, c.P1, c.P2), planar_circumradius(c.O, c.Q1, c.Q2)
        ),
        "sin-product": _rel(*sin_products),
        "x1x2*P1T*P2T=TQ1*TQ2": _rel(c.x1 * c.x2 * P1T * P2T, TQ1 * TQ2),
        "(1-x1)(1-x2)*UP1*UP2=TQ1*TQ2": _rel((1 - c.x1) * (1 - c.x2) * UP1 * UP2, TQ1 * TQ2),
    }


# -- Monte-Carlo harnesses ----------------------------------------------------


@dataclass(frozen=True)
class MonteCarloReport:
    name: str
    draws: int
    rejected: int
    max_residual: float
    tolerance: float

    @property
    def passed(self):
        return self.draws > 0 and self.max_residual < self.tolerance


def _draw_rng(seed, index):
    # every draw depends only on (seed, index)
    return np.random.default_rng([seed, index])


def _spherical_draw(seed, index):
    rng = _draw_rng(seed, index)
    return build_spherical_config(rng.uniform(0.05, 1.5), rng.uniform(0.05, 1.5))


def _run(name, draws, tolerance, seed, build, measure):
    worst, rejected, accepted, index = 0.0, 0, 0, 0
    while accepted < draws:
        try:
            config = build(seed, index)
            residual = measure(config)
        except (NoSolution, DegenerateTriangle):
            rejected += 1
        else:
            worst = max(worst, residual)
            accepted += 1
        index += 1
        if rejected > 10 * draws:
            break
    return MonteCarloReport(name, accepted, rejected, float(worst), tolerance)


def monte_carlo_lemma1(draws=200, seed=12345):
    return _run(
        "lemma1",
        draws,
        LEMMA1_TOL,
        seed,
        _spherical_draw,
        lambda c: max(verify_lemma1(c).values()),
    )


def monte_carlo_lemma2(draws=200, seed=12345):
    return _run(
        "lemma2",
        draws,
        LEMMA2_TOL,
        seed,
        _spherical_draw,
        lambda c: _rel(*verify_lemma2(c)),
    )


def _planar_draw(seed, index):
    rng = _draw_rng(seed, index)
    q1 = rng.uniform(-2.0, 2.0)
    h = rng.uniform(0.05, 2.0)
    t1 = rng.uniform(0.05, 0.95)
    config = build_planar_config(q1, q1 + h, t1)
    # nearly vertical P1P2 sends U off to infinity and the identities lose meaning
    d = config.P2 - config.P1
    if abs(d[0]) < 1e-3 * np.linalg.norm(d):
        raise DegenerateConfig("P1P2 nearly parallel to the barrier")
    return config


def monte_carlo_lemma3(draws=500, seed=12345):
    return _run(
        "lemma3",
        draws,
        LEMMA3_TOL,
        seed,
        _planar_draw,
        lambda c: max(verify_lemma3(c).values()),
    )


# -- limits -------------------------------------------------------------------

LIMIT_STEPS = (1e-1, 1e-2, 1e-3)
# required decay order; the sequences here approach 1 from below, so the
# last log-ratio can sit a few thousandths short of it
MIN_ORDER = 1.0
LIMIT_THETA = 1.0
LIMIT_P = 2.0


def lemma1_vs_tangent_triangle(x_arc, theta=LIMIT_THETA):
    """Distance between the lemma's triangle P2 T Q2 and the tangent-line triangle at theta."""
    config = build_spherical_config_from_b(x_arc, HALF_PI - gd(theta))
    ref = triangle_elements_sph(theta)
    return max(
        abs(sph_distance(config.P2, config.T) - ref.arc_PT),
        abs(sph_distance(config.T, config.Q2) - ref.arc_QT),
        abs(sph_angle(config.P2, config.Q2, config.T) - ref.ang_QPT),
        abs(sph_angle(config.P2, config.B, config.T) - ref.ang_BPT),
    )


def lemma2_vs_tangent_circle(x_arc, theta=LIMIT_THETA):
    """Gap between the circumradius of BP1P2 and the tangent small circle at theta."""
    config = build_spherical_config_from_b(x_arc, HALF_PI - gd(theta))
    return abs(circumradius(config.B, config.P1, config.P2) - small_circle_radius(theta))


def _planar_limit_config(h, p):
    state = state_at(p)
    q2 = state.y / state.x
    Q1, Q2 = np.array([1.0, q2 - h]), np.array([1.0, q2])
    P2 = state.point
    t1 = _ray_circle_roots(Q1, P2, h)[0]
    return state, _planar_from_points(Q1, Q2, t1 * Q1, P2)


def lemma3_vs_tangent_line(h, p=LIMIT_P):
    """Distance of the lemma's U and T from the tangent line's U and T at p,
    relative to the length of the tangent segment UT."""
    state, config = _planar_limit_config(h, p)
    ref = triangle_elements(state)
    scale = np.linalg.norm(ref.T - ref.U)
    return float(max(np.linalg.norm(config.U - ref.U), np.linalg.norm(config.T - ref.T)) / scale)


def lemma3_vs_tangent_circle(h, p=LIMIT_P):
    """Relative gap between the circle through O, P1, P2 and the tangent circle at P."""
    state, config = _planar_limit_config(h, p)
    r_p, _ = tangent_circle_radii(state)
    return abs(planar_circumradius(config.O, config.P1, config.P2) - r_p) / r_p


@dataclass(frozen=True)
class ConvergenceSequence:
    name: str
    steps: tuple
    residuals: tuple

    @property
    def observed_order(self):
        """Decay order between the last two steps."""
        (h1, h2), (r1, r2) = self.steps[-2:], self.residuals[-2:]
        return math.log(r1 / r2) / math.log(h1 / h2)

    @property
    def monotone(self):
        return all(b < a for a, b in zip(self.residuals, self.residuals[1:]))


@dataclass(frozen=True)
class ConvergenceReport:
    sequences: tuple = field(default_factory=tuple)

    @property
    def min_order(self):
        return min(s.observed_order for s in self.sequences)

    @property
    def passed(self):
        return all(s.monotone for s in self.sequences) and self.min_order >= MIN_ORDER


def limiting_case_convergence(steps=LIMIT_STEPS):
    checks = (
        ("lemma1->tangent triangle on the sphere", lemma1_vs_tangent_triangle),
        ("lemma2->tangent small circle", lemma2_vs_tangent_circle),
        ("lemma3->tangent line in the plane", lemma3_vs_tangent_line),
        ("lemma3->tangent circle in the plane", lemma3_vs_tangent_circle),
    )
    sequences = tuple(
        ConvergenceSequence(name, tuple(steps), tuple(fn(h) for h in steps)) for name, fn in checks
    )
    return ConvergenceReport(sequences)
