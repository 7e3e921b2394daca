"""The planar interception curve.

P starts at the origin, Q at A(1, 0); both move with unit speed, Q up the
line x = 1 and P along the ray OQ. The curve is parametrised by its slope
p = y' >= 0.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, NonConvergent
from .numerics import extrapolate_limit, integrate, integrate_coded, kernels, solve_ivp

X_ABS_TOL = 1e-14
X_REL_TOL = 1e-13
MAX_SUBDIVISIONS = 1_000_000

SERIES_COEFFICIENTS = (
    1.0,
    1.0 / 6.0,
    7.0 / 40.0,
    43.0 / 720.0,
)  # on theta, theta^3, theta^5, theta^7
SERIES_RADIUS = 0.5

LIMIT_PS = (1e3, 1e4, 1e5)
# |PQ|(p) = L + c1 p^(-1/2) + c2 p^(-1), written in h = 1/p
LIMIT_EXPONENTS = (0.5, 1.0)

POLAR_CUTOFF = 1e-3  # integrate the polar ODE only up to pi/2 - POLAR_CUTOFF


@dataclass(frozen=True)
class PlanarCurveState:
    p: float
    x: float
    y: float
    theta: float
    gap: float  # 1 - x, kept separately because x -> 1 as p grows

    @property
    def point(self):
        return np.array([self.x, self.y])

    @property
    def implicit_residual(self):
        return abs(self.x**2 * math.sqrt(1.0 + self.p**2) - (self.p * self.x - self.y))


@dataclass(frozen=True)
class TriangleElementsPlanar:
    P: np.ndarray
    F: np.ndarray
    U: np.ndarray
    T: np.ndarray
    Q: np.ndarray
    len_UP: float
    len_OU: float
    len_TQ: float
    len_PT: float
    len_PQ: float
    len_OP: float
    sin_QPT: float
    sin_TQP: float
    x: float

    def tangent_line_residuals(self):
        """Relative residuals of the four tangent-line identities."""

        def rel(lhs, rhs):
            scale = max(abs(lhs), abs(rhs))
            return abs(lhs - rhs) / scale if scale > 0 else 0.0

        return {
            "UP=OU+TQ": rel(self.len_UP, self.len_OU + self.len_TQ),
            "(1-x)UP=TQ": rel((1.0 - self.x) * self.len_UP, self.len_TQ),
            "x*PT=TQ": rel(self.x * self.len_PT, self.len_TQ),
            "sinQPT=OP*sin^2TQP": rel(self.sin_QPT, self.len_OP * self.sin_TQP**2),
        }


def _check_status(status, what):
    if status != 0:
        raise NonConvergent(f"quadrature for {what} did not converge (status {status})")


def _y_from(p, x, gap):
    s = math.sqrt(p * p + 1.0)
    if p <= 1.0:
        return p * x - x * x * s
    # p*x - x^2*s = x*(gap*s - 1/(p + s)); avoids cancelling two O(p) terms
    return x * (gap * s - 1.0 / (p + s))


def _make_state(p, x, gap):
    y = _y_from(p, x, gap)
    theta = math.atan2(y, x) if x > 0 else 0.0
    return PlanarCurveState(p=p, x=x, y=y, theta=theta, gap=gap)


def state_at(p):
    """Point of the curve where the slope is ``p``."""
    if not p >= 0:
        raise DomainError(f"slope parameter must be >= 0, got {p}")
    p = float(p)
    if p == 0.0:
        return PlanarCurveState(0.0, 0.0, 0.0, 0.0, 1.0)
    x, gap, _, status = kernels.x_and_gap(p, X_ABS_TOL, X_REL_TOL, MAX_SUBDIVISIONS)
    _check_status(status, f"x({p})")
    return _make_state(p, x, gap)


def sample(ps):
    """Vectorised ``state_at`` over an array of slopes; returns ``(x, y, gap)`` arrays."""
    ps = np.asarray(ps, dtype=float)
    if np.any(ps < 0):
        raise DomainError("slope parameters must be >= 0")
    xs, gaps, _, status = kernels.x_and_gap_batch(ps, X_ABS_TOL, X_REL_TOL, MAX_SUBDIVISIONS)
    _check_status(status, "batch x(p)")
    xs = np.where(ps == 0, 0.0, xs)
    gaps = np.where(ps == 0, 1.0, gaps)
    ys = np.array([_y_from(p, x, g) if p > 0 else 0.0 for p, x, g in zip(ps, xs, gaps)])
    return xs, ys, gaps


def x_direct(p, abs_tol=1e-14):
    """x(p) straight from the parametrisation integral (no complementary form)."""
    res = integrate_coded(kernels.I_CODE, 0.0, p, abs_tol) if p > 0 else None
    return 0.0 if res is None else res.value / (p * p + 1.0) ** 0.25


def slope_from_point(x, y):
    """Recover y' from a curve point by solving y = y'x - x^2 sqrt(y'^2 + 1)."""
    if not 0.0 < x < 1.0:
        raise DomainError(f"need 0 < x < 1, got {x}")
    disc = x * x + y * y - x**4
    if disc < 0:
        raise DomainError(f"({x}, {y}) is not on any curve of the family")
    return (y + x * math.sqrt(disc)) / (x * (1.0 - x * x))


def _alt_state(x, y):
    if x == 0.0:
        return PlanarCurveState(0.0, 0.0, 0.0, 0.0, 1.0)
    p = slope_from_point(x, y)
    return PlanarCurveState(p=p, x=x, y=y, theta=math.atan2(y, x), gap=1.0 - x)


def state_at_alt1(q):
    """Point from the first alternative parametrisation, ``q = d(y/x)/dx >= 1``.

    x(q) = q^(-1/2) * int_1^q sqrt(t) / (2 sqrt(t^2 - 1)) dt; the endpoint
    singularity is removed with t = 1 + u^2.
    """
    if not q >= 1:
        raise DomainError(f"alternative parameter must be >= 1, got {q}")
    q = float(q)
    if q == 1.0:
        return _alt_state(0.0, 0.0)
    u_max = math.sqrt(q - 1.0)
    integral = integrate_coded(kernels.ALT1_CODE, 0.0, u_max, X_ABS_TOL, X_REL_TOL).value
    x = integral / math.sqrt(q)
    y = x * math.sqrt(q * q - 1.0) - x * x * q
    return _alt_state(x, y)


def state_at_alt2(q):
    """Point from the second alternative parametrisation (solves first for z = y/x)."""
    if not q >= 1:
        raise DomainError(f"alternative parameter must be >= 1, got {q}")
    q = float(q)
    if q == 1.0:
        return _alt_state(0.0, 0.0)
    u_max = math.sqrt(q - 1.0)
    integral = integrate_coded(kernels.ALT2_CODE, 0.0, u_max, X_ABS_TOL, X_REL_TOL).value
    z = math.sqrt(q) * integral
    x = math.sqrt(q * q - 1.0) / q - z / q
    return _alt_state(x, x * z)


def state_at_x(x, p_max=1e9):
    """The curve point with abscissa ``x``, by root-finding on x(p)."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"need 0 <= x < 1, got {x}")
    if x == 0.0:
        return state_at(0.0)

    def f(p):
        xp, gap, _, status = kernels.x_and_gap(p, X_ABS_TOL, X_REL_TOL, MAX_SUBDIVISIONS)
        _check_status(status, f"x({p})")
        return (1.0 - gap) - x if x < 0.5 else (1.0 - x) - gap

    hi = 1.0
    while f(hi) < 0:
        hi *= 10.0
        if hi > p_max:
            raise DomainError(f"x={x} too close to 1")
    p = brentq(f, 0.0, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)
    return state_at(p)


def triangle_elements(state):
    """Points F, U, T, Q cut by the tangent at P and the segment lengths."""
    p, x, y, gap = state.p, state.x, state.y, state.gap
    if not 0.0 < x < 1.0 or p <= 0:
        raise DomainError(f"triangle needs 0 < x < 1 and p > 0, got x={x}, p={p}")
    z = y / x  # height of Q
    P = np.array([x, y])
    F = np.array([x - y / p, 0.0])
    U = np.array([0.0, y - x * p])
    T = np.array([1.0, y + gap * p])
    Q = np.array([1.0, z])

    # difference vectors with the 1 - x factor taken from gap, not from 1.0 - x
    PT = np.array([gap, gap * p])
    PQ = np.array([gap, gap * z])
    QT = np.array([0.0, gap * p - gap * z])
    UP = P - U

    len_UP = math.hypot(*UP)
    len_OU = abs(U[1])
    len_TQ = abs(QT[1])
    len_PT = math.hypot(*PT)
    len_PQ = math.hypot(*PQ)
    len_OP = math.hypot(x, y)

    sin_QPT = abs(PQ[0] * PT[1] - PQ[1] * PT[0]) / (len_PQ * len_PT)
    sin_TQP = abs(QT[0] * PQ[1] - QT[1] * PQ[0]) / (len_TQ * len_PQ) if len_TQ > 0 else 0.0
    return TriangleElementsPlanar(
        P=P,
        F=F,
        U=U,
        T=T,
        Q=Q,
        len_UP=len_UP,
        len_OU=len_OU,
        len_TQ=len_TQ,
        len_PT=len_PT,
        len_PQ=len_PQ,
        len_OP=len_OP,
        sin_QPT=sin_QPT,
        sin_TQP=sin_TQP,
        x=x,
    )


def tangent_circle_radii(state):
    """Radii of the circles through O tangent to UT at P and to AT at Q."""
    p, x, y = state.p, state.x, state.y
    if not 0.0 < x < 1.0:
        raise DomainError(f"need 0 < x < 1, got {x}")
    ou = x * p - y
    if ou <= 0:
        raise DomainError("tangent line passes through the origin")
    r2 = x * x + y * y
    return r2 * math.sqrt(1.0 + p * p) / (2.0 * ou), r2 / (2.0 * x * x)


def _circle_through_origin_tangent_at(point, direction):
    """Radius of the circle through O tangent to the line ``point + t*direction`` at ``point``."""
    normal = np.array([-direction[1], direction[0]])
    # centre = point + s*normal with |centre| = |centre - point|
    #   => 2 s (point . normal) + |point|^2 = 0
    s = -(point @ point) / (2.0 * (point @ normal))
    return abs(s) * math.hypot(*normal)


def tangent_circle_radii_constructed(state):
    """Same radii, by building each circle centre from its tangency condition."""
    if not 0.0 < state.x < 1.0:
        raise DomainError(f"need 0 < x < 1, got {state.x}")
    r_p = _circle_through_origin_tangent_at(state.point, np.array([1.0, state.p]))
    q = np.array([1.0, state.y / state.x])
    r_q = _circle_through_origin_tangent_at(q, np.array([0.0, 1.0]))
    return r_p, r_q


def pq_length(p):
    state = state_at(p)
    return triangle_elements(state).len_PQ


def pt_minus_tq(p):
    """|PT| - |TQ| = (1 - x)(sqrt(1 + p^2) - p + y/x), in cancellation-free form."""
    state = state_at(p)
    s = math.sqrt(1.0 + p * p)
    return state.gap * (1.0 / (s + p) + state.y / state.x)


def horizontal_gap(p):
    """|(PQ)_y| = (1 - x) y / x, non-decreasing along the curve."""
    state = state_at(p)
    if state.x == 0.0:
        return 0.0
    return state.gap * state.y / state.x


def _limit(fn, ps):
    ps = sorted(ps)
    samples = [(1.0 / p, fn(p)) for p in ps]
    return extrapolate_limit(samples, LIMIT_EXPONENTS)


def limit_PQ(ps=LIMIT_PS):
    """Extrapolated limit of |PQ| as x -> 1."""
    return _limit(pq_length, ps)


def limit_PT_minus_TQ(ps=LIMIT_PS):
    return _limit(pt_minus_tq, ps)


def arc_length_check(p, abs_tol=1e-12):
    """Curve length from O to the point with slope ``p``, and the claimed value y/x.

    The length element is sqrt(1 + p^2) x'(p) dp; differentiating the
    parametrisation gives sqrt(1 + t^2) x'(t) = 1/2 - t x(t) / (2 sqrt(1 + t^2)).
    """
    if not p > 0:
        raise DomainError(f"need p > 0, got {p}")

    def element(t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        xs, _, _ = sample(t)
        return 0.5 - t * xs / (2.0 * np.sqrt(1.0 + t * t))

    arc = integrate(element, 0.0, float(p), abs_tol).value
    state = state_at(p)
    return arc, state.y / state.x


def series_solution(theta):
    """Odd power series of the polar solution r(theta) with r(0) = 0, r'(0) = 1."""
    if abs(theta) > SERIES_RADIUS:
        raise DomainError(f"series is only used for |theta| <= {SERIES_RADIUS}, got {theta}")
    t2 = theta * theta
    c1, c3, c5, c7 = SERIES_COEFFICIENTS
    return theta * (c1 + t2 * (c3 + t2 * (c5 + t2 * c7)))


def polar_rhs(theta, r):
    """r' = sqrt(sec^4(theta) - r^2) on the positive branch."""
    c = np.cos(theta)
    return np.sqrt(np.maximum(1.0 / c**4 - r * r, 0.0))


def polar_solution(theta_end, tol=1e-12):
    """Integrate the polar ODE from r(0) = 0 and return the trajectory."""
    if not 0 <= theta_end <= math.pi / 2 - POLAR_CUTOFF:
        raise DomainError(f"polar ODE is integrated on [0, pi/2 - {POLAR_CUTOFF}], got {theta_end}")
    return solve_ivp(polar_rhs, 0.0, [0.0], theta_end, tol)
