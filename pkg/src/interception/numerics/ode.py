"""Explicit adaptive Runge-Kutta (Dormand-Prince 5(4)) initial value solver."""

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, StiffnessOrSingularity

# Butcher tableau
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = [
    [],
    [1 / 5],
    [3 / 40, 9 / 40],
    [44 / 45, -56 / 15, 32 / 9],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
    [35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
]
_B5 = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
_B4 = np.array([5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40])
_E = _B5 - _B4

_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 5.0


@dataclass
class Trajectory:
    """Accepted steps of an integration; calling it interpolates (cubic Hermite)."""

    t: np.ndarray
    y: np.ndarray  # shape (n_steps + 1, dim)
    dy: np.ndarray
    n_rejected: int = 0

    def __call__(self, t):
        t = float(t)
        ts = self.t
        lo, hi = min(ts[0], ts[-1]), max(ts[0], ts[-1])
        if not (lo - 1e-12 * max(1.0, abs(hi)) <= t <= hi + 1e-12 * max(1.0, abs(hi))):
            raise DomainError(f"t={t} outside integrated range [{lo}, {hi}]")
        forward = ts[-1] >= ts[0]
        i = int(np.searchsorted(ts if forward else -ts, t if forward else -t, side="right")) - 1
        i = min(max(i, 0), len(ts) - 2)
        t0, t1 = ts[i], ts[i + 1]
        h = t1 - t0
        s = (t - t0) / h
        h00 = (1 + 2 * s) * (1 - s) ** 2
        h10 = s * (1 - s) ** 2
        h01 = s * s * (3 - 2 * s)
        h11 = s * s * (s - 1)
        return (
            h00 * self.y[i] + h10 * h * self.dy[i] + h01 * self.y[i + 1] + h11 * h * self.dy[i + 1]
        )

    @property
    def final(self):
        return self.y[-1]


def _rms(x):
    return math.sqrt(float(np.mean(x * x)))


def _initial_step(f, t0, y0, f0, direction, tol):
    scale = tol + tol * np.abs(y0)
    d0 = _rms(y0 / scale)
    d1 = _rms(f0 / scale)
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    y1 = y0 + direction * h0 * f0
    f1 = np.asarray(f(t0 + direction * h0, y1), dtype=float)
    d2 = _rms((f1 - f0) / scale) / h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** (1 / 5)
    return min(100 * h0, h1)


def solve_ivp(f, t0, state0, t_end, tol=1e-10, max_steps=1_000_000, first_step=None):
    """Integrate ``state' = f(t, state)`` from ``t0`` to ``t_end``.

    Local error per step is held below ``tol`` in a mixed absolute/relative
    RMS norm. A non-finite derivative counts as a rejected step.

    Raises
    ------
    StiffnessOrSingularity
        When the step size underflows or ``max_steps`` is reached.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    y = np.atleast_1d(np.asarray(state0, dtype=float)).copy()
    t = float(t0)
    t_end = float(t_end)
    if t == t_end:
        f0 = np.asarray(f(t, y), dtype=float)
        return Trajectory(np.array([t, t]), np.array([y, y]), np.array([f0, f0]))
    direction = 1.0 if t_end > t else -1.0

    k = np.empty((7, y.size))
    k[0] = np.asarray(f(t, y), dtype=float)
    if not np.all(np.isfinite(k[0])):
        raise StiffnessOrSingularity(f"non-finite derivative at the initial point t={t}")
    h = abs(first_step) if first_step else _initial_step(f, t, y, k[0], direction, tol)

    ts, ys, dys = [t], [y.copy()], [k[0].copy()]
    n_rejected = 0
    for _ in range(max_steps):
        remaining = abs(t_end - t)
        if remaining <= 0:
            break
        h = min(h, remaining)
        if h < 16 * np.finfo(float).eps * max(1.0, abs(t)):
            raise StiffnessOrSingularity(f"step size underflow at t={t}")
        hs = direction * h
        finite = True
        for i in range(1, 7):
            yi = y + hs * (np.asarray(_A[i]) @ k[:i])
            k[i] = np.asarray(f(t + _C[i] * hs, yi), dtype=float)
            if not np.all(np.isfinite(k[i])):
                finite = False
                break
        if not finite:
            n_rejected += 1
            h *= 0.25
            continue
        y_new = y + hs * (_B5 @ k)
        err_vec = hs * (_E @ k)
        scale = tol + tol * np.maximum(np.abs(y), np.abs(y_new))
        err = _rms(err_vec / scale)
        if err <= 1.0:
            t = t_end if h == remaining else t + hs
            y = y_new
            k[0] = k[6]
            ts.append(t)
            ys.append(y.copy())
            dys.append(k[0].copy())
            factor = _MAX_FACTOR if err == 0 else min(_MAX_FACTOR, _SAFETY * err**-0.2)
            h *= factor
        else:
            n_rejected += 1
            h *= max(_MIN_FACTOR, _SAFETY * err**-0.2)
    else:
        raise StiffnessOrSingularity(f"max_steps={max_steps} reached at t={t}")
    return Trajectory(np.array(ts), np.array(ys), np.array(dys), n_rejected)
