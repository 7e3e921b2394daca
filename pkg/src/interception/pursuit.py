"""Bouguer's pursuit curve and the comparison with the interception curve."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .numerics import integrate, solve_ivp

IVP_STOP = 0.999  # the closed form has a log singularity at x = 1


@dataclass(frozen=True)
class PursuitState:
    x: float
    y: float
    slope: float
    gap: float  # current |PQ|

    @property
    def evader_height(self):
        """Where the tangent at P meets x = 1: the evader's position."""
        return self.y + (1.0 - self.x) * self.slope


def _check_x(x):
    if not 0.0 <= x < 1.0:
        raise DomainError(f"pursuit curve is defined for 0 <= x < 1, got {x}")


def bouguer_y(x):
    u = 1.0 - x
    return 0.25 * u * u - 0.5 * math.log(u) - 0.25


def bouguer_slope(x):
    u = 1.0 - x
    return 0.5 * (1.0 / u - u)


def bouguer(x):
    """Closed-form pursuit curve with y(0) = y'(0) = 0.

    The gap is measured as the distance from P to the evader, i.e. to the
    point where the tangent meets x = 1.
    """
    _check_x(x)
    x = float(x)
    slope = bouguer_slope(x)
    u = 1.0 - x
    gap = math.hypot(u, u * slope)
    return PursuitState(x=x, y=bouguer_y(x), slope=slope, gap=gap)


def gap_formula(x):
    _check_x(x)
    return 0.5 + 0.5 * (1.0 - x) ** 2


def pursuit_rhs(x, state):
    """First-order form of (1 - x) y'' = sqrt(1 + y'^2)."""
    y, v = state
    return np.array([v, math.sqrt(1.0 + v * v) / (1.0 - x)])


def pursuit_ivp(x_end=IVP_STOP, tol=1e-12):
    if not 0.0 <= x_end <= IVP_STOP:
        raise DomainError(f"pursuit ODE is integrated on [0, {IVP_STOP}], got {x_end}")
    return solve_ivp(pursuit_rhs, 0.0, [0.0, 0.0], x_end, tol)


def pursuit_equal_speed_check(x, abs_tol=1e-12):
    """Pursuer arc length from 0 to x, and the distance the evader has covered."""
    _check_x(x)
    if x == 0.0:
        return 0.0, 0.0
    arc = integrate(lambda t: np.sqrt(1.0 + bouguer_slope(t) ** 2), 0.0, float(x), abs_tol).value
    return arc, bouguer(x).evader_height


def line_strategy_gap(k):
    """Gap kept by running along y = kx to (1, k) and then up the barrier."""
    if not k >= 0:
        raise DomainError(f"need k >= 0, got {k}")
    # sqrt(k^2 + 1) - k without cancellation
    return 1.0 / (math.sqrt(k * k + 1.0) + k)


@dataclass(frozen=True)
class StrategyRow:
    strategy: str
    limit_gap: float
    note: str = ""


@dataclass(frozen=True)
class ComparisonReport:
    rows: tuple
    interception_beats_pursuit: bool

    def as_dict(self):
        return {row.strategy: row.limit_gap for row in self.rows}


def comparison_report(line_ks=(0.0, 0.75, 1.0, 10.0)):
    """Limiting |PQ| for the interception curve, the pursuit curve and straight-line runs."""
    # imported here so the pursuit module stays usable without the planar kernels
    from .planar import limit_PQ

    interception = limit_PQ().value
    pursuit = 0.5  # 1/2 + (1 - x)^2 / 2 at x = 1
    rows = [
        StrategyRow("interception", interception, "extrapolated over p = 1e3, 1e4, 1e5"),
        StrategyRow("pursuit", pursuit, "closed form 1/2 + (1 - x)^2/2 at x = 1"),
    ]
    for k in line_ks:
        rows.append(StrategyRow(f"line(k={k:g})", line_strategy_gap(k), "sqrt(k^2 + 1) - k"))
    return ComparisonReport(rows=tuple(rows), interception_beats_pursuit=interception < pursuit)
