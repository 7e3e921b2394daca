"""Numerical kernel: quadrature, AGM, gamma, ODE integration, extrapolation."""

from .extrapolation import Extrapolation, extrapolate_limit
from .kernels import BACKEND
from .ode import Trajectory, solve_ivp
from .quadrature import QuadratureResult, integrate, integrate_coded
from .special import (
    LemniscateConstants,
    agm,
    b_from_agm,
    b_from_gamma,
    b_from_quadrature,
    gamma,
    lemniscate_constants,
)

__all__ = [
    "BACKEND",
    "Extrapolation",
    "LemniscateConstants",
    "QuadratureResult",
    "Trajectory",
    "agm",
    "b_from_agm",
    "b_from_gamma",
    "b_from_quadrature",
    "extrapolate_limit",
    "gamma",
    "integrate",
    "integrate_coded",
    "lemniscate_constants",
    "solve_ivp",
]
