"""Interception curves in the plane and on the sphere.

A point moving at unit speed along the ray (or great circle) through a target
that itself moves at unit speed along a barrier traces the interception
curve. The package computes both curves, checks their tangent-line and
circle theorems numerically, and reproduces the limiting gap B^2 given by
the second lemniscate constant.
"""

from ._backend import BACKEND

__version__ = "0.1.0"

from . import errors, lemmas, numerics, planar, projections, pursuit, spherical
from .errors import (
    ConsistencyError,
    DegenerateConfig,
    DegenerateTangent,
    DegenerateTriangle,
    DomainError,
    InterceptionError,
    NonConvergent,
    NoSolution,
    PoleError,
    RootNotFound,
    StiffnessOrSingularity,
)
from .numerics import lemniscate_constants
from .planar import limit_PQ, limit_PT_minus_TQ, state_at, triangle_elements
from .spherical import gd_curve, small_circle_radius, triangle_elements_sph

__all__ = [
    "BACKEND",
    "ConsistencyError",
    "DegenerateConfig",
    "DegenerateTangent",
    "DegenerateTriangle",
    "DomainError",
    "InterceptionError",
    "NoSolution",
    "NonConvergent",
    "PoleError",
    "RootNotFound",
    "StiffnessOrSingularity",
    "errors",
    "gd_curve",
    "lemmas",
    "lemniscate_constants",
    "limit_PQ",
    "limit_PT_minus_TQ",
    "numerics",
    "planar",
    "projections",
    "pursuit",
    "small_circle_radius",
    "spherical",
    "state_at",
    "triangle_elements",
    "triangle_elements_sph",
]
