"""Adaptive Gauss-Kronrod quadrature with a rigorous-style error estimate."""

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, NonConvergent
from . import _kernels_numpy, kernels

MAX_SUBDIVISIONS = 1_000_000


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    subdivisions: int

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise NonConvergent(f"non-finite quadrature value {self.value}")
        if not self.error_estimate >= 0.0:
            raise NonConvergent(f"invalid error estimate {self.error_estimate}")

    def __float__(self):
        return self.value


def _vectorize(f):
    """Wrap ``f`` so it maps an array of nodes to an array of values."""

    def g(t):
        try:
            out = np.asarray(f(t), dtype=float)
        except (TypeError, ValueError):
            out = None
        if out is None or out.shape != t.shape:
            if out is not None and out.ndim == 0:
                out = np.full(t.shape, float(out))
            else:
                out = np.array([f(float(ti)) for ti in t], dtype=float)
        return out

    return g


def _check(status, value, err, n, abs_tol, rel_tol=0.0):
    tol = max(abs_tol, rel_tol * abs(value))
    if status == _kernels_numpy.BUDGET_EXHAUSTED:
        raise NonConvergent(
            f"subdivision budget exhausted ({n} intervals, error {err:.3e} > {tol:.3e})"
        )
    if status == _kernels_numpy.ROUNDOFF:
        raise NonConvergent(
            f"roundoff limits accuracy (error {err:.3e} > {tol:.3e} after {n} intervals)"
        )
    return QuadratureResult(float(value), float(err), int(n))


def integrate(f, a, b, abs_tol=1e-12, rel_tol=0.0, max_subdivisions=MAX_SUBDIVISIONS):
    """Integrate ``f`` over ``[a, b]``.

    ``f`` may be vectorised (array in, array out) or scalar. An infinite upper
    limit is mapped onto ``[0, pi/2)`` with ``t = a + tan(s)``. Refinement
    stops when the error estimate is below ``max(abs_tol, rel_tol*|value|)``.

    Raises
    ------
    DomainError
        If ``a >= b`` or ``abs_tol <= 0``.
    NonConvergent
        If the tolerance is not met within the subdivision budget, or the
        integrand is not finite at a node.
    """
    if not abs_tol > 0:
        raise DomainError(f"abs_tol must be positive, got {abs_tol}")
    if not (a < b):
        raise DomainError(f"need a < b, got a={a}, b={b}")
    if math.isinf(a):
        raise DomainError("lower limit must be finite")
    g = _vectorize(f)
    if math.isinf(b):
        inner = g

        def g(s):
            c = np.cos(s)
            return inner(a + np.tan(s)) / (c * c)

        a, b = 0.0, math.pi / 2
    try:
        value, err, n, status = _kernels_numpy.adaptive(
            g, float(a), float(b), abs_tol, rel_tol, max_subdivisions
        )
    except FloatingPointError as exc:
        raise NonConvergent(str(exc)) from exc
    return _check(status, value, err, n, abs_tol, rel_tol)


def integrate_coded(code, a, b, abs_tol=1e-14, rel_tol=1e-13, max_subdivisions=MAX_SUBDIVISIONS):
    """Integrate one of the built-in integrands (see ``kernels``) on the active backend."""
    if not abs_tol > 0:
        raise DomainError(f"abs_tol must be positive, got {abs_tol}")
    if not (a < b):
        raise DomainError(f"need a < b, got a={a}, b={b}")
    value, err, n, status = kernels.gk_adaptive(
        code, float(a), float(b), abs_tol, rel_tol, max_subdivisions
    )
    return _check(status, value, err, n, abs_tol, rel_tol)
