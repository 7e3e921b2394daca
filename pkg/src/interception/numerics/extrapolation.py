"""Limits of sampled sequences by fitting an asymptotic power model in h."""

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError


@dataclass(frozen=True)
class Extrapolation:
    value: float
    error_estimate: float
    coefficients: tuple

    def __float__(self):
        return self.value


def _fit(h, v, exponents):
    basis = np.column_stack([np.ones_like(h)] + [h**e for e in exponents])
    coef, *_ = np.linalg.lstsq(basis, v, rcond=None)
    resid = v - basis @ coef
    return coef, resid


def extrapolate_limit(samples, exponents=(1.0,)):
    """Estimate ``lim_{h -> 0} v(h)`` assuming ``v = L + sum_j c_j h**e_j``.

    ``samples`` is a sequence of ``(h, value)`` pairs with ``h > 0`` strictly
    decreasing. With more samples than unknowns the model is fitted by least
    squares. The error estimate compares against a fit that uses one sample
    fewer (or, for an exactly determined fit, one term fewer).
    """
    samples = [(float(h), float(v)) for h, v in samples]
    if len(samples) < 3:
        raise DomainError(f"need at least 3 samples, got {len(samples)}")
    h = np.array([s[0] for s in samples])
    v = np.array([s[1] for s in samples])
    if np.any(h <= 0) or np.any(np.diff(h) >= 0):
        raise DomainError("h must be positive and strictly decreasing")
    exponents = tuple(float(e) for e in exponents)
    if len(samples) < len(exponents) + 1:
        raise DomainError(f"{len(exponents) + 1} unknowns need at least that many samples")

    coef, resid = _fit(h, v, exponents)
    limit = float(coef[0])
    if len(samples) > len(exponents) + 1:
        ref, _ = _fit(h[1:], v[1:], exponents)
        estimate = abs(limit - ref[0]) + float(np.sqrt(np.mean(resid**2)))
    else:
        ref, _ = _fit(h[1:], v[1:], exponents[:-1])
        estimate = abs(limit - ref[0])
    return Extrapolation(limit, float(estimate), tuple(float(c) for c in coef))
