"""Pure-numpy kernels.

The 21 Kronrod nodes of an interval are evaluated in one vectorised call, so
arbitrary Python callables can be integrated as well as the coded integrands
shared with the compiled backend.
"""

import heapq

import numpy as np

from ._gk21 import EPS, GAUSS_WEIGHTS, KRONROD_WEIGHTS, NODES, TINY

OK, BUDGET_EXHAUSTED, ROUNDOFF = 0, 1, 2


def _i_integrand(t):
    return 0.5 / (t * t + 1.0) ** 0.25


def _j_integrand(t):
    s = np.sqrt(t * t + 1.0)
    return 0.5 / ((t * t + 1.0) ** 0.75 * (s + t))


def _alt1_integrand(u):
    return np.sqrt(1.0 + u * u) / np.sqrt(2.0 + u * u)


def _alt2_integrand(u):
    return 1.0 / ((1.0 + u * u) ** 1.5 * np.sqrt(2.0 + u * u))


INTEGRANDS = {0: _i_integrand, 1: _j_integrand, 2: _alt1_integrand, 3: _alt2_integrand}


def gk21(f, a, b):
    centr = 0.5 * (a + b)
    hlgth = 0.5 * (b - a)
    fv = np.asarray(f(centr + hlgth * NODES), dtype=float)
    resk = KRONROD_WEIGHTS @ fv
    resg = GAUSS_WEIGHTS @ fv
    reskh = 0.5 * resk
    dh = abs(hlgth)
    resabs = (KRONROD_WEIGHTS @ np.abs(fv)) * dh
    resasc = (KRONROD_WEIGHTS @ np.abs(fv - reskh)) * dh
    abserr = abs((resk - resg) * hlgth)
    if resasc != 0.0 and abserr != 0.0:
        abserr = resasc * min(1.0, (200.0 * abserr / resasc) ** 1.5)
    floor = 0.0
    if resabs > TINY / (50.0 * EPS):
        floor = 50.0 * EPS * resabs
        abserr = max(floor, abserr)
    return float(resk * hlgth), float(abserr), float(floor), fv


def adaptive(f, a, b, abs_tol, rel_tol, max_sub):
    """Globally adaptive bisection; returns ``(value, error, n_intervals, status)``.

    Stops once the summed error is below ``max(abs_tol, rel_tol*|value|)``.

    Raises ``FloatingPointError`` if ``f`` produces a non-finite value.
    """
    v, e, fl, fv = gk21(f, a, b)
    if not np.all(np.isfinite(fv)):
        raise FloatingPointError(f"non-finite integrand on [{a}, {b}]")
    # heap entries: (-error, tie-break counter, left, right, value, error, floor)
    heap = [(-e, 0, a, b, v, e, fl)]
    counter = 1
    total_v = v
    total_e = e
    status = OK
    while total_e > max(abs_tol, rel_tol * abs(total_v)):
        if len(heap) >= max_sub:
            status = BUDGET_EXHAUSTED
            break
        _, _, left, right, v0, e0, fl0 = heap[0]
        mid = 0.5 * (left + right)
        # the worst interval is already at its rounding floor, or too narrow to split
        if e0 <= fl0 * (1.0 + 1e-9):
            status = ROUNDOFF
            break
        if not (left < mid < right) or (right - left) < 4.0 * EPS * max(abs(left), abs(right)):
            status = ROUNDOFF
            break
        v1, e1, fl1, fv1 = gk21(f, left, mid)
        v2, e2, fl2, fv2 = gk21(f, mid, right)
        if not (np.all(np.isfinite(fv1)) and np.all(np.isfinite(fv2))):
            raise FloatingPointError(f"non-finite integrand on [{left}, {right}]")
        heapq.heapreplace(heap, (-e1, counter, left, mid, v1, e1, fl1))
        heapq.heappush(heap, (-e2, counter + 1, mid, right, v2, e2, fl2))
        counter += 2
        total_v += v1 + v2 - v0
        total_e += e1 + e2 - e0
        if total_e <= max(abs_tol, rel_tol * abs(total_v)):
            total_e = sum(item[5] for item in heap)
            total_v = sum(item[4] for item in heap)
    value = sum(item[4] for item in sorted(heap, key=lambda item: item[2]))
    total_e = sum(item[5] for item in heap)
    return value, total_e, len(heap), status


def gk_adaptive(code, a, b, abs_tol, rel_tol, max_sub):
    return adaptive(INTEGRANDS[code], a, b, abs_tol, rel_tol, max_sub)


def x_and_gap(p, abs_tol, rel_tol, max_sub):
    q = (p * p + 1.0) ** 0.25
    if p <= 1.0:
        v, e, _, status = gk_adaptive(0, 0.0, p, abs_tol, rel_tol, max_sub)
        x = v / q
        return x, 1.0 - x, e / q, status
    v, e, _, status = gk_adaptive(1, 0.0, p, abs_tol, rel_tol, max_sub)
    gap = (1.0 - v) / q
    return 1.0 - gap, gap, e / q, status


def x_and_gap_batch(ps, abs_tol, rel_tol, max_sub):
    ps = np.asarray(ps, dtype=float)
    xs = np.empty(ps.shape[0])
    gaps = np.empty_like(xs)
    errs = np.empty_like(xs)
    worst = OK
    for i, p in enumerate(ps):
        xs[i], gaps[i], errs[i], status = x_and_gap(float(p), abs_tol, rel_tol, max_sub)
        worst = max(worst, status)
    return xs, gaps, errs, worst
