"""Compiled kernels. Same algorithms as ``_kernels_numpy``, written as scalar loops."""

import numpy as np
from numba import njit

from ._gk21 import EPS, TINY, WG, WGK, XGK

OK, BUDGET_EXHAUSTED, ROUNDOFF = 0, 1, 2


@njit(cache=True)
def integrand(code, t):
    if code == 0:
        # x(p) numerator: 1 / (2 (t^2+1)^(1/4))
        return 0.5 / (t * t + 1.0) ** 0.25
    if code == 1:
        # (sqrt(t^2+1) - t) / (2 (t^2+1)^(3/4)), cancellation-free form
        s = np.sqrt(t * t + 1.0)
        return 0.5 / ((t * t + 1.0) ** 0.75 * (s + t))
    if code == 2:
        # first alternative integrand after t = 1 + u^2
        return np.sqrt(1.0 + t * t) / np.sqrt(2.0 + t * t)
    if code == 3:
        # second alternative integrand after t = 1 + u^2
        return 1.0 / ((1.0 + t * t) ** 1.5 * np.sqrt(2.0 + t * t))
    return np.nan


@njit(cache=True)
def gk21(code, a, b):
    centr = 0.5 * (a + b)
    hlgth = 0.5 * (b - a)
    dhlgth = abs(hlgth)

    fc = integrand(code, centr)
    resg = 0.0
    resk = WGK[10] * fc
    resabs = abs(resk)
    fv1 = np.empty(10)
    fv2 = np.empty(10)
    for j in range(5):
        jtw = 2 * j + 1
        absc = hlgth * XGK[jtw]
        f1 = integrand(code, centr - absc)
        f2 = integrand(code, centr + absc)
        fv1[jtw] = f1
        fv2[jtw] = f2
        resg += WG[j] * (f1 + f2)
        resk += WGK[jtw] * (f1 + f2)
        resabs += WGK[jtw] * (abs(f1) + abs(f2))
    for j in range(5):
        jtwm1 = 2 * j
        absc = hlgth * XGK[jtwm1]
        f1 = integrand(code, centr - absc)
        f2 = integrand(code, centr + absc)
        fv1[jtwm1] = f1
        fv2[jtwm1] = f2
        resk += WGK[jtwm1] * (f1 + f2)
        resabs += WGK[jtwm1] * (abs(f1) + abs(f2))

    reskh = resk * 0.5
    resasc = WGK[10] * abs(fc - reskh)
    for j in range(10):
        resasc += WGK[j] * (abs(fv1[j] - reskh) + abs(fv2[j] - reskh))

    result = resk * hlgth
    resabs *= dhlgth
    resasc *= dhlgth
    abserr = abs((resk - resg) * hlgth)
    if resasc != 0.0 and abserr != 0.0:
        abserr = resasc * min(1.0, (200.0 * abserr / resasc) ** 1.5)
    floor = 0.0
    if resabs > TINY / (50.0 * EPS):
        floor = 50.0 * EPS * resabs
        abserr = max(floor, abserr)
    return result, abserr, floor


@njit(cache=True)
def _sift_up(heap, keys, pos):
    item = heap[pos]
    k = keys[item]
    while pos > 0:
        parent = (pos - 1) >> 1
        if keys[heap[parent]] >= k:
            break
        heap[pos] = heap[parent]
        pos = parent
    heap[pos] = item


@njit(cache=True)
def _sift_down(heap, keys, pos, n):
    item = heap[pos]
    k = keys[item]
    while True:
        child = 2 * pos + 1
        if child >= n:
            break
        if child + 1 < n and keys[heap[child + 1]] > keys[heap[child]]:
            child += 1
        if keys[heap[child]] <= k:
            break
        heap[pos] = heap[child]
        pos = child
    heap[pos] = item


@njit(cache=True)
def _grow(arr, cap):
    out = np.empty(cap, dtype=arr.dtype)
    out[: arr.shape[0]] = arr
    return out


@njit(cache=True)
def gk_adaptive(code, a, b, abs_tol, rel_tol, max_sub):
    """Globally adaptive bisection on a coded integrand.

    Stops once the summed error is below ``max(abs_tol, rel_tol*|value|)``.
    Returns ``(value, error, n_intervals, status)``.
    """
    cap = 64
    lo = np.empty(cap)
    hi = np.empty(cap)
    val = np.empty(cap)
    err = np.empty(cap)
    flo = np.empty(cap)
    heap = np.empty(cap, dtype=np.int64)

    v, e, fl = gk21(code, a, b)
    lo[0], hi[0], val[0], err[0], flo[0] = a, b, v, e, fl
    heap[0] = 0
    n = 1
    total_v = v
    total_e = e
    status = OK

    while total_e > max(abs_tol, rel_tol * abs(total_v)):
        if n >= max_sub:
            status = BUDGET_EXHAUSTED
            break
        k = heap[0]
        left, right = lo[k], hi[k]
        mid = 0.5 * (left + right)
        # the worst interval is already at its rounding floor, or too narrow to split
        if err[k] <= flo[k] * (1.0 + 1e-9):
            status = ROUNDOFF
            break
        if not (left < mid < right) or (right - left) < 4.0 * EPS * max(abs(left), abs(right)):
            status = ROUNDOFF
            break
        v1, e1, f1 = gk21(code, left, mid)
        v2, e2, f2 = gk21(code, mid, right)
        if n == cap:
            cap *= 2
            lo = _grow(lo, cap)
            hi = _grow(hi, cap)
            val = _grow(val, cap)
            err = _grow(err, cap)
            flo = _grow(flo, cap)
            heap = _grow(heap, cap)
        total_v += v1 + v2 - val[k]
        total_e += e1 + e2 - err[k]
        hi[k], val[k], err[k], flo[k] = mid, v1, e1, f1
        lo[n], hi[n], val[n], err[n], flo[n] = mid, right, v2, e2, f2
        _sift_down(heap, err, 0, n)
        heap[n] = n
        _sift_up(heap, err, n)
        n += 1
        if total_e <= max(abs_tol, rel_tol * abs(total_v)):
            # guard against drift in the running sums
            total_e = 0.0
            total_v = 0.0
            for i in range(n):
                total_e += err[i]
                total_v += val[i]

    value = 0.0
    total_e = 0.0
    for i in range(n):
        value += val[i]
        total_e += err[i]
    return value, total_e, n, status


@njit(cache=True)
def x_and_gap(p, abs_tol, rel_tol, max_sub):
    """Abscissa x(p) of the planar interception curve and 1 - x(p).

    For p > 1 the gap is built from the complementary integral, which keeps
    1 - x accurate when x is close to 1.
    """
    q = (p * p + 1.0) ** 0.25
    if p <= 1.0:
        v, e, n, status = gk_adaptive(0, 0.0, p, abs_tol, rel_tol, max_sub)
        x = v / q
        return x, 1.0 - x, e / q, status
    v, e, n, status = gk_adaptive(1, 0.0, p, abs_tol, rel_tol, max_sub)
    gap = (1.0 - v) / q
    return 1.0 - gap, gap, e / q, status


@njit(cache=True)
def x_and_gap_batch(ps, abs_tol, rel_tol, max_sub):
    m = ps.shape[0]
    xs = np.empty(m)
    gaps = np.empty(m)
    errs = np.empty(m)
    worst = OK
    for i in range(m):
        x, g, e, status = x_and_gap(ps[i], abs_tol, rel_tol, max_sub)
        xs[i] = x
        gaps[i] = g
        errs[i] = e
        worst = max(worst, status)
    return xs, gaps, errs, worst
