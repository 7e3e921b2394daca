"""Compiled vs pure-numpy kernels on a batch of curve abscissas x(p).

    python3 benchmarks/bench_kernels.py [--n 2000]

Both backends are imported directly, so the INTERCEPTION_DISABLE_NUMBA flag
does not matter here. The first compiled call is timed separately because it
includes JIT compilation (or loading from the on-disk cache).
"""

import argparse
import time

import numpy as np

from interception.numerics import _kernels_numpy
from interception.planar import MAX_SUBDIVISIONS, X_ABS_TOL, X_REL_TOL


def _timed(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=2000)
    args = parser.parse_args()
    ps = np.geomspace(1e-2, 1e5, args.n)
    tol = (X_ABS_TOL, X_REL_TOL, MAX_SUBDIVISIONS)

    t_np, (xs_np, gaps_np, _, status_np) = _timed(
        _kernels_numpy.x_and_gap_batch, ps, *tol, repeat=1
    )
    print(f"numpy  : {t_np * 1e3:9.1f} ms for {args.n} points (status {status_np})")

    try:
        from interception.numerics import _kernels_numba
    except ImportError:
        print("numba  : not installed")
        return
    t0 = time.perf_counter()
    _kernels_numba.x_and_gap_batch(ps[:2], *tol)
    print(f"numba  : {(time.perf_counter() - t0) * 1e3:9.1f} ms first call (compile or cache load)")
    t_nb, (xs_nb, gaps_nb, _, status_nb) = _timed(_kernels_numba.x_and_gap_batch, ps, *tol)
    print(f"numba  : {t_nb * 1e3:9.1f} ms for {args.n} points (status {status_nb})")
    print(f"speedup: {t_np / t_nb:9.1f}x")
    print(f"max |dx|   between backends: {np.max(np.abs(xs_np - xs_nb)):.3e}")
    print(f"max |dgap| between backends: {np.max(np.abs(gaps_np - gaps_nb)):.3e}")


if __name__ == "__main__":
    main()
