"""Hot kernels, resolved once at import to the numba or numpy implementation."""

from .._backend import BACKEND, USE_NUMBA

if USE_NUMBA:
    from ._kernels_numba import gk_adaptive, x_and_gap, x_and_gap_batch
else:
    from ._kernels_numpy import gk_adaptive, x_and_gap, x_and_gap_batch

# integrand codes understood by gk_adaptive
I_CODE, J_CODE, ALT1_CODE, ALT2_CODE = 0, 1, 2, 3

__all__ = [
    "ALT1_CODE",
    "ALT2_CODE",
    "BACKEND",
    "I_CODE",
    "J_CODE",
    "gk_adaptive",
    "x_and_gap",
    "x_and_gap_batch",
]
