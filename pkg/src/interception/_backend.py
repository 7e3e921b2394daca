"""Select the kernel backend.

Set ``INTERCEPTION_DISABLE_NUMBA=1`` to force the pure-numpy kernels, e.g. for
debugging inside the interpreter. The numpy path is also used when numba is
not importable.
"""

import os

_DISABLED = os.environ.get("INTERCEPTION_DISABLE_NUMBA", "").strip().lower() in {
    "1",
    "true",
    "yes",
    "on",
}

if _DISABLED:
    USE_NUMBA = False
else:
    try:
        import numba  # noqa: F401

        USE_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False

BACKEND = "numba" if USE_NUMBA else "numpy"
