"""Backend selection for the hot kernels.

``G6CENSUS_BACKEND=numpy`` forces the vectorised numpy code paths; the
default is numba when it imports.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

BACKEND = os.environ.get("G6CENSUS_BACKEND", "numba").strip().lower()
if BACKEND not in ("numba", "numpy"):
    raise ValueError(f"G6CENSUS_BACKEND must be 'numba' or 'numpy', not {BACKEND!r}")
if numba is None:
    BACKEND = "numpy"

USE_NUMBA = BACKEND == "numba"


def njit(fn):
    """Compile with numba when available.

    Both code paths stay importable so the benchmark can compare them; the
    flag only decides which one the public wrappers call.
    """
    if numba is not None:
        return numba.njit(cache=True)(fn)
    return fn


def pick(numba_impl, numpy_impl):
    return numba_impl if USE_NUMBA else numpy_impl
