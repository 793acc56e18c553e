"""Numba switch.

Set ``SELSET_DISABLE_NUMBA=1`` to run every kernel through the pure-numpy /
pure-Python fallback path. The flag is read once, at import time.
"""

import os

_FLAG = os.environ.get("SELSET_DISABLE_NUMBA", "").strip().lower()
DISABLED_BY_ENV = _FLAG in ("1", "true", "yes", "on")

try:
    if DISABLED_BY_ENV:
        raise ImportError("numba disabled by SELSET_DISABLE_NUMBA")
    from numba import njit as _njit

    NUMBA_ENABLED = True
except ImportError:
    _njit = None
    NUMBA_ENABLED = False


def jit(func):
    """Compile ``func`` with numba when enabled, otherwise return it unchanged.

    The original Python function stays reachable as ``func.py_func`` in both
    cases so benchmarks can time the interpreted loop.
    """
    if NUMBA_ENABLED:
        return _njit(cache=True, nogil=True)(func)
    func.py_func = func
    return func
