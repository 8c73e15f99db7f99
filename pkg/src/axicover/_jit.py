"""Numba switch.

Kernels are written once as plain loops over numpy arrays.  When numba is
importable and ``AXICOVER_DISABLE_NUMBA`` is unset (or ``0``), they are compiled
with ``njit``; otherwise the decorator is a no-op and the same code runs as
ordinary Python.
"""

import os

_flag = os.environ.get("AXICOVER_DISABLE_NUMBA", "").strip().lower()
_disabled = _flag not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError
    from numba import njit as _numba_njit

    NUMBA_ENABLED = True
except ImportError:
    _numba_njit = None
    NUMBA_ENABLED = False


def njit(*args, **kwargs):
    """``numba.njit`` when enabled, identity otherwise.

    Works both bare (``@njit``) and with options (``@njit(cache=True)``).
    """
    if NUMBA_ENABLED:
        return _numba_njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]

    def wrapper(func):
        return func

    return wrapper


BACKEND = "numba" if NUMBA_ENABLED else "python"
