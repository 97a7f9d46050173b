"""JIT backend selection.

Kernels are written once in nopython-compatible Python over numpy arrays.
When numba is importable they are compiled with ``@njit``; setting
``DOMEDGE_DISABLE_NUMBA=1`` (or running without numba installed) keeps the
plain Python/numpy versions instead.
"""

import os

_DISABLED = os.environ.get("DOMEDGE_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError("numba disabled by DOMEDGE_DISABLE_NUMBA")
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:
    NUMBA_ENABLED = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def decorator(func):
            return func

        return decorator


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "python"


def python_impl(func):
    """Return the uncompiled Python body of a (possibly jitted) kernel."""
    return getattr(func, "py_func", func)
