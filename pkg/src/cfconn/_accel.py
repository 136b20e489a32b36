"""JIT switch for the hot kernels.

Setting ``CFCONN_DISABLE_NUMBA=1`` (or running without numba installed) makes
``njit`` an identity decorator, so the kernels run as plain Python over numpy
arrays. Both paths execute the same source and must give identical results.
"""

import os

_flag = os.environ.get("CFCONN_DISABLE_NUMBA", "").strip().lower()
DISABLED_BY_ENV = _flag not in ("", "0", "false", "no")

try:
    if DISABLED_BY_ENV:
        raise ImportError
    import numba

    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False


def njit(func):
    if HAVE_NUMBA:
        return numba.njit(cache=True, nogil=True)(func)
    func.py_func = func
    return func


def backend():
    return "numba" if HAVE_NUMBA else "python"
