"""Backend selection for the hot kernels.

Numba is used when it imports and ``SPIRALVORTEX_DISABLE_NUMBA`` is unset or
falsy. Otherwise the pure-numpy kernels are dispatched. The flag is read once
at import time.
"""
from __future__ import annotations

import os

_FALSY = {"", "0", "false", "no", "off"}

DISABLE_NUMBA = os.environ.get("SPIRALVORTEX_DISABLE_NUMBA", "").strip().lower() not in _FALSY

try:
    import numba as _numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and not DISABLE_NUMBA


def njit(func):
    """``numba.njit(cache=True)`` when numba is importable, else identity."""
    if not HAS_NUMBA:
        return func
    return _numba.njit(cache=True)(func)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
