"""Kernel backend selection.

Set ``SCATDET_DISABLE_NUMBA=1`` to force the pure-numpy kernels.
"""
import os

ENV_FLAG = "SCATDET_DISABLE_NUMBA"


def _numba_requested():
    return os.environ.get(ENV_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _numba_requested()
BACKEND = "numba" if USE_NUMBA else "numpy"
