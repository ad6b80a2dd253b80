"""Dispatch to the numba or numpy kernel set (see ``scatdet._backend``)."""
import numpy as np

from .. import _backend
from . import _kernels_numpy as numpy_backend

if _backend.USE_NUMBA:
    from . import _kernels_numba as numba_backend

    def loggamma(z):
        return numba_backend.loggamma(np.ascontiguousarray(z, dtype=complex))

    def digamma(z):
        return numba_backend.digamma(np.ascontiguousarray(z, dtype=complex))

    def zeta(s):
        return numba_backend.zeta(np.ascontiguousarray(s, dtype=complex))

    def hurwitz(s, a):
        s, a = np.broadcast_arrays(np.asarray(s, dtype=complex), np.asarray(a, dtype=complex))
        return numba_backend.hurwitz(np.ascontiguousarray(s), np.ascontiguousarray(a))

else:
    numba_backend = None
    loggamma = numpy_backend.loggamma
    digamma = numpy_backend.digamma
    zeta = numpy_backend.zeta
    hurwitz = numpy_backend.hurwitz


def warmup():
    """Trigger JIT compilation so later timings exclude it."""
    z = np.array([2.5 + 0.5j, -1.5 + 0.2j])
    loggamma(z)
    digamma(z)
    zeta(z)
    hurwitz(z, np.array([1.0, 2.0]))
