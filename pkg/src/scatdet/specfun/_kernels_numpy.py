"""Vectorised numpy kernels; same algorithms as the numba path."""
import numpy as np

from .constants import DIGAMMA_COEFFS, EM_COEFFS, LOG_2PI, LOG_PI, STIRLING_COEFFS

_LOG2 = np.log(2.0)


def loggamma(z):
    z = np.array(z, dtype=complex)
    acc = np.zeros_like(z)
    shift = np.maximum(np.ceil(10.0 - z.real), 0.0)
    for k in range(int(shift.max(initial=0.0))):
        m = shift > k
        acc[m] += np.log(z[m] + k)
    z = z + shift
    inv = 1.0 / z
    inv2 = inv * inv
    tail = np.zeros_like(z)
    p = inv
    for c in STIRLING_COEFFS:
        tail += c * p
        p = p * inv2
    return 0.5 * LOG_2PI + (z - 0.5) * np.log(z) - z + tail - acc


def digamma(z):
    z = np.array(z, dtype=complex)
    acc = np.zeros_like(z)
    shift = np.maximum(np.ceil(10.0 - z.real), 0.0)
    for k in range(int(shift.max(initial=0.0))):
        m = shift > k
        acc[m] += 1.0 / (z[m] + k)
    z = z + shift
    inv2 = 1.0 / (z * z)
    tail = np.zeros_like(z)
    p = inv2
    for c in DIGAMMA_COEFFS:
        tail += c * p
        p = p * inv2
    return np.log(z) - 0.5 / z - tail - acc


def hurwitz(s, a):
    s = np.asarray(s, dtype=complex)
    a = np.asarray(a, dtype=complex)
    if s.size == 0:
        return s.copy()
    n_terms = 12 + int(np.abs(s).max())
    total = np.zeros(np.broadcast(s, a).shape, dtype=complex)
    for k in range(n_terms):
        total += np.exp(-s * np.log(k + a))
    x = n_terms + a
    xs = np.exp(-s * np.log(x))
    total += x * xs / (s - 1.0) + 0.5 * xs
    fact = s * xs / x
    inv_x2 = 1.0 / (x * x)
    for j, c in enumerate(EM_COEFFS):
        total += c * fact
        fact = fact * (s + 2 * j + 1) * (s + 2 * j + 2) * inv_x2
    return total


def zeta(s):
    s = np.array(s, dtype=complex)
    out = np.empty_like(s)
    direct = (s.real >= 0.5) | (np.abs(s) < 0.1)
    out[direct] = hurwitz(s[direct], 1.0)
    r = s[~direct]
    if r.size:
        t = 1.0 - r
        lg = r * _LOG2 + (r - 1.0) * LOG_PI + loggamma(t)
        out[~direct] = np.exp(lg) * np.sin(0.5 * np.pi * r) * hurwitz(t, 1.0)
    return out
