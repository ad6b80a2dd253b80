"""Per-element numba kernels for log-Gamma, digamma and the zeta functions.

Poles are not detected here; callers screen arguments first. All array
entry points take contiguous complex128 arrays.
"""
import cmath
import math

import numpy as np
from numba import njit

from .constants import DIGAMMA_COEFFS, EM_COEFFS, LOG_2PI, LOG_PI, STIRLING_COEFFS

_STIRLING = STIRLING_COEFFS.copy()
_DIGAMMA = DIGAMMA_COEFFS.copy()
_EM = EM_COEFFS.copy()
_HALF_LOG_2PI = 0.5 * LOG_2PI
_LOG_PI = LOG_PI
_LOG2 = math.log(2.0)


@njit(cache=True)
def loggamma_scalar(z):
    acc = 0j
    while z.real < 10.0:
        acc += cmath.log(z)
        z += 1.0
    inv = 1.0 / z
    inv2 = inv * inv
    tail = 0j
    p = inv
    for j in range(_STIRLING.shape[0]):
        tail += _STIRLING[j] * p
        p *= inv2
    return _HALF_LOG_2PI + (z - 0.5) * cmath.log(z) - z + tail - acc


@njit(cache=True)
def digamma_scalar(z):
    acc = 0j
    while z.real < 10.0:
        acc += 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    tail = 0j
    p = inv2
    for k in range(_DIGAMMA.shape[0]):
        tail += _DIGAMMA[k] * p
        p *= inv2
    return cmath.log(z) - 0.5 / z - tail - acc


@njit(cache=True)
def hurwitz_scalar(s, a):
    n_terms = 12 + int(abs(s))
    total = 0j
    for k in range(n_terms):
        total += cmath.exp(-s * cmath.log(k + a))
    x = n_terms + a
    logx = cmath.log(x)
    xs = cmath.exp(-s * logx)
    total += x * xs / (s - 1.0) + 0.5 * xs
    fact = s * xs / x
    inv_x2 = 1.0 / (x * x)
    for j in range(_EM.shape[0]):
        total += _EM[j] * fact
        fact *= (s + 2 * j + 1) * (s + 2 * j + 2) * inv_x2
    return total


@njit(cache=True)
def zeta_scalar(s):
    if s.real >= 0.5 or abs(s) < 0.1:
        return hurwitz_scalar(s, 1.0 + 0j)
    t = 1.0 - s
    lg = s * _LOG2 + (s - 1.0) * _LOG_PI + loggamma_scalar(t)
    return cmath.exp(lg) * cmath.sin(0.5 * math.pi * s) * hurwitz_scalar(t, 1.0 + 0j)


@njit(cache=True)
def loggamma(z):
    out = np.empty_like(z)
    for i in range(z.shape[0]):
        out[i] = loggamma_scalar(z[i])
    return out


@njit(cache=True)
def digamma(z):
    out = np.empty_like(z)
    for i in range(z.shape[0]):
        out[i] = digamma_scalar(z[i])
    return out


@njit(cache=True)
def zeta(s):
    out = np.empty_like(s)
    for i in range(s.shape[0]):
        out[i] = zeta_scalar(s[i])
    return out


@njit(cache=True)
def hurwitz(s, a):
    out = np.empty_like(s)
    for i in range(s.shape[0]):
        out[i] = hurwitz_scalar(s[i], a[i])
    return out
