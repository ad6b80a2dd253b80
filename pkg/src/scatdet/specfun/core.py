"""Public complex special functions.

Every function accepts a scalar or an array; scalars come back as Python
``complex`` (or ``float`` where the result is real by definition).
"""
import numpy as np

from ..errors import DomainError, PoleError, ZeroError
from . import _kernels
from .constants import (
    BARNES_COEFFS,
    BERNOULLI,
    EM_COEFFS,
    EULER_GAMMA,
    LOG_2PI,
    STIELTJES,
    ZETA_PRIME_0,
    ZETA_PRIME_M1,
)

POLE_TOL = 1e-14
BARNES_SHIFT = 15.0
_FD_STEP = 1e-3
_STIELTJES_RADIUS = 0.25


def _prep(x):
    arr = np.asarray(x, dtype=complex)
    return arr.ravel(), arr.shape, arr.ndim == 0


def _finish(flat, shape, scalar):
    if scalar:
        return complex(flat[0])
    return flat.reshape(shape)


def _near_nonpositive_int(z, tol=POLE_TOL):
    """Mask of entries within ``tol`` of {0, -1, -2, ...}."""
    n = np.round(z.real)
    return (n <= 0) & (np.abs(z - n) < tol)


def log_gamma(s):
    """Log-gamma via upward recursion to Re >= 10 and the Stirling sum (m = 10).

    The branch is the one produced by summing principal logarithms, i.e. the
    standard analytic continuation of log Gamma cut along the negative axis.
    """
    z, shape, scalar = _prep(s)
    if np.any(_near_nonpositive_int(z)):
        raise PoleError("log_gamma: argument at a pole of Gamma")
    return _finish(_kernels.loggamma(z), shape, scalar)


def stirling_sum(s, m=10):
    """Truncated Stirling series with ``m - 1`` Bernoulli terms, no recursion."""
    s = complex(s)
    val = 0.5 * LOG_2PI + (s - 0.5) * np.log(s) - s
    for j in range(1, m):
        val += float(BERNOULLI[j] / ((2 * j - 1) * 2 * j)) / s ** (2 * j - 1)
    return val


def digamma(s):
    z, shape, scalar = _prep(s)
    if np.any(_near_nonpositive_int(z)):
        raise PoleError("digamma: argument at a pole of Gamma")
    return _finish(_kernels.digamma(z), shape, scalar)


def riemann_zeta(s):
    """Euler-Maclaurin zeta, reflected for Re s < 1/2."""
    z, shape, scalar = _prep(s)
    if np.any(np.abs(z - 1.0) < POLE_TOL):
        raise PoleError("riemann_zeta: pole at s = 1")
    return _finish(_kernels.zeta(z), shape, scalar)


def _stieltjes_eta(w):
    """(s-1) zeta(s) and its derivative as polynomials in w = s - 1."""
    eta = np.ones_like(w)
    deta = np.zeros_like(w)
    fact = 1.0
    for n, g in enumerate(STIELTJES):
        if n:
            fact *= n
        c = (-1) ** n * g / fact
        eta = eta + c * w ** (n + 1)
        deta = deta + (n + 1) * c * w**n
    return eta, deta


def zeta_derivative(s):
    """zeta'(s): fourth-order central differences, Stieltjes germ near s = 1."""
    z, shape, scalar = _prep(s)
    if np.any(np.abs(z - 1.0) < POLE_TOL):
        raise PoleError("zeta_derivative: pole at s = 1")
    out = np.empty_like(z)
    near = np.abs(z - 1.0) < _STIELTJES_RADIUS
    if np.any(near):
        w = z[near] - 1.0
        eta, deta = _stieltjes_eta(w)
        out[near] = deta / w - eta / (w * w)
    far = z[~near]
    if far.size:
        h = _FD_STEP
        pts = np.concatenate([far - 2 * h, far - h, far + h, far + 2 * h])
        v = _kernels.zeta(pts).reshape(4, -1)
        out[~near] = (v[0] - 8 * v[1] + 8 * v[2] - v[3]) / (12 * h)
    return _finish(out, shape, scalar)


def zeta_logderiv(s):
    """zeta'/zeta with the pole at s = 1 handled analytically."""
    z, shape, scalar = _prep(s)
    if np.any(np.abs(z - 1.0) < POLE_TOL):
        raise PoleError("zeta_logderiv: pole at s = 1")
    out = np.empty_like(z)
    near = np.abs(z - 1.0) < _STIELTJES_RADIUS
    if np.any(near):
        w = z[near] - 1.0
        eta, deta = _stieltjes_eta(w)
        out[near] = deta / eta - 1.0 / w
    far = z[~near]
    if far.size:
        out[~near] = zeta_derivative(far) / _kernels.zeta(far)
    return _finish(out, shape, scalar)


def hurwitz_zeta(s, a):
    """sum_{k>=0} (k + a)^(-s), continued by Euler-Maclaurin; ``a`` real > 0.

    Accurate to about 1e-12 for Re s >= -1. Further left the partial sums grow
    like N^(1 - Re s) and cancel, so relative accuracy degrades.
    """
    a_arr = np.asarray(a, dtype=float)
    if np.any(a_arr <= 0):
        raise DomainError("hurwitz_zeta: need a > 0")
    z, shape, scalar = _prep(s)
    if np.any(np.abs(z - 1.0) < POLE_TOL):
        raise PoleError("hurwitz_zeta: pole at s = 1")
    a_flat = np.broadcast_to(a_arr, shape).ravel() if a_arr.ndim else np.full(z.shape, float(a_arr))
    return _finish(_kernels.hurwitz(z, a_flat), shape, scalar)


def _hurwitz_central_difference(a, h, n_terms=12):
    """(zeta_H(h, a) - zeta_H(-h, a)) / (2h) with the odd parts formed analytically.

    Same Euler-Maclaurin representation as the kernels, but each difference
    x^(-h) - x^(h) is written as -2 sinh(h log x) so nothing cancels.
    """
    logs = np.log(np.arange(n_terms) + a)
    diff = -2.0 * np.sinh(h * logs).sum()
    x = n_terms + a
    lx = np.log(x)
    diff += x * (2 * h * np.cosh(h * lx) - 2 * np.sinh(h * lx)) / (h * h - 1.0)
    diff += -np.sinh(h * lx)
    for sign in (1.0, -1.0):
        s = sign * h
        fact = s * x ** (-s) / x
        tail = 0.0
        for j, c in enumerate(EM_COEFFS):
            tail += c * fact
            fact *= (s + 2 * j + 1) * (s + 2 * j + 2) / (x * x)
        diff += sign * tail
    return diff / (2 * h)


def hurwitz_zeta_ds0(a, h=1e-5):
    """d/ds zeta_H(s, a) at s = 0: central differences, one Richardson step.

    By Lerch's formula this equals log(Gamma(a) / sqrt(2 pi)). Complex ``a``
    off (-oo, 0] is accepted (principal powers); the result is then complex.
    """
    a = complex(a)
    if a.imag == 0 and a.real <= 0:
        raise DomainError("hurwitz_zeta_ds0: need a outside (-oo, 0]")
    if a.imag == 0:
        a = a.real
    d_h = _hurwitz_central_difference(a, h)
    d_h2 = _hurwitz_central_difference(a, h / 2)
    out = (4 * d_h2 - d_h) / 3
    return complex(out) if isinstance(a, complex) else float(out)


def _barnes_asymptotic(w):
    logw = np.log(w)
    val = 0.5 * w * w * (logw - 1.5) - logw / 12.0 - w * ZETA_PRIME_0 + ZETA_PRIME_M1
    inv2 = 1.0 / (w * w)
    p = inv2
    for c in BARNES_COEFFS:
        val = val + c * p
        p = p * inv2
    return val


def log_barnes_g(s):
    """log G(s + 1).

    Asymptotic expansion with six correction terms once Re s >= 15, otherwise
    log G(s+1) = log G(s+n+1) - sum_{k=1..n} log Gamma(s+k).
    """
    z, shape, scalar = _prep(s)
    n = np.round(z.real)
    if np.any((n <= -1) & (np.abs(z - n) < POLE_TOL)):
        raise ZeroError("log_barnes_g: G(s+1) vanishes at s = -1, -2, ...")
    shift = np.maximum(np.ceil(BARNES_SHIFT - z.real), 0.0)
    acc = np.zeros_like(z)
    for k in range(1, int(shift.max(initial=0.0)) + 1):
        m = shift >= k
        acc[m] += _kernels.loggamma(z[m] + k)
    return _finish(_barnes_asymptotic(z + shift) - acc, shape, scalar)


def barnes_asymptotic(s):
    """The bare asymptotic branch of log G(s+1) (no recursion)."""
    z, shape, scalar = _prep(s)
    return _finish(_barnes_asymptotic(z), shape, scalar)


def barnes_g_logderiv(s):
    """d/ds log G(s+1) = s psi(s+1) - s + (log 2pi - 1)/2."""
    z, shape, scalar = _prep(s)
    if np.any(_near_nonpositive_int(z + 1.0)):
        raise PoleError("barnes_g_logderiv: zero of G(s+1)")
    out = z * _kernels.digamma(z + 1.0) - z + 0.5 * (LOG_2PI - 1.0)
    return _finish(out, shape, scalar)


def gamma(s):
    """exp(log_gamma(s)), real-typed for real input."""
    val = np.exp(log_gamma(s))
    if np.isrealobj(s) or (np.ndim(s) == 0 and np.imag(s) == 0):
        return np.real(val) if np.ndim(val) else float(np.real(val))
    return val


__all__ = [
    "EULER_GAMMA",
    "log_gamma",
    "stirling_sum",
    "digamma",
    "riemann_zeta",
    "zeta_derivative",
    "zeta_logderiv",
    "hurwitz_zeta",
    "hurwitz_zeta_ds0",
    "log_barnes_g",
    "barnes_asymptotic",
    "barnes_g_logderiv",
    "gamma",
]
