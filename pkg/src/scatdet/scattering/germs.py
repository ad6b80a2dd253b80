"""Laurent germs of phi at real points, built factor by factor."""
from math import ceil, factorial, log, pi, sqrt

import numpy as np

from ..specfun import _kernels
from ..specfun.constants import LOG_PI, STIELTJES
from ..specfun.core import digamma, hurwitz_zeta, log_gamma
from .family import ScatteringFamily
from .germ import DEFAULT_DEPTH, LaurentGerm, cauchy_coeffs, exp_linear_coeffs, series_exp

_PAD = 4
_INT_TOL = 1e-12


def _nearest_int(a):
    n = round(a)
    return n if abs(a - n) < _INT_TOL else None


def linear_germ(a, c, depth):
    """Germ of (s + c) at s = a."""
    return LaurentGerm.from_taylor(a, [a + c, 1.0] + [0.0] * (depth - 2), zero_tol=_INT_TOL)


def gamma_germ(a, depth):
    """Germ of Gamma at a real point a (poles at 0, -1, ... are exact)."""
    if a > 0:
        logs = [log_gamma(a).real, digamma(a).real]
        logs += [(-1) ** k * hurwitz_zeta(k, a).real / k for k in range(2, depth)]
        return LaurentGerm(float(a), 0, tuple(series_exp(logs)))
    n = _nearest_int(a)
    if n is not None:
        # Gamma(z - n) = Gamma(1 + z) / prod_{j=0..n} (z - j), z = s - a
        g = gamma_germ(1.0, depth + 1)
        g = LaurentGerm(float(a), 0, g.coeffs)
        for j in range(-n + 1):
            g = g / linear_germ(a, -a - j, depth + 1)
        return g.truncate(depth)
    shift = ceil(-a) + 1
    g = gamma_germ(a + shift, depth)
    g = LaurentGerm(float(a), 0, g.coeffs)
    for j in range(shift):
        g = g / linear_germ(a, j, depth)
    return g


def zeta_germ(a, depth):
    """Germ of zeta at a: Stieltjes expansion at 1, Cauchy coefficients elsewhere."""
    if abs(a - 1.0) < _INT_TOL:
        coeffs = [1.0] + [(-1) ** n * g / factorial(n) for n, g in enumerate(STIELTJES)]
        return LaurentGerm(1.0, -1, tuple(coeffs[:depth]))
    radius = min(0.5, 0.5 * abs(a - 1.0))
    coeffs = cauchy_coeffs(_kernels.zeta, a, radius, depth + 1)
    n = _nearest_int(a)
    if n is not None and n < 0 and n % 2 == 0:
        return LaurentGerm(float(a), 1, tuple(coeffs[1 : depth + 1]))
    return LaurentGerm(float(a), 0, tuple(coeffs[:depth]))


def exp_germ(a, slope, depth, offset=0.0):
    """Germ of exp(offset + slope * s) at s = a."""
    return LaurentGerm(float(a), 0, tuple(exp_linear_coeffs(np.exp(offset + slope * a), slope, depth)))


def _affine(builder, alpha, beta, a, depth):
    return builder(alpha * a + beta, depth).affine(alpha, a)


def _modular_germ(a, depth):
    g = _affine(gamma_germ, 1.0, -0.5, a, depth)
    g = g / gamma_germ(a, depth)
    g = g * _affine(zeta_germ, 2.0, -1.0, a, depth)
    g = g / _affine(zeta_germ, 2.0, 0.0, a, depth)
    return g * sqrt(pi)


def _one_minus_exp(a, slope, offset, depth):
    """Germ of 1 - exp(offset + slope * s) at a; a zero there is detected exactly."""
    e = exp_linear_coeffs(np.exp(offset + slope * a), slope, depth + 1)
    coeffs = [1.0 - e[0]] + [-c for c in e[1:]]
    if abs(offset + slope * a) < _INT_TOL:
        coeffs[0] = 0.0
    return LaurentGerm.from_taylor(a, coeffs, zero_tol=0.0)


def xi_germ(a, depth):
    """Germ of xi(w) = (1/2) w (w-1) pi^(-w/2) Gamma(w/2) zeta(w) at w = a."""
    g = linear_germ(a, 0.0, depth) * linear_germ(a, -1.0, depth)
    g = g * exp_germ(a, -0.5 * LOG_PI, depth)
    g = g * _affine(gamma_germ, 0.5, 0.0, a, depth)
    g = g * zeta_germ(a, depth)
    return g * 0.5


def germ_at(family: ScatteringFamily, a: float, depth: int = DEFAULT_DEPTH) -> LaurentGerm:
    """Laurent germ of phi at the real point a, with ``depth`` coefficients."""
    if depth < 3:
        raise ValueError("depth must be >= 3")
    a = float(a)
    work = depth + _PAD
    if family.kind == "modular":
        g = _modular_germ(a, work)
    elif family.kind == "gamma0":
        g = _modular_germ(a, work) ** (2**family.r)
        e = 2 ** (family.r - 1)
        for p in family.primes:
            lp = log(p)
            local = _one_minus_exp(a, -2 * lp, 2 * lp, work) / _one_minus_exp(a, 2 * lp, 0.0, work)
            g = g * local**e
    else:
        g = linear_germ(a, 0.0, work) / linear_germ(a, -1.0, work)
        g = g * _affine(xi_germ, 2.0, -1.0, a, work) / _affine(xi_germ, 2.0, 0.0, a, work)
        if family.primes:
            g = g * exp_germ(a, -log(family.level), work)
        for p in family.primes:
            lp = log(p)
            num = exp_germ(a, lp, work) + p
            den = exp_germ(a, lp, work) + 1.0
            g = g * num / den
    return g.truncate(depth)
