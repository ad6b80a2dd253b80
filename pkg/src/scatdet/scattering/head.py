"""Generalized Dirichlet series head of phi: g_1, d(1), c_1, c_2 and a(n).

Every family is written as

    phi(s) = pi^(c/2) (Gamma(s-1/2)/Gamma(s))^c * d(1) g_1^(-2s) * (1 + sum_n a(n) u_n^(-2s))

and all frequencies satisfy u_n^2 = t_n for integers t_n, so the series is kept
as exact integer coefficients keyed by t. Coefficients are exact Python ints.
"""
from dataclasses import dataclass, field
from math import isqrt, log, pi, sqrt

import numpy as np

from ..specfun import _kernels
from .family import ScatteringFamily


@dataclass(frozen=True)
class DirichletHead:
    cusps: int
    g1: float
    d1: int
    coefficients: tuple  # ((u_n, a_n), ...) for n = 2..n_max
    freq_squares: tuple = field(default=(), repr=False)  # exact t_n = u_n^2, n = 1..n_max (t_1 = 1)

    @property
    def c1(self):
        return -2.0 * log(self.g1)

    @property
    def c2(self):
        """log|d(1)|; the sign of d(1) is carried separately in ``d1``."""
        return log(abs(self.d1))

    @property
    def sign_d1(self):
        return 1 if self.d1 > 0 else -1

    def d(self):
        """d(n) = d(1) a(n) for n = 1..n_max, with a(1) = 1."""
        return [self.d1] + [self.d1 * a for _, a in self.coefficients]

    def evaluate(self, s):
        """Reassemble phi(s) from the truncated head (Re s > 1)."""
        s = np.asarray(s, dtype=complex)
        lg = _kernels.loggamma(np.ravel(s - 0.5)) - _kernels.loggamma(np.ravel(s))
        lead = np.exp(0.5 * self.cusps * np.log(pi) + self.cusps * lg.reshape(s.shape) + self.c1 * s)
        h = 1.0 + sum(a * np.exp(-2 * s * log(u)) for u, a in self.coefficients if a)
        return self.d1 * lead * h


def totients(n_max):
    """Euler totient for 0..n_max by sieve (index 0 unused)."""
    phi = list(range(n_max + 1))
    for p in range(2, n_max + 1):
        if phi[p] == p:
            for k in range(p, n_max + 1, p):
                phi[k] -= phi[k] // p
    return phi


def dirichlet_convolve(a, b, n_max):
    """Dirichlet convolution of two coefficient lists indexed 1..n_max."""
    out = [0] * (n_max + 1)
    for i in range(1, n_max + 1):
        if a[i]:
            for j in range(1, n_max // i + 1):
                out[i * j] += a[i] * b[j]
    return out


def _allowed_squares(family, count):
    """First ``count`` admissible t = u^2 values in increasing order."""
    if family.kind != "gamma0plus":
        return [m * m for m in range(1, count + 1)]
    out, t = [], 0
    while len(out) < count:
        t += 1
        rest = t
        for p in family.primes:
            while rest % p == 0:
                rest //= p
        if isqrt(rest) ** 2 == rest:
            out.append(t)
    return out


def _local_power_series(p, e, k_max):
    """Coefficients in x = p^(-2s) of ((1 - p^2 x)/(1 - x))^e up to x^k_max."""
    base = [1] + [1 - p * p] * k_max  # (1 - p^2 x) / (1 - x) = 1 + (1 - p^2)(x + x^2 + ...)
    out = [1] + [0] * k_max
    for _ in range(e):
        out = [sum(out[i] * base[k - i] for i in range(k + 1)) for k in range(k_max + 1)]
    return out


def _series_by_t(family, t_max):
    """Exact integer coefficients h(t), t = 1..t_max, of the normalized series (h(1) = 1)."""
    m_max = isqrt(t_max)
    phi = totients(m_max)
    if family.kind == "gamma0":
        power = [0, 1] + [0] * (m_max - 1)
        for _ in range(2**family.r):
            power = dirichlet_convolve(power, phi, m_max)
        e = 2 ** (family.r - 1)
        for p in family.primes:
            k_max = 0
            while p ** (k_max + 1) <= m_max:
                k_max += 1
            local = _local_power_series(p, e, k_max)
            series = [0] * (m_max + 1)
            for k, c in enumerate(local):
                series[p**k] = c
            power = dirichlet_convolve(power, series, m_max)
        base = power
    else:
        base = phi
    h = [0] * (t_max + 1)
    for m in range(1, m_max + 1):
        h[m * m] = base[m]
    if family.kind == "gamma0plus":
        # prod_p (1 + p x_p)/(1 + x_p), x_p = p^(-s): coefficient (p-1)(-1)^(k-1) at p^k
        for p in family.primes:
            local = [0] * (t_max + 1)
            local[1] = 1
            k, pk = 1, p
            while pk <= t_max:
                local[pk] = (p - 1) * (-1) ** (k - 1)
                k, pk = k + 1, pk * p
            h = dirichlet_convolve(h, local, t_max)
    return h


def leading_data(family):
    """(g_1, d(1)) for the family."""
    if family.kind == "modular":
        return 1.0, 1
    if family.kind == "gamma0":
        e = 2 ** (family.r - 1)
        return float(family.level**e), (-1) ** (family.r * e)
    return sqrt(family.level), 1


def dirichlet_head(family: ScatteringFamily, n_max: int) -> DirichletHead:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ts = _allowed_squares(family, n_max)
    h = _series_by_t(family, ts[-1])
    g1, d1 = leading_data(family)
    coeffs = tuple((sqrt(t), h[t]) for t in ts[1:])
    return DirichletHead(family.cusps, g1, d1, coeffs, tuple(ts))
