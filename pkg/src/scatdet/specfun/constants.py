"""Exact Bernoulli numbers and the float tables derived from them."""
from fractions import Fraction
from math import factorial, log, pi

import numpy as np

EULER_GAMMA = 0.57721566490153286061
LOG_2PI = log(2.0 * pi)
LOG_PI = log(pi)
# zeta'(0) = -log(2 pi)/2; zeta'(-1) is stored, not computed.
ZETA_PRIME_0 = -0.5 * LOG_2PI
ZETA_PRIME_M1 = -0.16542114370045092921

# Stieltjes constants gamma_0..gamma_10:
# zeta(s) = 1/(s-1) + sum_n (-1)^n gamma_n / n! (s-1)^n
STIELTJES = (
    0.57721566490153286061,
    -0.072815845483676724861,
    -0.0096903631928723184845,
    0.0020538344203033458662,
    0.0023253700654673000075,
    0.00079332381730106270175,
    -0.00023876934543019960987,
    -0.00052728956705775104607,
    -0.00035212335380303950960,
    -0.000034394774418088048178,
    0.00020533281490906479468,
)


def _bernoulli_table(n_max):
    """B_0..B_n_max as Fractions via Akiyama-Tanigawa (gives B_1 = +1/2; only even indices are used)."""
    out = []
    a = [Fraction(0)] * (n_max + 1)
    for m in range(n_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


_B = _bernoulli_table(40)
# BERNOULLI[k] = B_{2k}, k = 0..20 (index 0 is B_0 = 1)
BERNOULLI = tuple(_B[2 * k] for k in range(21))


def bernoulli(n):
    """Exact B_n for even n <= 40 (and B_1 = -1/2, odd n > 1 give 0)."""
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    if n > 40:
        raise ValueError("table holds B_n for n <= 40")
    return BERNOULLI[n // 2]


# log Gamma Stirling terms B_2j / ((2j-1) 2j), j = 1..9  (m = 10)
STIRLING_M = 10
STIRLING_COEFFS = np.array(
    [float(BERNOULLI[j] / ((2 * j - 1) * 2 * j)) for j in range(1, STIRLING_M)]
)
# digamma asymptotic terms B_2k / (2k), k = 1..10
DIGAMMA_COEFFS = np.array([float(BERNOULLI[k] / (2 * k)) for k in range(1, 11)])
# Euler-Maclaurin terms B_2j / (2j)!, j = 1..15
EM_COEFFS = np.array([float(BERNOULLI[j] / factorial(2 * j)) for j in range(1, 16)])
# Barnes G asymptotic terms B_{2k+2} / (4k(k+1)), k = 1..6
BARNES_COEFFS = np.array(
    [float(BERNOULLI[k + 1] / (4 * k * (k + 1))) for k in range(1, 7)]
)
