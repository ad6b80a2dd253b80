"""Independent high-precision reference implementations used across the suite."""
import mpmath

mpmath.mp.dps = 30


def mp_modular(s):
    s = mpmath.mpc(s)
    return mpmath.sqrt(mpmath.pi) * mpmath.gamma(s - 0.5) / mpmath.gamma(s) * mpmath.zeta(2 * s - 1) / mpmath.zeta(2 * s)


def mp_xi(w):
    return 0.5 * w * (w - 1) * mpmath.pi ** (-w / 2) * mpmath.gamma(w / 2) * mpmath.zeta(w)


def mp_phi(kind, primes, s):
    s = mpmath.mpc(s)
    if kind == "modular":
        return complex(mp_modular(s))
    if kind == "gamma0":
        r = len(primes)
        out = mp_modular(s) ** (2**r)
        for p in primes:
            out *= ((1 - mpmath.mpf(p) ** (2 - 2 * s)) / (1 - mpmath.mpf(p) ** (2 * s))) ** (2 ** (r - 1))
        return complex(out)
    n = 1
    for p in primes:
        n *= p
    out = s / (s - 1) * mp_xi(2 * s - 1) / mp_xi(2 * s) * mpmath.mpf(n) ** (-s)
    for p in primes:
        out *= (mpmath.mpf(p) ** s + p) / (mpmath.mpf(p) ** s + 1)
    return complex(out)


def gcd_totient(n):
    from math import gcd

    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
