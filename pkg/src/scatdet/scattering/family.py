"""The three explicit scattering determinants and their direct evaluation."""
import json
from dataclasses import dataclass
from math import log, pi, prod, sqrt

import numpy as np

from ..errors import DomainError, SingularityError
from ..specfun import _kernels
from ..specfun.constants import LOG_PI
from ..specfun.core import zeta_logderiv

SINGULAR_TOL = 1e-10
KINDS = ("modular", "gamma0", "gamma0plus")


def _is_prime(p):
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class ScatteringFamily:
    """Which explicit phi(s): the modular group, Gamma_0(N) or Gamma_0(N)^+ for squarefree N."""

    kind: str
    primes: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown family {self.kind!r}; expected one of {KINDS}")
        primes = tuple(int(p) for p in self.primes)
        if len(set(primes)) != len(primes):
            raise DomainError(f"primes must be distinct: {primes}")
        bad = [p for p in primes if not _is_prime(p)]
        if bad:
            raise DomainError(f"not prime: {bad}")
        if self.kind == "modular" and primes:
            raise DomainError("the modular family takes no primes")
        if self.kind == "gamma0" and not primes:
            raise DomainError("gamma0 needs at least one prime")
        object.__setattr__(self, "primes", tuple(sorted(primes)))

    @classmethod
    def modular(cls):
        return cls("modular")

    @classmethod
    def gamma0(cls, primes):
        return cls("gamma0", tuple(primes))

    @classmethod
    def gamma0plus(cls, primes=()):
        return cls("gamma0plus", tuple(primes))

    @property
    def level(self):
        return prod(self.primes)

    @property
    def r(self):
        return len(self.primes)

    @property
    def cusps(self):
        return 2**self.r if self.kind == "gamma0" else 1

    @property
    def label(self):
        if self.kind == "modular":
            return "modular"
        return f"{self.kind}({','.join(map(str, self.primes))})"

    def to_json(self):
        return {"family": self.kind, "primes": list(self.primes)}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(obj["family"], tuple(obj.get("primes", ())))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed family: {obj!r}") from exc


# Families exercised by the acceptance suite.
ACCEPTANCE_FAMILIES = (
    ScatteringFamily.modular(),
    ScatteringFamily.gamma0((2,)),
    ScatteringFamily.gamma0((3,)),
    ScatteringFamily.gamma0((5,)),
    ScatteringFamily.gamma0((2, 3)),
    ScatteringFamily.gamma0((2, 3, 5)),
    ScatteringFamily.gamma0plus(()),
    ScatteringFamily.gamma0plus((2,)),
    ScatteringFamily.gamma0plus((2, 3)),
    ScatteringFamily.gamma0plus((2, 3, 5)),
)


def singular_distance(family, s):
    """Distance from s to the nearest zero/pole of any factor in the closed-form product."""
    s = np.asarray(s, dtype=complex)
    x, y = s.real, s.imag
    if family.kind == "gamma0plus":
        real_pts = np.array([0.0, 0.5, 1.0])
        dist = np.min(np.abs(s[..., None] - real_pts), axis=-1)
        for p in family.primes:
            period = 2 * pi / log(p)
            for shift in (0.0, 1.0):
                k = np.round((y / period) - 0.5)
                yk = (k + 0.5) * period
                dist = np.minimum(dist, np.abs(s - (shift + 1j * yk)))
        return dist
    # Gamma(s-1/2), 1/Gamma(s), zeta(2s-1), zeta(2s): singular on {1} and {k/2 : k <= 1}
    half = np.minimum(np.round(2 * x), 1.0) / 2
    dist = np.minimum(np.abs(s - half), np.abs(s - 1.0))
    for p in family.primes:
        period = pi / log(p)
        for shift in (0.0, 1.0):
            yk = np.round(y / period) * period
            dist = np.minimum(dist, np.abs(s - (shift + 1j * yk)))
    return dist


def _check(family, s):
    d = singular_distance(family, s)
    if np.any(d < SINGULAR_TOL):
        raise SingularityError(f"{family.label}: s within {SINGULAR_TOL:g} of a factor singularity; use the germ path")


def _modular(s):
    lg = _kernels.loggamma(np.concatenate([s - 0.5, s]))
    lg_a, lg_b = lg[: s.size], lg[s.size :]
    z = _kernels.zeta(np.concatenate([2 * s - 1, 2 * s]))
    return np.sqrt(pi) * np.exp(lg_a - lg_b) * z[: s.size] / z[s.size :]


def _xi(w):
    """Completed zeta (1/2) w (w-1) pi^(-w/2) Gamma(w/2) zeta(w), via xi(w) = xi(1-w) on Re w < 1/2."""
    w = np.where(w.real < 0.5, 1.0 - w, w)
    return 0.5 * w * (w - 1.0) * np.exp(-0.5 * w * LOG_PI + _kernels.loggamma(w / 2)) * _kernels.zeta(w)


def _phi_flat(family, s):
    if family.kind == "modular":
        return _modular(s)
    if family.kind == "gamma0":
        out = _modular(s) ** (2**family.r)
        e = 2 ** (family.r - 1)
        for p in family.primes:
            lp = log(p)
            out = out * ((1.0 - np.exp((2 - 2 * s) * lp)) / (1.0 - np.exp(2 * s * lp))) ** e
        return out
    out = s / (s - 1.0) * _xi(2 * s - 1) / _xi(2 * s) * np.exp(-s * log(family.level))
    for p in family.primes:
        ps = np.exp(s * log(p))
        out = out * (ps + p) / (ps + 1.0)
    return out


def phi_eval(family, s):
    """phi(s) by direct factor evaluation; SingularityError near factor zeros/poles."""
    arr = np.asarray(s, dtype=complex)
    _check(family, arr)
    out = _phi_flat(family, arr.ravel())
    return complex(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def _xi_logderiv(w):
    psi = _kernels.digamma(w / 2)
    return 1.0 / w + 1.0 / (w - 1.0) - 0.5 * LOG_PI + 0.5 * psi + zeta_logderiv(w)


def phi_logderiv(family, s):
    """phi'(s)/phi(s) assembled from digamma, zeta'/zeta and elementary factors."""
    arr = np.asarray(s, dtype=complex)
    _check(family, arr)
    s = arr.ravel()
    if family.kind == "gamma0plus":
        out = 1.0 / s - 1.0 / (s - 1.0) + 2 * _xi_logderiv(2 * s - 1) - 2 * _xi_logderiv(2 * s)
        out = out - (log(family.level) if family.primes else 0.0)
        for p in family.primes:
            lp = log(p)
            ps = np.exp(s * lp)
            out = out + lp * ps / (ps + p) - lp * ps / (ps + 1.0)
    else:
        psi = _kernels.digamma(np.concatenate([s - 0.5, s]))
        out = psi[: s.size] - psi[s.size :] + 2 * zeta_logderiv(2 * s - 1) - 2 * zeta_logderiv(2 * s)
        if family.kind == "gamma0":
            out = out * 2**family.r
            e = 2 ** (family.r - 1)
            for p in family.primes:
                lp = log(p)
                num = np.exp((2 - 2 * s) * lp)
                den = np.exp(2 * s * lp)
                out = out + e * (2 * lp * num / (1.0 - num) + 2 * lp * den / (1.0 - den))
    return complex(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def sqrt_level(family):
    return sqrt(family.level)
