"""Orbifold bookkeeping: volume, trivial-zero multiplicities and the function G_1."""
import json
from dataclasses import dataclass
from math import floor, pi, sin

import numpy as np

from .errors import DomainError, PoleError, SingularityError, ZeroError
from .specfun import barnes_g_logderiv, digamma, log_barnes_g, log_gamma
from .specfun.constants import LOG_2PI

IDENTITY_TOL = 1e-8


@dataclass(frozen=True)
class GroupDescriptor:
    """Signature (genus, cusp count, elliptic orders) of a cofinite Fuchsian group."""

    genus: int
    cusps: int
    elliptic_orders: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "elliptic_orders", tuple(sorted(int(d) for d in self.elliptic_orders)))
        if int(self.genus) != self.genus or self.genus < 0:
            raise DomainError(f"genus must be a non-negative integer, got {self.genus!r}")
        if int(self.cusps) != self.cusps or self.cusps < 1:
            raise DomainError(f"need at least one cusp, got {self.cusps!r}")
        if any(d < 2 for d in self.elliptic_orders):
            raise DomainError(f"elliptic orders must be >= 2, got {self.elliptic_orders}")
        if self.euler_char_term <= 0:
            raise DomainError(f"signature {self} does not define a hyperbolic orbifold (volume <= 0)")

    @classmethod
    def modular(cls):
        return cls(0, 1, (2, 3))

    @property
    def elliptic_count(self):
        return len(self.elliptic_orders)

    @property
    def euler_char_term(self):
        """2g - 2 + c + sum(1 - 1/d_R), i.e. vol / 2pi."""
        return 2 * self.genus - 2 + self.cusps + sum(1.0 - 1.0 / d for d in self.elliptic_orders)

    def to_json(self):
        return {"genus": self.genus, "cusps": self.cusps, "elliptic_orders": list(self.elliptic_orders)}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(int(obj["genus"]), int(obj["cusps"]), tuple(obj.get("elliptic_orders", ())))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed descriptor: {obj!r}") from exc


@dataclass(frozen=True)
class MultiplicityReport:
    n: int
    floor_formula: int
    sine_formula: float

    @property
    def agree(self):
        return abs(self.floor_formula - self.sine_formula) < IDENTITY_TOL


def volume(desc):
    """Gauss-Bonnet hyperbolic area."""
    vol = 2 * pi * desc.euler_char_term
    if vol <= 0:
        raise DomainError("non-positive volume")
    return vol


def _sine_sum(d, n):
    return sum(sin(k * pi * (2 * n + 1) / d) / sin(k * pi / d) for k in range(1, d))


def trivial_multiplicity_sine(desc, n):
    return volume(desc) / (2 * pi) * (2 * n + 1) - sum(
        _sine_sum(d, n) / d for d in desc.elliptic_orders
    )


def trivial_multiplicity_floor(desc, n):
    """Exact integer order of the trivial zero of Z at s = -n (may be negative at n = 0)."""
    return (
        (2 * n + 1) * (2 * desc.genus - 2 + desc.cusps)
        + 2 * n * desc.elliptic_count
        - 2 * sum(n // d for d in desc.elliptic_orders)
    )


def multiplicity_report(desc, n):
    return MultiplicityReport(n, trivial_multiplicity_floor(desc, n), trivial_multiplicity_sine(desc, n))


def verify_sine_floor_identity(desc, n_max):
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    for n in range(n_max + 1):
        lhs = sum((2 * n + 1 + _sine_sum(d, n)) / d for d in desc.elliptic_orders)
        rhs = sum(2 * floor(n / d) + 1 for d in desc.elliptic_orders)
        if abs(lhs - rhs) >= IDENTITY_TOL:
            return False
    return True


def _check_g1_point(desc, s):
    z = np.atleast_1d(np.asarray(s, dtype=complex))
    n = np.round(z.real)
    hit = (n <= 0) & (np.abs(z - n) < 1e-12)
    if np.any(hit):
        k = int(-n[hit][0])
        m = trivial_multiplicity_floor(desc, k)
        if m > 0:
            raise ZeroError(f"G_1 has a zero of order {m} at s = {-k}")
        if m < 0:
            raise PoleError(f"G_1 has a pole of order {-m} at s = {-k}")
        raise SingularityError(f"factors of G_1 are singular at s = {-k} (net order 0)")


def log_g1_blocks(desc, s):
    """The three summands of log G_1(s): hyperbolic, elliptic and G_E parts."""
    _check_g1_point(desc, s)
    s = np.asarray(s, dtype=complex)
    chi = 2 * desc.genus - 2 + desc.cusps
    two_log_g = 2 * log_barnes_g(s)
    hyp = chi * (-s * LOG_2PI + two_log_g - log_gamma(s)) if chi else 0 * s
    ell = desc.elliptic_count * (-s * LOG_2PI + two_log_g)
    ge = 0 * s
    for d in desc.elliptic_orders:
        for m in range(d):
            ge = ge + log_barnes_g((s + m) / d)
    return hyp, ell, -2 * ge


def log_g1(desc, s):
    hyp, ell, ge = log_g1_blocks(desc, s)
    return hyp + ell + ge


def log_g1_derivative(desc, s):
    """d/ds log G_1(s), assembled from digamma and d log G."""
    _check_g1_point(desc, s)
    s = np.asarray(s, dtype=complex)
    chi = 2 * desc.genus - 2 + desc.cusps
    dg = 2 * barnes_g_logderiv(s)
    out = chi * (-LOG_2PI + dg - digamma(s)) + desc.elliptic_count * (-LOG_2PI + dg)
    for d in desc.elliptic_orders:
        for m in range(d):
            out = out - 2 * barnes_g_logderiv((s + m) / d) / d
    return out


def g1_winding(desc, center, radius=0.3, nodes=4096):
    """(1/2 pi i) times the contour integral of (log G_1)' over a circle."""
    theta = 2 * pi * np.arange(nodes) / nodes
    ring = radius * np.exp(1j * theta)
    vals = log_g1_derivative(desc, center + ring)
    return complex(np.mean(vals * ring))
