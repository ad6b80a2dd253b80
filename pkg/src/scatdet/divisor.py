"""Zeros and poles of phi on (1/2, oo): symbolic ledger, argument-principle check, sign law.

Counting is on the open interval (1/2, oo). Since |phi(1/2)| = 1 the point
1/2 is never a zero or pole, so this agrees with counting on [1/2, oo).
"""
from dataclasses import dataclass
from math import log, pi

import numpy as np

from .errors import ContourTooCloseError, DomainError, NonIntegerWindingError
from .scattering.family import phi_eval, phi_logderiv
from .scattering.head import leading_data
from .specfun import riemann_zeta

WINDING_TOL = 1e-3
CONTOUR_NODES = 2048
MAGNITUDE_FLOOR = 1e-6


@dataclass(frozen=True)
class DivisorEntry:
    location: float
    order: int
    source: str


@dataclass(frozen=True)
class DivisorCount:
    breakdown: tuple
    justifications: tuple = ()

    def __post_init__(self):
        if any(e.location <= 0.5 for e in self.breakdown):
            raise DomainError("divisor entries must lie right of 1/2")

    @property
    def zeros(self):
        return sum(max(e.order, 0) for e in self.breakdown)

    @property
    def poles(self):
        return sum(max(-e.order, 0) for e in self.breakdown)

    @property
    def net(self):
        return self.zeros - self.poles

    def to_json(self):
        return {
            "zeros": self.zeros,
            "poles": self.poles,
            "breakdown": [
                {"location": e.location, "order": e.order, "source": e.source} for e in self.breakdown
            ],
            "justifications": list(self.justifications),
        }


def zeta_real_sign_check(n_grid=400):
    """zeta < 0 on (0, 1) and > 0 on (1, 40], sampled on a grid."""
    left = np.linspace(0.0, 1.0, n_grid + 2)[1:-1]
    right = np.linspace(1.0, 40.0, n_grid + 2)[1:]
    return bool(np.all(riemann_zeta(left).real < 0) and np.all(riemann_zeta(right).real > 0))


def _common_notes(kind):
    zeta_ok = zeta_real_sign_check()
    notes = [
        "Gamma(s-1/2) and Gamma(s) have no zeros or poles for s > 1/2",
        "zeta(2s) != 0 for real s > 1/2 since 2s > 1",
        f"zeta(2s-1) < 0 on (1/2,1) and > 0 on (1,oo), grid check {'passed' if zeta_ok else 'FAILED'}",
    ]
    if kind == "gamma0":
        notes.append("1 - p^(2s) != 0 for real s > 0; 1 - p^(2-2s) vanishes on the real axis only at s = 1")
    if kind == "gamma0plus":
        notes = [
            "xi is entire with zeros only at nontrivial zeta zeros (off the real axis)",
            "xi(2s-1) and xi(2s) are positive for real s > 1/2",
            "(p^s + p)/(p^s + 1) > 0 for real s",
        ]
    return tuple(notes)


def count_divisor(family):
    """Real zeros/poles of phi on (1/2, oo) read off the factor structure."""
    if family.kind == "modular":
        entries = [DivisorEntry(1.0, -1, "pole of zeta(2s-1)")]
    elif family.kind == "gamma0":
        r = family.r
        entries = [DivisorEntry(1.0, -(2**r), f"pole of [zeta(2s-1)]^{2**r}")]
        entries += [
            DivisorEntry(1.0, 2 ** (r - 1), f"zero of (1 - {p}^(2-2s))^{2 ** (r - 1)}") for p in family.primes
        ]
    else:
        entries = [DivisorEntry(1.0, -1, "pole of s/(s-1)")]
    return DivisorCount(tuple(entries), _common_notes(family.kind))


def predicted_sign(family):
    """(-1)^(N+P) sgn d(1)."""
    div = count_divisor(family)
    _, d1 = leading_data(family)
    return (-1) ** (div.zeros + div.poles) * (1 if d1 > 0 else -1)


@dataclass(frozen=True)
class Rectangle:
    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise DomainError(f"degenerate rectangle {self}")

    def boundary(self, nodes=CONTOUR_NODES):
        """Counterclockwise sides as (points, weights) with trapezoid weights per side."""
        corners = [
            complex(self.re_min, self.im_min),
            complex(self.re_max, self.im_min),
            complex(self.re_max, self.im_max),
            complex(self.re_min, self.im_max),
        ]
        t = np.linspace(0.0, 1.0, nodes)
        w = np.full(nodes, 1.0 / (nodes - 1))
        w[[0, -1]] *= 0.5
        pts, wts = [], []
        for a, b in zip(corners, corners[1:] + corners[:1]):
            pts.append(a + (b - a) * t)
            wts.append((b - a) * w)
        return np.concatenate(pts), np.concatenate(wts)


STANDARD_RECT = Rectangle(0.55, 3.25, -0.75, 0.75)


def winding_number(logderiv, rect, f=None, nodes=CONTOUR_NODES):
    """Nearest integer to (1/2 pi i) times the contour integral of f'/f over ``rect``.

    When ``f`` is given the boundary is screened first: both |f| and |1/f|
    must stay above 1e-6 at every node.
    """
    pts, wts = rect.boundary(nodes)
    if f is not None:
        mag = np.abs(f(pts))
        if mag.min() <= MAGNITUDE_FLOOR or (1.0 / mag).min() <= MAGNITUDE_FLOOR:
            raise ContourTooCloseError(f"contour {rect} passes too close to a zero or pole")
    integral = np.sum(logderiv(pts) * wts) / (2j * pi)
    n = int(round(integral.real))
    residual = abs(integral - n)
    if residual >= WINDING_TOL:
        raise NonIntegerWindingError(f"winding {integral} is not within {WINDING_TOL} of an integer")
    return n


def argument_principle_net(family, rect=STANDARD_RECT, nodes=CONTOUR_NODES):
    """Zeros minus poles of phi inside ``rect``, numerically.

    The proximity screen is applied to g_1^(2s) phi(s): the factor is entire
    and zero-free, and it removes the g_1^(-2s) decay that would otherwise
    push |phi| below the floor far from any divisor point when g_1 is large.
    """
    g1, _ = leading_data(family)
    log_g1 = 2 * log(g1)
    return winding_number(
        lambda s: phi_logderiv(family, s),
        rect,
        f=lambda s: phi_eval(family, s) * np.exp(log_g1 * s),
        nodes=nodes,
    )


@dataclass(frozen=True)
class TheoremCheck:
    family: str
    zeros: int
    poles: int
    sign_d1: int
    predicted: int
    computed: int

    @property
    def ok(self):
        return self.predicted == self.computed

    def to_json(self):
        return {
            "family": self.family,
            "N": self.zeros,
            "P": self.poles,
            "sgn_d1": self.sign_d1,
            "predicted": self.predicted,
            "computed": self.computed,
            "ok": self.ok,
        }


def verify_theorem(family):
    from .scattering.central import central_germ_value

    div = count_divisor(family)
    _, d1 = leading_data(family)
    sgn = 1 if d1 > 0 else -1
    pred = (-1) ** (div.zeros + div.poles) * sgn
    germ = central_germ_value(family)
    return TheoremCheck(family.label, div.zeros, div.poles, sgn, pred, 1 if germ > 0 else -1)


def corollary_alpha(family):
    """g_1 / (pi^(c/2) |d(1)|), the positive factor e^alpha in the central-value formula."""
    g1, d1 = leading_data(family)
    return g1 / (pi ** (family.cusps / 2) * abs(d1))


def phivalue_reassembly(family):
    """(-1)^(N+P) pi^(c/2) (d(1)/g_1) e^alpha, which must be exactly +-1."""
    div = count_divisor(family)
    g1, d1 = leading_data(family)
    return (-1) ** (div.zeros + div.poles) * pi ** (family.cusps / 2) * (d1 / g1) * corollary_alpha(family)


def log_corollary_alpha(family):
    return log(corollary_alpha(family))
