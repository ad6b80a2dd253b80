"""Superzeta sums, zeta-regularized products and the sign assembly at z = 1/2."""
import cmath
import json
from dataclasses import dataclass
from math import log, pi

import numpy as np

from .divisor import corollary_alpha, count_divisor
from .errors import ConvergenceError, DomainError
from .scattering.head import leading_data
from .specfun import log_gamma
from .specfun.constants import LOG_2PI, ZETA_PRIME_0, ZETA_PRIME_M1

FD_STEP = 1e-3
ASSEMBLY_TOL = 1e-12


@dataclass(frozen=True)
class ZeroSet:
    """Zeros y_k of an entire function: an explicit list, or y_k = start + (k-1) step.

    Progressions must have step < 0 (zeros marching to -oo); the spacing is |step|.
    """

    kind: str
    zeros: tuple = ()
    start: float = 0.0
    step: float = -1.0

    def __post_init__(self):
        if self.kind == "finite":
            if not self.zeros:
                raise DomainError("finite zero set must be nonempty")
            zs = tuple((complex(y), int(m)) for y, m in self.zeros)
            if any(m < 1 for _, m in zs):
                raise DomainError("multiplicities must be positive")
            object.__setattr__(self, "zeros", zs)
        elif self.kind == "progression":
            if not self.step < 0:
                raise DomainError("progression step must be negative (zeros tending to -oo)")
        else:
            raise DomainError(f"unknown zero-set kind {self.kind!r}")

    @classmethod
    def finite(cls, zeros):
        """``zeros``: iterable of y or (y, multiplicity)."""
        items = [(z, 1) if np.isscalar(z) else tuple(z) for z in zeros]
        return cls("finite", tuple(items))

    @classmethod
    def progression(cls, start, step):
        return cls("progression", start=float(start), step=float(step))

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            if obj["kind"] == "finite":
                return cls.finite([(complex(re, im), int(m)) for re, im, m in obj["zeros"]])
            if obj["kind"] == "progression":
                return cls.progression(obj["start"], obj["step"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed zero set: {obj!r}") from exc
        raise DomainError(f"unknown zero-set kind in {obj!r}")

    def to_json(self):
        if self.kind == "finite":
            return {"kind": "finite", "zeros": [[y.real, y.imag, m] for y, m in self.zeros]}
        return {"kind": "progression", "start": self.start, "step": self.step}


def _on_cut(x):
    x = complex(x)
    return x.imag == 0 and x.real <= 0


def _check_cut(zs, z):
    if zs.kind == "finite":
        bad = [y for y, _ in zs.zeros if _on_cut(z - y)]
        if bad:
            raise DomainError(f"z = {z} is off the cut plane: z - y in (-oo, 0] for y = {bad[0]}")
    elif _on_cut((z - zs.start) / -zs.step):
        raise DomainError(f"z = {z} is off the cut plane for the progression")


def _power(x, s):
    """x^(-s) on the principal branch."""
    return cmath.exp(-s * cmath.log(x))


@dataclass(frozen=True)
class SuperzetaSum:
    value: complex
    tail_error: float
    terms: int


def superzeta_sum(zs, s, z, cutoff=None):
    """sum_k (z - y_k)^(-s) over the first ``cutoff`` zeros (counted with multiplicity).

    For progressions the truncation is completed by an integral-comparison tail
    and ``tail_error`` estimates what that tail misses.
    """
    s, z = complex(s), complex(z)
    _check_cut(zs, z)
    if zs.kind == "finite":
        items = [y for y, m in zs.zeros for _ in range(m)]
        if cutoff is not None:
            items = items[:cutoff]
        return SuperzetaSum(sum(_power(z - y, s) for y in items), 0.0, len(items))
    if s.real <= 2:
        raise ConvergenceError("infinite superzeta series needs Re s > 2")
    if cutoff is None or cutoff < 1:
        raise DomainError("progressions need a positive cutoff")
    d = -zs.step
    base = z - zs.start
    total = sum(_power(base + j * d, s) for j in range(cutoff))
    edge = base + cutoff * d
    tail = cmath.exp((1 - s) * cmath.log(edge)) / (d * (s - 1)) + 0.5 * _power(edge, s)
    err = abs(s * d * _power(edge, s + 1)) / 12
    return SuperzetaSum(total + tail, err, cutoff)


def regularized_det(zs, z):
    """exp(-d/ds Z(s, z) at s = 0).

    Finite sets give prod (z - y)^m. A progression with spacing d and
    w = (z - start)/d gives d^(1/2 - w) sqrt(2 pi) / Gamma(w) (Lerch).
    """
    z = complex(z)
    _check_cut(zs, z)
    if zs.kind == "finite":
        return cmath.exp(sum(m * cmath.log(z - y) for y, m in zs.zeros))
    d = -zs.step
    w = (z - zs.start) / d
    return cmath.exp((0.5 - w) * log(d) + 0.5 * LOG_2PI - log_gamma(w))


def neg_derivative_at_zero(func, h=FD_STEP):
    """-d/ds func(s) at s = 0, fourth-order central differences."""
    return -(func(-2 * h) - 8 * func(-h) + 8 * func(h) - func(2 * h)) / (12 * h)


@dataclass(frozen=True)
class ExpansionData:
    """Polynomial (b) and logarithmic (a-tilde) coefficients of a large-z expansion of log f."""

    b0: float
    b1: float
    b2: float
    a_tilde0: float = 0.0
    a_tilde1: float = 0.0
    a_tilde2: float = 0.0


def barnes_expansion():
    """Coefficients for f(z) = G(z + 1), read off its asymptotic expansion."""
    return ExpansionData(b0=ZETA_PRIME_M1, b1=-ZETA_PRIME_0, b2=0.0, a_tilde0=-1.0 / 12, a_tilde1=0.0, a_tilde2=0.5)


def voros_assemble(data, hadamard_log, z):
    """exp(-(b2 z^2 + b1 z + b0)) Delta_f(z), where hadamard_log(z) = log Delta_f(z)."""
    z = complex(z)
    return cmath.exp(-(data.b2 * z * z + data.b1 * z + data.b0) + complex(hadamard_log(z)))


def _principal_log(x):
    # arg in (-pi, pi]: negative reals map to +i pi
    return cmath.log(complex(x, 0.0))


@dataclass(frozen=True)
class SignPipeline:
    sign: int
    alpha: float
    ledger_factor: float  # prod over the real divisor of the (sigma-1/2)/(1/2-sigma) style ratios
    prefactor: float  # pi^(c/2) (d(1)/g_1) * ledger_factor, i.e. phi(1/2) / e^alpha


def ledger_factor(family):
    """Product of the real-divisor ratios at z = 1/2 obtained from the log rule.

    A pole sigma of order q contributes ((sigma-1/2)/(1/2-sigma))^q and a zero
    rho of order m contributes ((1/2-rho)/(rho-1/2))^m, each written as
    exp(-d/ds [x^(-s) - y^(-s)] at 0) = exp(Log x - Log y).
    """
    total = 0j
    for e in count_divisor(family).breakdown:
        x = e.location - 0.5
        if e.order < 0:
            total += -e.order * (_principal_log(x) - _principal_log(-x))
        else:
            total += e.order * (_principal_log(-x) - _principal_log(x))
    return cmath.exp(total)


def sign_pipeline(family):
    g1, d1 = leading_data(family)
    lf = ledger_factor(family)
    if abs(lf.imag) > ASSEMBLY_TOL or abs(abs(lf.real) - 1) > ASSEMBLY_TOL:
        raise ArithmeticError(f"ledger factor {lf} is not +-1")
    ledger = 1 if lf.real > 0 else -1
    sign = ledger * (1 if d1 > 0 else -1)
    alpha = log(corollary_alpha(family))
    prefactor = ledger * pi ** (family.cusps / 2) * d1 / g1
    if abs(prefactor * np.exp(alpha) - sign) > ASSEMBLY_TOL:
        raise ArithmeticError("central-value reassembly does not reproduce the sign")
    return SignPipeline(sign, alpha, float(ledger), float(prefactor))
