"""Truncated Laurent expansions at a real point and the arithmetic on them."""
from dataclasses import dataclass
from math import factorial

import numpy as np

from ..errors import DomainError, SingularityError

DEFAULT_DEPTH = 6


@dataclass(frozen=True)
class LaurentGerm:
    """(s - point)^order * (c0 + c1 (s - point) + ...), c0 != 0."""

    point: float
    order: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        object.__setattr__(self, "point", float(self.point))
        object.__setattr__(self, "order", int(self.order))
        if len(self.coeffs) == 0:
            raise DomainError("germ needs at least one coefficient")
        if self.coeffs[0] == 0:
            raise DomainError("leading coefficient must be nonzero")

    @classmethod
    def from_taylor(cls, point, coeffs, order=0, zero_tol=0.0):
        """Strip leading coefficients with |c| <= zero_tol, raising the order accordingly."""
        coeffs = [float(c) for c in coeffs]
        k = 0
        while k < len(coeffs) - 1 and abs(coeffs[k]) <= zero_tol:
            k += 1
        return cls(float(point), order + k, tuple(coeffs[k:]))

    @classmethod
    def constant(cls, point, value, depth):
        return cls(float(point), 0, (float(value),) + (0.0,) * (depth - 1))

    @property
    def depth(self):
        return len(self.coeffs)

    @property
    def c0(self):
        return self.coeffs[0]

    def value(self):
        if self.order != 0:
            raise SingularityError(f"germ at {self.point} has order {self.order}; no finite nonzero value")
        return self.c0

    def truncate(self, depth):
        return LaurentGerm(self.point, self.order, self.coeffs[:depth])

    def _check(self, other):
        if other.point != self.point:
            raise DomainError("germs expanded at different points")

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return LaurentGerm(self.point, self.order, tuple(other * c for c in self.coeffs))
        self._check(other)
        n = min(self.depth, other.depth)
        a, b = self.coeffs, other.coeffs
        out = tuple(sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n))
        return LaurentGerm(self.point, self.order + other.order, out)

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = LaurentGerm.constant(self.point, other, self.depth) if other else None
            if other is None:
                return self
        self._check(other)
        lo = min(self.order, other.order)
        hi = min(self.order + self.depth, other.order + other.depth)
        out = [0.0] * (hi - lo)
        for g in (self, other):
            for k, c in enumerate(g.coeffs):
                if g.order + k < hi:
                    out[g.order - lo + k] += c
        return LaurentGerm.from_taylor(self.point, out, order=lo)

    __radd__ = __add__

    def inverse(self):
        a = self.coeffs
        out = [1.0 / a[0]]
        for k in range(1, self.depth):
            out.append(-sum(a[i] * out[k - i] for i in range(1, k + 1)) / a[0])
        return LaurentGerm(self.point, -self.order, tuple(out))

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self * (1.0 / other)
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentGerm.constant(self.point, 1.0, self.depth)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def affine(self, alpha, new_point):
        """Germ of F(alpha*s + beta) at new_point, given self = germ of F at alpha*new_point + beta."""
        m = self.order
        out = tuple(c * alpha ** (m + k) for k, c in enumerate(self.coeffs))
        return LaurentGerm(float(new_point), m, out)

    def __call__(self, s):
        z = s - self.point
        return z**self.order * sum(c * z**k for k, c in enumerate(self.coeffs))

    def to_json(self):
        return {"point": self.point, "order": self.order, "coeffs": list(self.coeffs)}


def series_exp(log_coeffs):
    """Taylor coefficients of exp(L(z)) given those of L."""
    n = len(log_coeffs)
    out = [np.exp(log_coeffs[0])] + [0.0] * (n - 1)
    for k in range(1, n):
        out[k] = sum(j * log_coeffs[j] * out[k - j] for j in range(1, k + 1)) / k
    return out


def exp_linear_coeffs(c0, slope, depth):
    """Taylor coefficients of c0 * exp(slope * z)."""
    return [c0 * slope**k / factorial(k) for k in range(depth)]


def cauchy_coeffs(f, center, radius, depth, nodes=64):
    """Taylor coefficients of an analytic f at ``center`` by the trapezoid rule on a circle."""
    theta = 2 * np.pi * np.arange(nodes) / nodes
    w = np.exp(1j * theta)
    vals = np.asarray(f(center + radius * w), dtype=complex)
    fft = np.fft.fft(vals) / nodes
    return [float(fft[k].real) / radius**k for k in range(depth)]
