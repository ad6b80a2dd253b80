"""Truncated logarithm of the Selberg zeta function from a supplied list of class norms."""
from math import log

import numpy as np

from ..errors import DomainError


def selberg_log_z(norms, s):
    """-sum Lambda(P) / (N(P)^s log N(P)) over the given (norm, primitive_norm) pairs.

    Lambda(P) = log N(P_0) / (1 - N(P)^(-1)). Only the listed classes are
    summed, so this is a truncation of the true series; requires Re s > 1.
    """
    s = complex(s)
    if s.real <= 1:
        raise DomainError("the Euler product is only summed for Re s > 1")
    total = 0j
    for norm, prim in norms:
        if norm <= 1 or prim <= 1:
            raise DomainError("hyperbolic norms must exceed 1")
        lam = log(prim) / (1.0 - 1.0 / norm)
        total -= lam * np.exp(-s * log(norm)) / log(norm)
    return complex(total)
