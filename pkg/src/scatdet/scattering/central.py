"""phi(1/2) two ways: the germ constant term and Richardson extrapolation from the right."""
from dataclasses import dataclass

import numpy as np

from ..errors import SingularityError
from .family import phi_eval
from .germs import germ_at

GERM_TOL = 1e-6
EXTRAPOLATION_TOL = 1e-4
LADDER_START = 1e-2
LADDER_LEVELS = 7


@dataclass(frozen=True)
class CentralValueReport:
    germ_value: float
    extrapolated_value: float
    predicted_sign: int

    @property
    def matches(self):
        return (
            abs(self.germ_value - self.predicted_sign) < GERM_TOL
            and abs(self.extrapolated_value - self.predicted_sign) < EXTRAPOLATION_TOL
        )

    def to_json(self):
        return {
            "germ_value": self.germ_value,
            "extrapolated_value": self.extrapolated_value,
            "predicted_sign": self.predicted_sign,
            "matches": self.matches,
        }


def richardson(values, ratio=2.0):
    """Neville-Richardson limit of a sequence sampled at h, h/ratio, h/ratio^2, ..."""
    table = [list(values)]
    for j in range(1, len(values)):
        prev = table[-1]
        f = ratio**j
        table.append([prev[k] + (prev[k] - prev[k - 1]) / (f - 1) for k in range(1, len(prev))])
    return table[-1][0]


def extrapolated_central_value(family, start=LADDER_START, levels=LADDER_LEVELS):
    eps = start * 0.5 ** np.arange(levels)
    vals = np.real(phi_eval(family, 0.5 + eps))
    return float(richardson(vals))


def central_germ_value(family):
    g = germ_at(family, 0.5)
    if g.order != 0:
        raise SingularityError(f"germ of phi at 1/2 has order {g.order}; |phi(1/2)| = 1 is violated")
    return g.c0


def central_value(family):
    # divisor imports this module's package; import here to avoid a cycle
    from ..divisor import predicted_sign

    return CentralValueReport(
        central_germ_value(family), extrapolated_central_value(family), predicted_sign(family)
    )
