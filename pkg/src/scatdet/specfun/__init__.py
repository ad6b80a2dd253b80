"""Complex special functions: log-Gamma, digamma, Riemann/Hurwitz zeta, Barnes G."""
from .constants import BERNOULLI, EULER_GAMMA, STIELTJES, ZETA_PRIME_0, ZETA_PRIME_M1, bernoulli
from .core import (
    barnes_asymptotic,
    barnes_g_logderiv,
    digamma,
    gamma,
    hurwitz_zeta,
    hurwitz_zeta_ds0,
    log_barnes_g,
    log_gamma,
    riemann_zeta,
    stirling_sum,
    zeta_derivative,
    zeta_logderiv,
)
from ._kernels import warmup
