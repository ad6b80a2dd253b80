"""Explicit scattering determinants: evaluation, germs, Dirichlet heads, central value."""
from .central import CentralValueReport, central_value, extrapolated_central_value, richardson
from .family import ACCEPTANCE_FAMILIES, ScatteringFamily, phi_eval, phi_logderiv, singular_distance
from .germ import LaurentGerm
from .germs import germ_at
from .head import DirichletHead, dirichlet_head
from .selberg import selberg_log_z
