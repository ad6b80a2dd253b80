"""Numerical verification of the sign of the automorphic scattering determinant at s = 1/2."""
__version__ = "0.1.0"
