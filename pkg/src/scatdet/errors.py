"""Exception hierarchy shared by all modules."""


class ScatDetError(Exception):
    """Base class for every error raised by this package."""


class PoleError(ScatDetError, ZeroDivisionError):
    """Argument sits on (or within tolerance of) a pole."""


class ZeroError(ScatDetError, ValueError):
    """Logarithm requested at a zero of the function."""


class DomainError(ScatDetError, ValueError):
    pass


class SingularityError(ScatDetError, ValueError):
    """Direct evaluation hit a zero/pole of some factor; use the germ path."""


class ConvergenceError(ScatDetError, ArithmeticError):
    pass


class ContourTooCloseError(ScatDetError, ValueError):
    """Integration contour passes too close to a zero or pole."""


class NonIntegerWindingError(ScatDetError, ArithmeticError):
    """Argument-principle integral did not round cleanly to an integer."""
