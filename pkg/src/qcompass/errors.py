"""Exception types raised across the package."""


class QCompassError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(QCompassError, ValueError):
    """An argument is outside the domain of the operation."""


class DegenerateParameterError(QCompassError, ArithmeticError):
    """A parameter makes a denominator vanish or a constant underflow."""


class DegenerateNormalizationError(DegenerateParameterError):
    """The compass normalization expression is not strictly positive."""


class QuadratureWindowError(QCompassError, RuntimeError):
    """The integrand has not decayed at the edges of the integration window."""


class RealnessError(QCompassError, ArithmeticError):
    """A quantity that must be real carries an imaginary residue above tolerance."""


class NormalizationMismatchError(QCompassError, ArithmeticError):
    """Analytic and numeric normalization constants disagree."""

    def __init__(self, analytic, numeric, rel):
        self.analytic = analytic
        self.numeric = numeric
        self.rel = rel
        super().__init__(
            f"N_q mismatch: analytic={analytic:.17g} numeric={numeric:.17g} rel={rel:.3g}"
        )
