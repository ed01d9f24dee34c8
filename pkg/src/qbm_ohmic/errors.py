"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid physical parameter or argument."""


class NumericalFailure(RuntimeError):
    """A numerical routine broke its own contract (CFL, mass drift, NaN)."""


class ConvergenceError(NumericalFailure):
    """A quadrature did not settle when its node count was doubled."""

    def __init__(self, message, error_estimate=None):
        super().__init__(message)
        self.error_estimate = error_estimate


class CoefficientMismatch(NumericalFailure):
    """Extracted master-equation coefficients depend on the probe state."""
