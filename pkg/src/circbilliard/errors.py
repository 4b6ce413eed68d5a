"""Exception types raised by the toolkit."""


class BilliardError(Exception):
    """Base class for all toolkit errors."""


class DomainError(BilliardError, ValueError):
    """An argument lies outside the domain of the requested function."""


class GeometryError(BilliardError, ValueError):
    """Invalid geometry parameters. ``field`` names the offending parameter."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class EnvelopeError(BilliardError, ValueError):
    """Request falls outside the validated accuracy envelope of the Bessel kernel."""


class BracketError(BilliardError, RuntimeError):
    """A sign change could not be isolated where one must exist."""


class ConvergenceError(BilliardError, RuntimeError):
    """An iterative procedure (root refinement, quadrature) failed its tolerance."""


class EvaluationOverflowError(BilliardError, OverflowError):
    """A special-function evaluation produced a non-finite value."""
