"""Shared exception types."""


class InvalidInputError(ValueError):
    """Raised when an argument violates a documented precondition."""


class NumericalFailureError(RuntimeError):
    """Raised when an underlying numerical routine fails to converge."""
