"""Shared exception types."""


class InputError(ValueError):
    """Malformed or inadmissible input data."""


class DomainError(ValueError):
    """A value lies outside the mathematical domain of an operation."""
