"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all toolkit-specific errors."""


class DomainError(ToolkitError):
    """An input lies outside the mathematical domain of an operation."""


class NumericalError(ToolkitError):
    """A computation failed numerically (NaN, blow-up, broken stability bound)."""
