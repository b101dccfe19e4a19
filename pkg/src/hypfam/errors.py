"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the supported domain."""


class ConvergenceError(RuntimeError):
    """A numeric routine could not reach the requested tolerance."""
