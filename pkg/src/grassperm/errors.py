"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class CapExceededError(DomainError):
    """An exhaustive enumeration was requested beyond its configured cap."""
