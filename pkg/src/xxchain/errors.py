"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class ResourceLimitError(ValueError):
    """A request exceeds a hard size cap (oracle size, determinant order)."""


class InvalidStateError(ValueError):
    """A density matrix violates positivity beyond rounding tolerance."""
