"""Exception types shared across the package."""


class LsurkitError(Exception):
    """Base class for all package-specific errors."""


class ShapeError(LsurkitError, ValueError):
    """Array dimensions do not match the operation's contract."""


class ContractError(LsurkitError, ValueError):
    """An input violates a precondition (hermiticity, normalization, symmetry)."""


class DomainError(LsurkitError, ValueError):
    """A parameter lies outside its admissible range."""


class ResourceError(LsurkitError, ValueError):
    """A requested computation exceeds a configured size cap."""
