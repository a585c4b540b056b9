"""Exception types shared across the package."""


class CylrevError(Exception):
    """Base class for errors raised by this package."""


class SizeMismatchError(CylrevError, ValueError):
    """Two strings on different cylinder sizes were combined."""


class DomainError(CylrevError, ValueError):
    """An argument lies outside the domain of the operation."""


class PreconditionError(CylrevError, ValueError):
    """A documented precondition of an operation does not hold."""


class CapacityError(CylrevError):
    """A computation exceeds a configured cap (state space or search bound)."""


class TheoremViolation(CylrevError):
    """A computed result contradicts a proven structural statement."""
