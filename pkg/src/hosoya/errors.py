"""Exception types shared across the package."""


class HosoyaError(Exception):
    """Base class for errors raised by this package."""


class CoordinateError(HosoyaError, ValueError):
    """A point lies outside the triangle (requires ``0 <= k <= r``)."""


class DomainError(HosoyaError, ValueError):
    """Identity parameters violate the identity's validity domain."""

    def __init__(self, identity: str, constraint: str, params=None):
        self.identity = identity
        self.constraint = constraint
        self.params = dict(params or {})
        super().__init__(f"{identity}: parameters violate '{constraint}'")


class OracleInconsistency(HosoyaError, RuntimeError):
    """The two defining recursions disagreed while building the oracle table."""
