"""Domain errors shared across the package.

Every error that reflects a violated mathematical precondition derives from
DomainError so the CLI can map them uniformly to exit code 1.
"""


class DomainError(Exception):
    """Base class for precondition violations with a stable code name."""

    @property
    def code(self):
        return type(self).__name__


class NonSymmetric(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class NotPrimitive(DomainError):
    pass


class Singular(DomainError):
    pass


class NotInGroup(DomainError):
    pass


class NotAdmissible(DomainError):
    pass


class NotPositiveDefinite(DomainError):
    pass


class RankTooLarge(DomainError):
    pass


class RankOutOfRange(DomainError):
    pass


class NotUpperHalfPlane(DomainError):
    pass


class InconsistentSeed(DomainError):
    pass


class InconsistentExpansion(DomainError):
    pass


class PrecisionMismatch(DomainError):
    pass


class InsufficientPrecision(DomainError):
    pass
