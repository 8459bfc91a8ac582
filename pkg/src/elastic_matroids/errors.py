class MatroidError(Exception):
    """Base class for every error raised by the package."""


class DomainError(MatroidError, ValueError):
    """An argument lies outside the ground set or violates a parameter range."""


class ResourceError(MatroidError):
    """The ground set exceeds the configured size guard."""


class PreconditionError(MatroidError):
    """An operation was called on a matroid that does not meet its hypothesis."""


class ConstructionError(MatroidError):
    """A constructor produced (or was given) something that is not a matroid."""


class ConsistencyError(MatroidError):
    """Two independent computations of the same quantity disagreed.

    This signals a bug in the library, never a property of the input.
    """
