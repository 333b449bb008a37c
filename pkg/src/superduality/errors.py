"""Exception types shared across the package.

The command line maps DomainError (and subclasses) to exit status 2 and
ResourceGuardError to exit status 3.
"""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class ShapeError(DomainError):
    """Matrix or vector with the wrong shape."""


class ConsistencyError(DomainError):
    """Data violating an internal consistency condition."""


class SequencingError(DomainError):
    """A reflection sequence element that is not simple at its turn."""


class CoordinateError(DomainError):
    """A weight or coroot outside the coordinates an operation understands."""


class UnsupportedError(DomainError):
    """A configuration the library deliberately does not handle."""


class IncompleteTableError(DomainError):
    """A multiplicity table lacks an entry required within the cutoff."""

    def __init__(self, message, weight=None):
        super().__init__(message)
        self.weight = weight


class ResourceGuardError(RuntimeError):
    """A brute-force computation exceeded its configured size limits."""
