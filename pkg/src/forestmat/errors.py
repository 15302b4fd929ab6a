"""Exception types shared across the package."""


class ForestMatError(Exception):
    """Base class for all package errors."""


class ValidationError(ForestMatError, ValueError):
    """An argument fails an operation's precondition."""


class InvalidSizeError(ValidationError):
    """A graph family or formula was asked for an unsupported vertex count."""


class DomainError(ValidationError):
    """A sequence index is outside the supported domain."""


class GraphFormatError(ValidationError):
    """A graph description is malformed (bad edge, bad label, bad JSON)."""


class ConstraintError(ValidationError):
    """A forest constraint refers to a vertex that does not exist."""


class EnumerationLimitError(ForestMatError, RuntimeError):
    """Brute-force enumeration was requested on a graph above the edge cap."""
