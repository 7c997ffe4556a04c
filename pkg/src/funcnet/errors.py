"""Exception hierarchy shared across the package.

ValidationError and its subclasses map to CLI exit code 1 (bad input);
every other FuncnetError maps to exit code 2 (runtime failure).
"""


class FuncnetError(Exception):
    """Base class for all funcnet errors."""


class ValidationError(FuncnetError):
    """Invalid arguments, configuration, or violated preconditions."""


class FormatError(ValidationError):
    """A file failed to parse; carries the byte offset of the problem."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class SchemaError(ValidationError):
    """A file parsed but its contents violate the artifact schema."""


class DensityError(ValidationError):
    """Requested network density outside the attainable range."""


class InsufficientDataError(ValidationError):
    """Too few samples for the requested statistic."""


class CorruptionError(FuncnetError):
    """Stored artifact failed its integrity check."""


class DependencyError(FuncnetError):
    """A pipeline stage is missing an upstream artifact."""


class DivergenceError(FuncnetError):
    """Training produced a non-finite loss."""


class DisconnectedGraphError(FuncnetError):
    """Metric undefined on a disconnected graph."""


class DegenerateNullError(FuncnetError):
    """Null-model statistics make the small-world ratio undefined."""


class TriangleBudgetError(FuncnetError):
    """Flag-complex construction would exceed the triangle budget."""
