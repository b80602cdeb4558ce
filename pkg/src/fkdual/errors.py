"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by fkdual."""


class InvalidInputError(AlgebraError, ValueError):
    """Malformed arguments: unknown generators, bad indices, singular maps."""


class InconsistentError(AlgebraError):
    """A relation reduced to a nonzero scalar, so the quotient is zero."""


class TruncationError(AlgebraError):
    """A query needs degrees above the completion cap of a reduction system."""


class ParseError(InvalidInputError):
    """Syntax error in presentation text, carrying a line/column position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(message + where)


class ResourceError(AlgebraError):
    """A computation was refused because it would exceed a configured bound."""
