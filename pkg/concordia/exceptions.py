class ConcordiaError(Exception):
    """The base class for all errors raised by concordia.

    Each error class carries the exit code that the command-line front-end returns when the error reaches it.
    """

    exit_code = 1


class InvalidGroupError(ConcordiaError, ValueError):
    pass


class InvalidArgumentError(ConcordiaError, ValueError):
    pass


class GroupMismatchError(InvalidArgumentError):
    pass


class InvalidVSequenceError(InvalidArgumentError):
    pass


class InvalidFormError(ConcordiaError, ValueError):
    pass


class EmptyInputError(ConcordiaError, ValueError):
    pass


class UnknownSuiteError(ConcordiaError, ValueError):
    pass


class HypothesisNotMetError(ConcordiaError):
    exit_code = 2


class ResourceLimitError(ConcordiaError):
    exit_code = 3


class KnotExpressionError(ConcordiaError, ValueError):
    """An error in a knot expression, optionally located at a line and column (both starting at 1)."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self):
        if self.line is None:
            return self.message
        return f"{self.message} (line {self.line}, column {self.column})"

    def at(self, line, column):
        """Return a copy of this error located at the given position."""
        return type(self)(self.message, line, column)


class KnotSyntaxError(KnotExpressionError):
    pass


class KnotSemanticError(KnotExpressionError):
    pass


class UnsupportedFeatureError(KnotExpressionError):
    pass


class NotNormalizableError(KnotExpressionError):
    pass
