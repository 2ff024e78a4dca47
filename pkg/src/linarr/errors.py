"""Exception types shared across the library.

The CLI maps these onto exit codes: ParseError and bad usage exit 1,
InvariantViolation exits 2. Everything here derives from LinarrError so
callers can catch library failures with a single except clause.
"""


class LinarrError(Exception):
    """Base class for every error raised by this package."""


class ParseError(LinarrError, ValueError):
    """Malformed input text.

    Carries the 1-based line and column of the offending token when the
    source location is known.
    """

    def __init__(self, message, line=None, column=None, path=None):
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        super().__init__(str(self))

    def __str__(self):
        prefix = ""
        if self.path is not None:
            prefix += f"{self.path}:"
        if self.line is not None:
            prefix += f"{self.line}:"
            if self.column is not None:
                prefix += f"{self.column}:"
        if prefix:
            return f"{prefix} {self.message}"
        return self.message


class MembershipError(LinarrError, ValueError):
    """A line was required to be in (or absent from) an arrangement and was not."""


class PreconditionError(LinarrError, ValueError):
    """An argument violates a documented precondition (degenerate line, bad field, ...)."""


class InvariantViolation(LinarrError):
    """Internal consistency check failed.

    Raised when two routes to the same quantity disagree, for example a
    combinatorial freeness criterion contradicting the exact decision.
    Always indicates a bug or corrupted data, never bad user input.
    """
