"""Exception hierarchy shared by the library and the command line."""


class AgolError(Exception):
    """Base class for every error raised on purpose by this package."""


class DomainError(AgolError, ValueError):
    """An argument is outside the domain of the operation."""


class FieldMismatchError(DomainError):
    """Two surds from different quadratic fields were combined."""


class NotHyperbolicError(DomainError):
    """The matrix (or braid image) has |trace| <= 2."""


class NotSplittableError(DomainError):
    """The requested splitting is not allowed by the current measure."""


class AmbiguousSplitError(NotSplittableError):
    """Both weights are equal, so neither splitting is maximal."""


class UnsupportedError(DomainError):
    """The input has the wrong Nielsen-Thurston type for the operation."""


class BraidParseError(AgolError, ValueError):
    """Malformed braid or L/R word text."""

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class InvariantViolation(AgolError, AssertionError):
    """An internal consistency check failed. This is always a bug."""
