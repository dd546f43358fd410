"""Exception hierarchy shared by every module.

Domain errors (bad input, malformed machine, violated precondition) map to
CLI exit status 1; resource errors map to exit status 2.
"""


class CflError(Exception):
    """Base class for all library errors."""


class InputError(CflError, ValueError):
    """A string contains a symbol outside the declared alphabet."""


class SpecError(CflError, ValueError):
    """A machine description is malformed or cannot be parsed."""


class AlphabetMismatch(CflError, ValueError):
    """Two functions cannot be combined because their alphabets disagree."""


class TerminationError(CflError):
    """Some computation path exceeds the declared linear step budget.

    ``path`` holds the configurations of a violating path prefix, starting at
    the initial configuration.
    """

    def __init__(self, message, path=()):
        super().__init__(message)
        self.path = tuple(path)


class BoundViolation(CflError):
    """A function produced an output longer than its declared bound."""


class PreconditionError(CflError, ValueError):
    """An operation was called outside its documented precondition."""


class ResourceError(CflError):
    """An enumeration exceeded its configured cap."""


class OracleError(CflError):
    """A machine-backed oracle failed while answering a query."""
