"""Error hierarchy for starjoin.

Budget exhaustion is never an exception: solvers report it as a value.
"""


class StarjoinError(Exception):
    """Base class for all starjoin errors."""


class InputError(StarjoinError, ValueError):
    """Unknown vertex, invalid parameter or malformed input file."""


class PreconditionError(InputError):
    """An operation's precondition does not hold (e.g. an isolated vertex)."""


class UnsupportedParameterError(InputError):
    """A parameter outside the range an operation is defined for."""


class ResourceError(StarjoinError):
    """A configured resource cap was exceeded; results would be truncated."""

    def __init__(self, message: str, cap: int, requested: int | None = None):
        super().__init__(message)
        self.cap = cap
        self.requested = requested
