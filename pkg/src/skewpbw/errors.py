"""Exception hierarchy shared by every module of the package."""


class SpbwError(Exception):
    """Base class for all errors raised by skewpbw."""


class BaseSpecError(SpbwError, ValueError):
    """An invalid base-ring specification (duplicate names, bad modulus, ...)."""


class RingMismatchError(SpbwError, ValueError):
    """Operands live over different rings or presentations."""


class MapError(SpbwError, ValueError):
    """An endomorphism or sigma-derivation does not respect the base ideal."""


class ValidationError(SpbwError):
    """A presentation failed validation and cannot be used for arithmetic."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ParseError(SpbwError, ValueError):
    """Malformed presentation file or expression."""


class PreconditionError(SpbwError):
    """An operation was called outside the hypotheses it needs."""


class InconclusiveError(SpbwError):
    """Window bounds are too small to decide the question asked."""
