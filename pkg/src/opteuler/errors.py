"""Exception types shared across the package."""


class OptEulerError(Exception):
    """Base class for all package errors."""


class FrameError(OptEulerError, ValueError):
    """Raised when two axes do not define a frame (h = +-g or zero length)."""


class NumericError(OptEulerError, ValueError):
    """Raised when an inverse-trig argument leaves [-1, 1] beyond roundoff."""


class DomainError(NumericError):
    """Raised when a two-step subroutine is asked for an unreachable move."""


class DegenerateGate(OptEulerError):
    """Raised for operations that need a well defined rotation axis."""
