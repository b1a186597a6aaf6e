"""Exception hierarchy shared by all fracstab modules.

Two families matter operationally: ``ValidationError`` (bad inputs, caught
before any heavy compute; CLI exit code 3) and ``NumericError`` (the compute
itself failed or cannot reach the requested accuracy; CLI exit code 4).
"""

from __future__ import annotations


class FracstabError(Exception):
    """Base class for all package errors."""


class ValidationError(FracstabError, ValueError):
    """A precondition on the inputs is violated."""


class DomainError(ValidationError):
    """Parameter outside its mathematically supported domain."""


class RangeError(ValidationError):
    """Requested evaluation window not covered by the available data."""


class ExponentError(ValidationError):
    """Hoelder exponents too small for the requested integral to exist."""


class SingularityError(ValidationError):
    """Evaluation exactly on a non-integrable singularity."""


class NumericError(FracstabError, ArithmeticError):
    """Computation failed or a numeric guard tripped."""


class AccuracyError(NumericError):
    """Requested tolerance is unreachable in the configured regime."""


class ConvergenceError(NumericError):
    """An iterative scheme (corrector, Picard) failed to converge."""


class BlowUpError(NumericError):
    """Trajectory left the guarded working range."""
