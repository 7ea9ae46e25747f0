"""Exception types raised across the package."""


class JacobiInterlaceError(Exception):
    """Base class for all package errors."""


class RegimeError(JacobiInterlaceError, ValueError):
    """Parameters fall outside the range an operation is defined for."""


class DegenerateRecurrence(JacobiInterlaceError, ArithmeticError):
    """A three-term recurrence step divides by zero."""


class WrongRegime(RegimeError):
    """The orthogonal zero finder was called with quasi-orthogonal parameters."""


class BracketFailure(JacobiInterlaceError, RuntimeError):
    """Sign-change bracketing could not isolate every zero."""


class NoRootInBracket(JacobiInterlaceError, ValueError):
    """The polynomial does not change sign on the supplied bracket."""


class TheoremViolation(JacobiInterlaceError, AssertionError):
    """A proven interlacing statement failed numerically.

    The statements are theorems, so this always points at a numerical or
    coding fault rather than at a counterexample.
    """
