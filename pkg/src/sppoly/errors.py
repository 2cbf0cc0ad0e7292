"""Exception types raised across the package."""


class SppolyError(Exception):
    """Base class for all errors raised by sppoly."""


class DivisionByZero(SppolyError, ZeroDivisionError):
    """Division of a polynomial by the zero polynomial."""


class NotDivisible(SppolyError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class InvalidHeight(SppolyError, ValueError):
    """Staircase height outside 1 <= h <= ceil((n+1)/2)."""


class InvalidStretch(SppolyError, ValueError):
    """Missing-terms stretch factor below 2."""


class InvalidScale(SppolyError, ValueError):
    """Zero scale passed where an invertible scale is required."""


class PreconditionViolated(SppolyError, ValueError):
    """Arguments outside the stated domain of a cyclotomic identity check."""


class UnverifiedFactorList(SppolyError, ValueError):
    """Factor list does not expand to the polynomial it was paired with."""


class ParseError(SppolyError, ValueError):
    """Malformed polynomial text.

    Carries the byte offset where scanning stopped and a short description
    of what was expected there.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
        self.reason = message


class InternalError(SppolyError, RuntimeError):
    """An internal consistency guarantee failed; always a bug, never user error."""
