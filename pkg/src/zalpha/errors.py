"""Exception types raised by the Z[alpha] kernel."""


class ZAlphaError(Exception):
    """Base class for every error raised by this package."""


class FieldError(ZAlphaError, ValueError):
    """Invalid field description."""


class NotMonic(FieldError):
    pass


class NotSquarefree(FieldError):
    pass


class IntervalNotIsolating(FieldError):
    pass


class FieldMismatch(ZAlphaError, TypeError):
    """Operands live in different fields."""


class DivisionByZero(ZAlphaError, ZeroDivisionError):
    pass


class ZeroDivisor(ZAlphaError, ArithmeticError):
    """The defining polynomial is reducible and the element is not a unit of Q[x]/(f)."""


class InexactDivision(ZAlphaError, ArithmeticError):
    """An exact division left a remainder; this means a caller invariant is broken."""


class NotSquare(ZAlphaError, ValueError):
    pass


class DependentBasis(ZAlphaError, ValueError):
    pass
