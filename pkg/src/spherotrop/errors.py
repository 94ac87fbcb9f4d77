"""Exception hierarchy shared by all modules."""


class SpherotropError(Exception):
    """Base class; the CLI maps subclasses to exit codes."""


class InputError(SpherotropError, ValueError):
    pass


class PrecisionLoss(SpherotropError, ArithmeticError):
    """A quantity is zero up to truncation, so its order is unknown.

    ``bound`` is the truncation: the true order is at least ``bound``.
    """

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class DivisionByZero(SpherotropError, ZeroDivisionError):
    pass


class ZeroPolynomial(InputError):
    pass


class ConstantPolynomial(InputError):
    pass


class OrderNotWellFounded(InputError):
    """Division/Buchberger would not terminate for this order and input."""


class DimensionTooLarge(InputError):
    pass


class CurveNotOnVariety(InputError):
    pass


class RankMismatch(InputError):
    pass


class InvalidPoint(InputError):
    pass


class UnsupportedHypersurface(InputError):
    pass


class DegeneratePoint(InputError):
    pass


class NoConvergence(SpherotropError, RuntimeError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NonGenericWarning(UserWarning):
    """Sampled group elements did not stabilise the running minimum."""


class SingularMatrix(InputError):
    """Determinant is exactly zero, so invariant factors are undefined."""
