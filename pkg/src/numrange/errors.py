"""Exception hierarchy shared by the numrange modules."""


class NumRangeError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(NumRangeError, ValueError):
    pass


class NormalizationError(NumRangeError, ValueError):
    pass


class NotHermitianError(NumRangeError, ValueError):
    pass


class ConvergenceError(NumRangeError, ArithmeticError):
    pass


class DegenerateOperatorError(NumRangeError, ValueError):
    """The operator is a complex multiple of a self-adjoint matrix, so the
    polygon construction has no interior."""


class EmptyIntersectionError(NumRangeError, RuntimeError):
    pass


class ZeroOperatorError(NumRangeError, ZeroDivisionError):
    pass


class MatrixFormatError(NumRangeError, ValueError):
    """Malformed matrix file. ``field`` names the offending part of the input."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field
