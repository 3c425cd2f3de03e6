"""Exception hierarchy shared by every module of the package."""


class InterlacingError(ValueError):
    """Base class for all input and contract errors raised here."""


class CoefficientBeyondTruncation(InterlacingError):
    pass


class InvalidParameter(InterlacingError):
    pass


class InvalidSection(InterlacingError):
    pass


class WindowExceedsTruncation(InterlacingError):
    pass


class RangeMismatch(InterlacingError):
    pass


class DimensionMismatch(InterlacingError):
    pass


class NotSquare(InterlacingError):
    pass


class IndexOutOfRange(InterlacingError, IndexError):
    pass


class SizeMismatch(InterlacingError):
    pass


class ZeroPolynomial(InterlacingError):
    pass


class DegenerateFamily(InterlacingError):
    pass


class PreconditionFailed(InterlacingError):
    pass
