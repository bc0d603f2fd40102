"""Exception types raised by interpfit."""


class InterpfitError(ValueError):
    """Base class for all interpfit errors."""


class SingularMatrix(InterpfitError):
    """A pivot fell below the singularity tolerance during elimination."""


class SingularNormalMatrix(SingularMatrix):
    """The normal matrix X^T X is rank deficient."""


class DuplicateNode(InterpfitError):
    """Two interpolation nodes coincide (within the duplicate tolerance)."""


class IndexOutOfRange(InterpfitError, IndexError):
    pass


class WrongArity(InterpfitError):
    pass


class TooFewPoints(InterpfitError):
    pass


class InvalidOrder(InterpfitError):
    pass


class BadInterval(InterpfitError):
    """Interval endpoints are not strictly increasing."""


class DimensionMismatch(InterpfitError):
    pass


class DegenerateData(InterpfitError):
    """Data cannot determine the model (e.g. all x equal in a line fit)."""


class NonPositiveData(InterpfitError):
    """A logarithm of a non-positive value would be required."""
