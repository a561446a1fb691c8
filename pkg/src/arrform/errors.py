"""Exception hierarchy shared by all modules."""


class ArrformError(Exception):
    """Base class for errors raised by this package."""


class InputError(ArrformError):
    """Malformed or inconsistent user input (files, parameters)."""


class DimensionMismatchError(ArrformError):
    """Operands live in different ambient spaces."""


class PreconditionError(ArrformError):
    """A documented precondition of an operation was violated."""


class UnsupportedOperationError(ArrformError):
    """The operation is not defined for this input (for example wrong ambient dimension)."""


class DegenerateRealizationError(ArrformError):
    """A perspective realization collapsed two hyperplanes."""


class CoincidentLinesError(ArrformError):
    """Two framework edges span the same line."""


class TheoremViolationError(ArrformError):
    """An internal cross-check failed; indicates a bug, not bad input."""
