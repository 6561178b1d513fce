"""Exception hierarchy shared by every qcorr module."""


class QcorrError(Exception):
    """Base class for all library errors."""


class DimensionError(QcorrError, ValueError):
    pass


class NumericError(QcorrError, ArithmeticError):
    """An iterative routine failed to converge."""


class NotPSDError(QcorrError, ValueError):
    pass


class DomainError(QcorrError, ValueError):
    """A physical parameter is outside its admissible range."""


class StateError(QcorrError, ValueError):
    """A matrix is not a valid density matrix."""
