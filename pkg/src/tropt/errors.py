"""Exception hierarchy shared by all tropt modules."""


class TroptError(Exception):
    """Base class for all errors raised by tropt."""


class DomainError(TroptError):
    """A value is outside the carrier of its semifield, or an operation
    (zero inversion, non-regular input, ...) is undefined for its argument."""


class SemifieldMismatchError(TroptError):
    """Operands belong to different semifields."""


class DimensionError(TroptError):
    """Matrix/vector shapes are incompatible for the requested operation."""


class GridGuardError(TroptError):
    """A brute-force grid would exceed the configured size guard."""


class ProblemFileError(TroptError):
    """A problem file failed to parse or validate; the message names the field."""
