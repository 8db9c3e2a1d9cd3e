"""Exception hierarchy shared by the whole package."""


class MeteredParkingError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MeteredParkingError, ValueError):
    """Malformed input: bad preference list, bad lengths, bad flag values."""


class DomainError(MeteredParkingError, ValueError):
    """Parameters outside the domain on which an operation is defined."""


class BudgetError(MeteredParkingError, RuntimeError):
    """An exhaustive search was refused because it exceeds the step budget."""


class VerificationError(MeteredParkingError, RuntimeError):
    """A formula value disagreed with the brute-force oracle."""


class PrecisionError(MeteredParkingError, ArithmeticError):
    """A floating-point evaluation landed too far from an integer to round."""
