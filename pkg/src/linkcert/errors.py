"""Exception hierarchy shared by every linkcert module."""


class LinkcertError(Exception):
    """Base class for all library errors."""


class BadPrime(LinkcertError, ValueError):
    """The degree parameter is not an admissible odd prime."""


class InvalidParameter(LinkcertError, ValueError):
    """An algebra or field parameter violates its invariants."""


class NegativeValue(LinkcertError, ValueError):
    """A residue was requested for an element of negative value."""


class DimensionMismatch(LinkcertError, ValueError):
    """Vectors or matrices of incompatible shapes were combined."""


class SpecMismatch(LinkcertError, ValueError):
    """Elements of two different algebras were combined."""


class NotInBaseField(LinkcertError, ArithmeticError):
    """A trace or norm failed to land in the centre (an arithmetic bug)."""


class NotCertified(LinkcertError):
    """An operation needs a certificate that is missing or failed."""


class UnsupportedVariant(LinkcertError, ValueError):
    """The operation is only defined for the other algebra presentation."""


class NotExactDivision(LinkcertError, ArithmeticError):
    """A polynomial division that was required to be exact left a remainder."""


class ExpressionError(LinkcertError, ValueError):
    """Malformed or out-of-scope input expression.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
