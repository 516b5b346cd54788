"""Exception hierarchy for exact construction and verification."""


class AskeyError(Exception):
    """Base exception for polynomial construction and verification errors."""
    pass


class ExactArithmeticError(AskeyError):
    """Raised for misuse of the exact scalar and polynomial kernels."""
    pass


class ExactDivisionByZero(ExactArithmeticError, ZeroDivisionError):
    """Raised when an exact scalar is divided by zero."""
    pass


class VariableMismatchError(ExactArithmeticError):
    """Raised when polynomials in different variables are combined."""
    pass


class ZeroScaleError(ExactArithmeticError):
    """Raised when a Laurent polynomial is rescaled by zero."""
    pass


class NegativeExponentError(ExactArithmeticError):
    """Raised when a translation is applied to a polynomial with negative powers."""
    pass


class NotDivisibleError(ExactArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""
    pass


class NotSquareError(ExactArithmeticError):
    """Raised when a determinant is requested for a non-square matrix."""
    pass


class UnboundParameterError(AskeyError):
    """Raised when a family needs a parameter the binding does not carry."""
    pass


class BindingError(AskeyError):
    """Raised when a parameter binding violates its family's constraints."""
    pass


class ConversionFailureError(AskeyError):
    """Raised when a representation polynomial cannot be written in powers of eta."""
    pass


class NotIdQMError(AskeyError):
    """Raised when a difference-operator quantity is requested for an oQM family."""
    pass


class IndexOutOfRangeError(AskeyError):
    """Raised when a zero index does not exist for the family."""
    pass


class DegreeMismatchError(AskeyError):
    """Raised when the Christoffel factor has the wrong eta-degree or leading term."""
    pass


class ZeroDenominatorError(AskeyError):
    """Raised when a determinant normalization vanishes at a binding."""
    pass


class NonRealParameterError(AskeyError):
    """Raised when a check needs real parameters and the binding has complex ones."""
    pass


class NotPhysicalError(AskeyError):
    """Raised when a binding lies outside the physical parameter range."""
    pass


class QuadratureNonConvergenceError(AskeyError):
    """Raised when composite quadrature does not settle within tolerance."""
    pass


class ConfigError(AskeyError, ValueError):
    """Raised for invalid suite or binding configuration.

    Attributes:
        section: Configuration section the problem was found in, if known
        field: Field name within the section, if known
        line: Line number in the source file, if known
    """

    def __init__(self, message: str, section: str = None, field: str = None, line: int = None):
        location = []
        if section:
            location.append(f"[{section}]")
        if field:
            location.append(f"field '{field}'")
        if line is not None:
            location.append(f"line {line}")
        prefix = " ".join(location)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.section = section
        self.field = field
        self.line = line
