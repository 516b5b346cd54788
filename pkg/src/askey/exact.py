"""Exact Gaussian-rational scalars, factorial symbols and determinants.

Every identity in the package is checked over Q(i): a number is a pair of
``fractions.Fraction`` values and no operation ever rounds.
"""
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

from src.askey.errors import ExactDivisionByZero, NotSquareError


Number = Union["ExactScalar", int, Fraction]


class ExactScalar:
    """Gaussian rational ``re + im*i`` with arbitrary-precision parts.

    Instances are treated as immutable; every operation returns a new value.

    Attributes:
        re: Real part
        im: Imaginary part
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0) -> None:
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("ExactScalar does not accept floats; pass int, Fraction or str")
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def parse(cls, text: str) -> "ExactScalar":
        """Parse a rational or Gaussian-rational literal.

        Accepted forms are ``"3"``, ``"-1/3"``, ``"0.25"``, ``"i"``, ``"-2/5i"``,
        ``"1/2+1/3i"`` and ``"1/2-i"`` (``"*i"`` is accepted for ``"i"``).

        Args:
            text: Literal to parse

        Returns:
            The exact value

        Raises:
            ValueError: If the text is not a valid literal
        """
        s = text.strip().replace(" ", "").replace("·", "*")
        if not s:
            raise ValueError("empty scalar literal")
        if not s.endswith("i"):
            try:
                return cls(Fraction(s))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"invalid scalar literal '{text}'") from exc

        body = s[:-1]
        if body.endswith("*"):
            body = body[:-1]
        split = -1
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-" and body[pos - 1] not in "eE":
                split = pos
                break
        real_text, imag_text = (body[:split], body[split:]) if split > 0 else ("", body)
        if imag_text in ("", "+"):
            imag = Fraction(1)
        elif imag_text == "-":
            imag = Fraction(-1)
        else:
            try:
                imag = Fraction(imag_text)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"invalid imaginary part in '{text}'") from exc
        try:
            real = Fraction(real_text) if real_text else Fraction(0)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid real part in '{text}'") from exc
        return cls(real, imag)

    def conj(self) -> "ExactScalar":
        """Complex conjugate."""
        return ExactScalar(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def to_complex(self) -> complex:
        """Floating-point view, used only by the numeric checks."""
        return complex(float(self.re), float(self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other: Number) -> "ExactScalar":
        if type(other) is ExactScalar:
            return ExactScalar(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Number) -> "ExactScalar":
        if type(other) is ExactScalar:
            return ExactScalar(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other: Number) -> "ExactScalar":
        if isinstance(other, (int, Fraction)):
            return ExactScalar(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other: Number) -> "ExactScalar":
        if type(other) is ExactScalar:
            if not self.im and not other.im:
                return ExactScalar(self.re * other.re)
            return ExactScalar(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "ExactScalar":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ExactDivisionByZero(f"division of {self} by zero")
            return ExactScalar(self.re / other, self.im / other)
        if type(other) is not ExactScalar:
            return NotImplemented
        if not other.im:
            if not other.re:
                raise ExactDivisionByZero(f"division of {self} by zero")
            return ExactScalar(self.re / other.re, self.im / other.re)
        norm = other.abs2()
        return ExactScalar((self.re * other.re + self.im * other.im) / norm,
                           (self.im * other.re - self.re * other.im) / norm)

    def __rtruediv__(self, other: Number) -> "ExactScalar":
        if isinstance(other, (int, Fraction)):
            return ExactScalar(other) / self
        return NotImplemented

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.re, -self.im)

    def __pos__(self) -> "ExactScalar":
        return self

    def __pow__(self, exponent: int) -> "ExactScalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ONE / (self ** -exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if type(other) is ExactScalar:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"ExactScalar('{self}')"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        imag = "" if abs(self.im) == 1 else str(abs(self.im))
        if not self.re:
            return f"{'-' if self.im < 0 else ''}{imag}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{imag}i"


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)
HALF = ExactScalar(Fraction(1, 2))


def as_scalar(value: Union[Number, str]) -> ExactScalar:
    """Coerce an int, Fraction, literal string or ExactScalar to ExactScalar."""
    if type(value) is ExactScalar:
        return value
    if isinstance(value, str):
        return ExactScalar.parse(value)
    if isinstance(value, (int, Fraction)):
        return ExactScalar(value)
    raise TypeError(f"cannot convert {type(value).__name__} to ExactScalar")


def scalar_arith(a: ExactScalar, b: ExactScalar, op: str) -> ExactScalar:
    """Apply one field operation in Q(i).

    Args:
        a: Left operand
        b: Right operand
        op: One of ``add``, ``sub``, ``mul``, ``div``

    Returns:
        Exact result

    Raises:
        ExactDivisionByZero: If ``op`` is ``div`` and ``b`` is zero
        ValueError: If ``op`` is not supported
    """
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"Unsupported scalar operation: {op}")


def rising_factorial(a: Number, n: int) -> ExactScalar:
    """Pochhammer symbol ``(a)_n = a(a+1)...(a+n-1)``; ``(a)_0 = 1``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    a = as_scalar(a)
    result = ONE
    for k in range(n):
        result = result * (a + k)
    return result


def rising_product(values: Iterable[Number], n: int) -> ExactScalar:
    """Multi-argument Pochhammer ``(a_1, ..., a_r)_n``."""
    result = ONE
    for value in values:
        result = result * rising_factorial(value, n)
    return result


def qpochhammer(a: Union[Number, Sequence[Number]], q: Number, n: int) -> ExactScalar:
    """q-shifted factorial ``(a;q)_n = prod_{k<n} (1 - a q^k)``.

    A sequence for ``a`` gives the multi-argument product
    ``(a_1, ..., a_r; q)_n``.

    Args:
        a: Base value or sequence of base values
        q: The base
        n: Number of factors, non-negative

    Returns:
        Exact product

    Example:
        >>> qpochhammer(Fraction(1, 2), Fraction(1, 2), 2)
        ExactScalar('3/8')
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if isinstance(a, (list, tuple)):
        result = ONE
        for value in a:
            result = result * qpochhammer(value, q, n)
        return result
    a, q = as_scalar(a), as_scalar(q)
    result = ONE
    power = a
    for _ in range(n):
        result = result * (1 - power)
        power = power * q
    return result


def q_binomial(n: int, k: int, q: Number) -> ExactScalar:
    """Gaussian binomial ``(q;q)_n / ((q;q)_k (q;q)_{n-k})``."""
    if k < 0 or k > n:
        return ZERO
    q = as_scalar(q)
    return qpochhammer(q, q, n) / (qpochhammer(q, q, k) * qpochhammer(q, q, n - k))


def pythagorean_unit(m: int, n: int) -> ExactScalar:
    """Unit-modulus Gaussian rational ``((m^2-n^2) + 2mn i)/(m^2+n^2)``.

    Its argument plays the role of an angle phi with exact ``cos`` and ``sin``.

    Raises:
        ValueError: If ``m`` and ``n`` are both zero
    """
    norm = m * m + n * n
    if norm == 0:
        raise ValueError("Pythagorean pair must not be (0, 0)")
    return ExactScalar(Fraction(m * m - n * n, norm), Fraction(2 * m * n, norm))


def det(matrix: Sequence[Sequence[Number]]) -> ExactScalar:
    """Exact determinant by Bareiss fraction-free elimination.

    Args:
        matrix: Square matrix given as a sequence of rows

    Returns:
        The determinant

    Raises:
        NotSquareError: If the matrix is empty or not square
    """
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise NotSquareError(f"determinant needs a non-empty square matrix, got {n} rows")

    m: List[List[ExactScalar]] = [[as_scalar(x) for x in row] for row in matrix]
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    sign = 1
    previous = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / previous
        previous = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]
