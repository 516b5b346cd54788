"""Laurent polynomials and rational functions over Gaussian rationals.

A Laurent polynomial is stored as a ``{exponent: coefficient}`` dictionary with
no zero entries. The variable tag tells how the polynomial is read:

* ``X``: the coordinate ``x`` of classes (i)/(ii), ordinary polynomials;
* ``Z``: ``z = e^{ix}`` of classes (iii)/(iv), genuine Laurent polynomials;
* ``ETA``: the sinusoidal coordinate itself (oQM families).
"""
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, List, Tuple, Union

from src.askey.errors import (
    ExactDivisionByZero,
    NegativeExponentError,
    NotDivisibleError,
    VariableMismatchError,
    ZeroScaleError,
)
from src.askey.exact import ONE, ZERO, ExactScalar, Number, as_scalar


class Variable(str, Enum):
    """Representation variable of a polynomial."""
    X = "x"
    Z = "z"
    ETA = "eta"


_SCALAR_TYPES = (ExactScalar, int, Fraction)


class LaurentPoly:
    """Finite map from integer exponents to ExactScalar in one variable.

    Attributes:
        var: Variable tag
    """

    __slots__ = ("var", "_coeffs")

    def __init__(self, var: Variable, coeffs: Dict[int, Number] = None) -> None:
        self.var = Variable(var)
        cleaned: Dict[int, ExactScalar] = {}
        if coeffs:
            for exponent, value in coeffs.items():
                value = as_scalar(value)
                if value:
                    cleaned[int(exponent)] = value
        self._coeffs = cleaned

    @classmethod
    def _raw(cls, var: Variable, coeffs: Dict[int, ExactScalar]) -> "LaurentPoly":
        # caller guarantees canonical form
        poly = cls.__new__(cls)
        poly.var = var
        poly._coeffs = coeffs
        return poly

    @classmethod
    def zero(cls, var: Variable) -> "LaurentPoly":
        return cls._raw(Variable(var), {})

    @classmethod
    def constant(cls, var: Variable, value: Number) -> "LaurentPoly":
        return cls(var, {0: value})

    @classmethod
    def monomial(cls, var: Variable, exponent: int, value: Number = 1) -> "LaurentPoly":
        return cls(var, {exponent: value})

    @classmethod
    def from_list(cls, var: Variable, values: Iterable[Number], start: int = 0) -> "LaurentPoly":
        """Build from coefficients listed by increasing exponent from ``start``."""
        return cls(var, {start + k: v for k, v in enumerate(values)})

    @property
    def coeffs(self) -> Dict[int, ExactScalar]:
        """Copy of the coefficient map."""
        return dict(self._coeffs)

    def items(self) -> Iterator[Tuple[int, ExactScalar]]:
        return iter(sorted(self._coeffs.items()))

    def coefficient(self, exponent: int) -> ExactScalar:
        return self._coeffs.get(exponent, ZERO)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return not self._coeffs or set(self._coeffs) == {0}

    def degree(self) -> int:
        """Highest exponent; raises ValueError on the zero polynomial."""
        if not self._coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self._coeffs)

    def valuation(self) -> int:
        """Lowest exponent; raises ValueError on the zero polynomial."""
        if not self._coeffs:
            raise ValueError("valuation of the zero polynomial is undefined")
        return min(self._coeffs)

    def leading_coefficient(self) -> ExactScalar:
        return self._coeffs[self.degree()]

    def _check_var(self, other: "LaurentPoly") -> None:
        if other.var is not self.var:
            raise VariableMismatchError(f"cannot combine polynomials in {self.var.value} and {other.var.value}")

    def __add__(self, other: Union["LaurentPoly", Number]) -> "LaurentPoly":
        if isinstance(other, _SCALAR_TYPES):
            other = LaurentPoly.constant(self.var, other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_var(other)
        result = dict(self._coeffs)
        for exponent, value in other._coeffs.items():
            total = result.get(exponent, ZERO) + value
            if total:
                result[exponent] = total
            else:
                result.pop(exponent, None)
        return LaurentPoly._raw(self.var, result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.var, {e: -v for e, v in self._coeffs.items()})

    def __sub__(self, other: Union["LaurentPoly", Number]) -> "LaurentPoly":
        if isinstance(other, _SCALAR_TYPES):
            other = LaurentPoly.constant(self.var, other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "LaurentPoly":
        if isinstance(other, _SCALAR_TYPES):
            return LaurentPoly.constant(self.var, other) - self
        return NotImplemented

    def __mul__(self, other: Union["LaurentPoly", Number]) -> "LaurentPoly":
        if isinstance(other, _SCALAR_TYPES):
            factor = as_scalar(other)
            if not factor:
                return LaurentPoly.zero(self.var)
            return LaurentPoly._raw(self.var, {e: v * factor for e, v in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_var(other)
        result: Dict[int, ExactScalar] = {}
        for e1, v1 in self._coeffs.items():
            for e2, v2 in other._coeffs.items():
                exponent = e1 + e2
                result[exponent] = result.get(exponent, ZERO) + v1 * v2
        return LaurentPoly._raw(self.var, {e: v for e, v in result.items() if v})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if len(self._coeffs) != 1:
                raise NotDivisibleError("only monomials have negative powers")
            (e, v), = self._coeffs.items()
            return LaurentPoly._raw(self.var, {e * exponent: v ** exponent})
        result = LaurentPoly.constant(self.var, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.var is other.var and self._coeffs == other._coeffs
        if isinstance(other, _SCALAR_TYPES):
            return self == LaurentPoly.constant(self.var, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.var.value}: {self})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for exponent, value in sorted(self._coeffs.items(), reverse=True):
            if exponent == 0:
                terms.append(f"({value})")
            elif exponent == 1:
                terms.append(f"({value})*{self.var.value}")
            else:
                terms.append(f"({value})*{self.var.value}^{exponent}")
        return " + ".join(terms)

    def map_coefficients(self, fn) -> "LaurentPoly":
        return LaurentPoly(self.var, {e: fn(v) for e, v in self._coeffs.items()})

    def evaluate(self, point: Number) -> ExactScalar:
        """Exact value at ``point`` (nonzero when negative powers are present)."""
        point = as_scalar(point)
        total = ZERO
        for exponent, value in self._coeffs.items():
            total = total + value * point ** exponent
        return total

    def derivative(self) -> "LaurentPoly":
        """Formal derivative with respect to the variable."""
        return LaurentPoly(self.var, {e - 1: v * e for e, v in self._coeffs.items() if e})

    def substitute_scale(self, c: Number) -> "LaurentPoly":
        return substitute_scale(self, c)

    def substitute_shift(self, c: Number) -> "LaurentPoly":
        return substitute_shift(self, c)

    def star_conjugate(self) -> "LaurentPoly":
        return star_conjugate(self)


def laurent_arith(p: LaurentPoly, r: LaurentPoly, op: str) -> LaurentPoly:
    """Ring operation ``add``, ``sub`` or ``mul`` on two polynomials."""
    if op == "add":
        return p + r
    if op == "sub":
        return p - r
    if op == "mul":
        return p * r
    raise ValueError(f"Unsupported polynomial operation: {op}")


def substitute_scale(p: LaurentPoly, c: Number) -> LaurentPoly:
    """Return ``p(c*u)``: the coefficient of ``u^k`` is multiplied by ``c^k``.

    Raises:
        ZeroScaleError: If ``c`` is zero
    """
    c = as_scalar(c)
    if not c:
        raise ZeroScaleError("scale factor must be nonzero")
    if c == ONE:
        return p
    return LaurentPoly._raw(p.var, {e: v * c ** e for e, v in p._coeffs.items()})


def substitute_shift(p: LaurentPoly, c: Number) -> LaurentPoly:
    """Return ``p(u + c)`` by binomial re-expansion.

    Raises:
        NegativeExponentError: If ``p`` has negative exponents
    """
    c = as_scalar(c)
    if p.is_zero() or not c:
        return p
    if p.valuation() < 0:
        raise NegativeExponentError("translation is only defined for ordinary polynomials")
    top = p.degree()
    powers: List[ExactScalar] = [ONE]
    for _ in range(top):
        powers.append(powers[-1] * c)
    result: Dict[int, ExactScalar] = {}
    for k, value in p._coeffs.items():
        for j in range(k + 1):
            result[j] = result.get(j, ZERO) + value * comb(k, j) * powers[k - j]
    return LaurentPoly(p.var, result)


def star_conjugate(p: LaurentPoly) -> LaurentPoly:
    """Coefficient conjugation of the underlying power series in ``x``.

    For ``X``/``ETA`` the coefficients are conjugated. For ``Z`` the exponents
    are negated as well, since conjugating the x-series of ``g(e^{ix})`` gives
    ``conj(g)(e^{-ix})``.
    """
    if p.var is Variable.Z:
        return LaurentPoly._raw(p.var, {-e: v.conj() for e, v in p._coeffs.items()})
    return LaurentPoly._raw(p.var, {e: v.conj() for e, v in p._coeffs.items()})


def exact_divide(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Quotient ``q`` with ``q*d == p`` exactly.

    Raises:
        ExactDivisionByZero: If ``d`` is the zero polynomial
        NotDivisibleError: If no Laurent polynomial quotient exists
    """
    p._check_var(d)
    if d.is_zero():
        raise ExactDivisionByZero("division by the zero polynomial")
    if p.is_zero():
        return p
    d_top, d_bottom = d.degree(), d.valuation()
    lead = d._coeffs[d_top]
    hi = p.degree() - d_top
    lo = p.valuation() - d_bottom
    if hi < lo:
        raise NotDivisibleError(f"{d} does not divide {p}")

    remainder = dict(p._coeffs)
    quotient: Dict[int, ExactScalar] = {}
    for exponent in range(hi, lo - 1, -1):
        value = remainder.get(exponent + d_top)
        if not value:
            continue
        factor = value / lead
        quotient[exponent] = factor
        for e, v in d._coeffs.items():
            key = exponent + e
            updated = remainder.get(key, ZERO) - factor * v
            if updated:
                remainder[key] = updated
            else:
                remainder.pop(key, None)
    if remainder:
        raise NotDivisibleError(f"{d} does not divide {p}; remainder {LaurentPoly(p.var, remainder)}")
    return LaurentPoly._raw(p.var, quotient)


def product(factors: Iterable[LaurentPoly], var: Variable) -> LaurentPoly:
    """Product of an iterable of polynomials (1 for an empty iterable)."""
    result = LaurentPoly.constant(var, 1)
    for factor in factors:
        result = result * factor
    return result


class RationalFn:
    """Quotient of two Laurent polynomials.

    The denominator is normalized to leading coefficient 1 and valuation 0 by
    moving monomial content into the numerator. No gcd reduction is attempted;
    equality is decided by cross-multiplication.

    Attributes:
        num: Numerator
        den: Denominator, never zero
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = None) -> None:
        if den is None:
            den = LaurentPoly.constant(num.var, 1)
        num._check_var(den)
        if den.is_zero():
            raise ExactDivisionByZero("rational function with zero denominator")
        lead = den.leading_coefficient()
        shift = den.valuation()
        if shift or lead != ONE:
            monomial = LaurentPoly.monomial(den.var, -shift, ONE / lead)
            num, den = num * monomial, den * monomial
        self.num = num
        self.den = den

    @property
    def var(self) -> Variable:
        return self.num.var

    @staticmethod
    def _lift(value: Union["RationalFn", LaurentPoly, Number], var: Variable) -> "RationalFn":
        if isinstance(value, RationalFn):
            return value
        if isinstance(value, LaurentPoly):
            return RationalFn(value)
        return RationalFn(LaurentPoly.constant(var, value))

    def __add__(self, other) -> "RationalFn":
        other = self._lift(other, self.var)
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other) -> "RationalFn":
        return self + (-self._lift(other, self.var))

    def __rsub__(self, other) -> "RationalFn":
        return self._lift(other, self.var) - self

    def __mul__(self, other) -> "RationalFn":
        other = self._lift(other, self.var)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        other = self._lift(other, self.var)
        return RationalFn(self.num * other.den, self.den * other.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (LaurentPoly, RationalFn) + _SCALAR_TYPES):
            other = self._lift(other, self.var)
            return self.num * other.den == other.num * self.den
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        return f"RationalFn(({self.num}) / ({self.den}))"

    def star_conjugate(self) -> "RationalFn":
        return RationalFn(star_conjugate(self.num), star_conjugate(self.den))

    def substitute_scale(self, c: Number) -> "RationalFn":
        return RationalFn(substitute_scale(self.num, c), substitute_scale(self.den, c))

    def substitute_shift(self, c: Number) -> "RationalFn":
        return RationalFn(substitute_shift(self.num, c), substitute_shift(self.den, c))

    def to_polynomial(self) -> LaurentPoly:
        """Exact polynomial value; raises NotDivisibleError if there is none."""
        return exact_divide(self.num, self.den)
