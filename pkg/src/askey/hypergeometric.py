"""Terminating (basic) hypergeometric sums with exact term ratios.

The sums are accumulated term by term: ``term_{k+1} = term_k * ratio(k) * factor(k)``
where ``ratio`` carries the parameter part of the term ratio and ``factor`` the
part that depends on the representation variable.
"""
from typing import Callable, Sequence, Union

from src.askey.exact import ONE, ExactScalar, Number, as_scalar
from src.askey.laurent import LaurentPoly, Variable


Factor = Union[LaurentPoly, Callable[[int], LaurentPoly]]


def terminating_series(var: Variable, n: int, ratio: Callable[[int], ExactScalar],
                       factor: Factor) -> LaurentPoly:
    """Sum ``k = 0..n`` of a series whose first term is 1.

    Args:
        var: Variable of the result
        n: Degree, the series stops after the k = n term
        ratio: Scalar part of term_{k+1}/term_k
        factor: Polynomial part of term_{k+1}/term_k, fixed or depending on k

    Returns:
        The finite sum
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    term = LaurentPoly.constant(var, 1)
    total = term
    for k in range(n):
        poly = factor(k) if callable(factor) else factor
        term = term * poly * ratio(k)
        if term.is_zero():
            break
        total = total + term
    return total


def hyper_ratio(n: int, upper: Sequence[Number], lower: Sequence[Number],
                argument: Number = 1) -> Callable[[int], ExactScalar]:
    """Scalar term ratio of ``F(-n, upper...; lower... | argument)``.

    Numerator parameters that depend on the variable belong to the factor,
    not to ``upper``.
    """
    upper = [as_scalar(u) for u in upper]
    lower = [as_scalar(v) for v in lower]
    argument = as_scalar(argument)

    def ratio(k: int) -> ExactScalar:
        num = ExactScalar(k - n)
        for u in upper:
            num = num * (u + k)
        den = ExactScalar(k + 1)
        for v in lower:
            den = den * (v + k)
        return num / den * argument

    return ratio


def basic_ratio(n: int, upper: Sequence[Number], lower: Sequence[Number], q: Number,
                argument: Number) -> Callable[[int], ExactScalar]:
    """Scalar term ratio of ``phi(q^-n, upper...; lower... | q, argument)``.

    Only balanced-length series (one more numerator than denominator
    parameter, counting the variable ones) are supported, so no extra
    ``(-1)^k q^(k(k-1)/2)`` factor appears. A lower parameter 0 is allowed.
    """
    upper = [as_scalar(u) for u in upper]
    lower = [as_scalar(v) for v in lower]
    q = as_scalar(q)
    argument = as_scalar(argument)

    def ratio(k: int) -> ExactScalar:
        qk = q ** k
        num = ONE - q ** (k - n)
        for u in upper:
            num = num * (ONE - u * qk)
        den = ONE - qk * q
        for v in lower:
            den = den * (ONE - v * qk)
        return num / den * argument

    return ratio


def linear_factor(var: Variable, a: Number, slope: Number) -> Callable[[int], LaurentPoly]:
    """``k -> (a + k) + slope*u``, the variable part of ``(a + slope*u)_k``."""
    a, slope = as_scalar(a), as_scalar(slope)
    return lambda k: LaurentPoly(var, {0: a + k, 1: slope})


def quadratic_factor(var: Variable, a: Number) -> Callable[[int], LaurentPoly]:
    """``k -> (a + k)^2 + x^2``, the variable part of ``(a + ix)_k (a - ix)_k``."""
    a = as_scalar(a)
    return lambda k: LaurentPoly(var, {0: (a + k) * (a + k), 2: 1})


def z_pair_factor(c_plus: Number, c_minus: Number, q: Number) -> Callable[[int], LaurentPoly]:
    """``k -> (1 - c_plus q^k z)(1 - c_minus q^k / z)``."""
    c_plus, c_minus, q = as_scalar(c_plus), as_scalar(c_minus), as_scalar(q)

    def factor(k: int) -> LaurentPoly:
        qk = q ** k
        return LaurentPoly(Variable.Z, {1: -c_plus * qk, 0: ONE + c_plus * c_minus * qk * qk, -1: -c_minus * qk})

    return factor
