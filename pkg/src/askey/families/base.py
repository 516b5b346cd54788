"""Shared building blocks for the family descriptors."""
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from src.askey.exact import HALF, I, ONE, ZERO, ExactScalar, Number, as_scalar
from src.askey.laurent import LaurentPoly, RationalFn, Variable, product
from src.askey.models import ParamBinding, ParamSlot, PhiZero


X = Variable.X
Z = Variable.Z
ETA = Variable.ETA


def additive(name: str, shift: Number, domain: str = "real") -> ParamSlot:
    return ParamSlot(name, Fraction(shift), "additive", Fraction(1), domain)


def q_power(name: str, shift: Number = Fraction(1, 2), q_exponent: Number = 1,
            domain: str = "real") -> ParamSlot:
    return ParamSlot(name, Fraction(shift), "q-power", Fraction(q_exponent), domain)


def values(binding: ParamBinding, *names: str) -> Tuple[ExactScalar, ...]:
    return tuple(binding[name] for name in names)


def elementary_symmetric(items: Sequence[ExactScalar], k: int) -> ExactScalar:
    """``e_k`` of the given values (``e_0 = 1``)."""
    coeffs = [ONE]
    for value in items:
        nxt = coeffs + [ZERO]
        for j in range(len(coeffs), 0, -1):
            nxt[j] = nxt[j] + coeffs[j - 1] * value
        coeffs = nxt
    return coeffs[k] if k < len(coeffs) else ZERO


def pairs(items: Sequence[ExactScalar]) -> List[Tuple[ExactScalar, ExactScalar]]:
    return [(items[j], items[k]) for j in range(len(items)) for k in range(j + 1, len(items))]


def cos_phi(w: ExactScalar) -> ExactScalar:
    return (w + w.conj()) * HALF


def sin_phi(w: ExactScalar) -> ExactScalar:
    return (w - w.conj()) / (I * 2)


def cos_2phi(w: ExactScalar) -> ExactScalar:
    return (w * w + w.conj() * w.conj()) * HALF


def conjugation_closed(items: Sequence[ExactScalar]) -> bool:
    """Whether the multiset ``items`` equals its complex conjugate."""
    remaining = list(items)
    for value in items:
        target = value.conj()
        for pos, other in enumerate(remaining):
            if other == target:
                del remaining[pos]
                break
        else:
            return False
    return True


def closure_errors(binding: ParamBinding, names: Sequence[str]) -> List[str]:
    found = values(binding, *names)
    if conjugation_closed(found):
        return []
    rendered = ", ".join(str(v) for v in found)
    return [f"parameters ({rendered}) must be closed under complex conjugation as a set"]


def q_range_ok(binding: ParamBinding) -> bool:
    s = binding.s
    return s.is_real() and 0 < s.re < 1


# Representation-variable factors

def x_linear(a: Number, sign: int = 1) -> LaurentPoly:
    """``a + sign*i*x``."""
    return LaurentPoly(X, {0: as_scalar(a), 1: I * sign})


def z_linear(c: Number) -> LaurentPoly:
    """``1 - c z``."""
    return LaurentPoly(Z, {0: 1, 1: -as_scalar(c)})


def z_pair(c_plus: Number, c_minus: Number) -> LaurentPoly:
    """``(1 - c_plus z)(1 - c_minus / z)``."""
    c_plus, c_minus = as_scalar(c_plus), as_scalar(c_minus)
    return LaurentPoly(Z, {1: -c_plus, 0: ONE + c_plus * c_minus, -1: -c_minus})


def z_denominator(q: ExactScalar, w: ExactScalar = ONE) -> LaurentPoly:
    """``(1 - w^2 z^2)(1 - q w^2 z^2)``."""
    w2 = w * w
    return LaurentPoly(Z, {0: 1, 2: -w2}) * LaurentPoly(Z, {0: 1, 2: -q * w2})


def z_potential(numerator_zeros: Sequence[ExactScalar], q: ExactScalar, w: ExactScalar = ONE) -> RationalFn:
    """``prod (1 - c z) / ((1 - w^2 z^2)(1 - q w^2 z^2))``."""
    return RationalFn(product((z_linear(c) for c in numerator_zeros), Z), z_denominator(q, w))


def wilson_denominator() -> LaurentPoly:
    """``2ix(2ix + 1)``."""
    return LaurentPoly(X, {1: I * 2, 2: -4})


def z_zero(point: ExactScalar, w: ExactScalar = ONE) -> PhiZero:
    """Zero at ``z = point`` with ``eta = (w z + conj(w)/z)/2``."""
    eta = (w * point + w.conj() / point) * HALF
    return PhiZero(eta=eta, rep_point=point)


def x_zero(point: ExactScalar, squared: bool = False) -> PhiZero:
    return PhiZero(eta=point * point if squared else point, rep_point=point)


# Floating-point helpers for weights

def float_values(binding: ParamBinding, *names: str) -> Tuple[complex, ...]:
    return tuple(binding[name].to_complex() for name in names)


def unit_circle(x: np.ndarray) -> np.ndarray:
    return np.exp(1j * np.asarray(x, dtype=float))


def phase_angle(w: ExactScalar) -> float:
    return float(np.angle(w.to_complex()))
