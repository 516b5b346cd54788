"""Floating-point special functions for the numeric checks.

Everything here works on numpy arrays of nodes. Exact values enter through
``ExactScalar.to_complex``.
"""
from typing import Iterable, Union

import numpy as np
from scipy.special import gammaln, loggamma

from src.askey.exact import ExactScalar


ArrayLike = Union[float, complex, np.ndarray]


def as_complex(value: Union[ExactScalar, complex, float]) -> complex:
    if isinstance(value, ExactScalar):
        return value.to_complex()
    return complex(value)


def qpoch_inf(a: ArrayLike, q: float, truncation: int) -> np.ndarray:
    """Truncated ``(a;q)_infinity``, the first ``truncation`` factors."""
    a = np.asarray(a, dtype=complex)
    powers = q ** np.arange(truncation, dtype=float)
    return np.prod(1.0 - a[..., None] * powers, axis=-1)


def qpoch_inf_many(values: Iterable[ArrayLike], q: float, truncation: int) -> np.ndarray:
    """``(a_1, ..., a_r; q)_infinity`` truncated like ``qpoch_inf``."""
    result = np.asarray(1.0 + 0j)
    for value in values:
        result = result * qpoch_inf(value, q, truncation)
    return result


def qpoch(a: ArrayLike, q: float, n: int) -> np.ndarray:
    """Finite ``(a;q)_n`` in floating point."""
    return qpoch_inf(a, q, n) if n > 0 else np.ones_like(np.asarray(a, dtype=complex))


def gamma_complex(z: ArrayLike) -> np.ndarray:
    """Gamma function at complex arguments via the principal log-gamma."""
    return np.exp(loggamma(np.asarray(z, dtype=complex)))


def gamma_abs2(z: ArrayLike) -> np.ndarray:
    """``|Gamma(z)|^2``."""
    return np.exp(2.0 * np.real(loggamma(np.asarray(z, dtype=complex))))


def log_gamma_real(x: ArrayLike) -> np.ndarray:
    return gammaln(np.asarray(x, dtype=float))


def gamma_real(x: float) -> float:
    """Gamma of a real argument, signed."""
    return float(np.real(gamma_complex(complex(x))))
