"""Floating-point checks: weight ratios, orthogonality and truncation convergence.

Exact polynomials are converted to complex coefficients once per check and
evaluated on composite Gauss-Legendre nodes; weights are the only objects
that are float from the start.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence

import numpy as np

from src.askey.catalog import build_Pn, expansion_shift, shift_binding, shift_slot
from src.askey.christoffel import raw_phi
from src.askey.errors import NotPhysicalError, QuadratureNonConvergenceError
from src.askey.families.askey_wilson import ASKEY_WILSON, AW_NAMES, single_shift_phi
from src.askey.laurent import LaurentPoly, Variable
from src.askey.models import FamilyDescriptor, NumericConfig, ParamBinding, VerificationOutcome


logger = logging.getLogger(__name__)

# eta(x) for the oQM coordinates
ETA_COORDINATES: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "x": lambda x: x,
    "x^2": lambda x: x * x,
    "cos 2x": lambda x: np.cos(2 * x),
    "e^x": np.exp,
    "sinh x": np.sinh,
}

SAMPLE_FRACTIONS = (0.35, 0.425, 0.5, 0.575, 0.65)
MAX_REFINEMENTS = 4
GRAM_MAX_DEGREE = 5
CONVERGENCE_SLACK = 1e-6
CONVERGENCE_FLOOR = 1e-14


@dataclass
class QuadratureResult:
    """Value of a (possibly matrix-valued) integral.

    Attributes:
        value: Integral
        achieved: Largest change between the last two refinements, relative to the result
        panels: Panels used for the accepted value
    """
    value: np.ndarray
    achieved: float
    panels: int


def composite_gauss_legendre(lo: float, hi: float, panels: int, points: int):
    """Nodes and weights of the composite Gauss-Legendre rule on [lo, hi]."""
    t, w = np.polynomial.legendre.leggauss(points)
    edges = np.linspace(lo, hi, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * t[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def integrate(fn: Callable[[np.ndarray], np.ndarray], lo: float, hi: float, config: NumericConfig,
              tol: Optional[float] = None) -> QuadratureResult:
    """Integrate ``fn`` (values along the last axis) by panel doubling.

    Raises:
        QuadratureNonConvergenceError: If successive refinements keep differing by more than ``tol``
    """
    tol = config.tol_rel if tol is None else tol
    panels = config.panels
    nodes, weights = composite_gauss_legendre(lo, hi, panels, config.quad_points)
    previous = fn(nodes) @ weights
    achieved = np.inf
    for _ in range(MAX_REFINEMENTS):
        panels *= 2
        nodes, weights = composite_gauss_legendre(lo, hi, panels, config.quad_points)
        current = fn(nodes) @ weights
        scale = max(float(np.max(np.abs(current))), np.finfo(float).tiny)
        achieved = float(np.max(np.abs(current - previous))) / scale
        if achieved <= tol:
            return QuadratureResult(current, achieved, panels)
        previous = current
    raise QuadratureNonConvergenceError(
        f"quadrature on ({lo}, {hi}) reached relative change {achieved:.3e} > {tol:.1e} with {panels} panels")


def poly_values(family: FamilyDescriptor, binding: ParamBinding, poly: LaurentPoly, x: np.ndarray,
                config: Optional[NumericConfig] = None) -> np.ndarray:
    """Values of a representation polynomial at real coordinates ``x``.

    X-polynomials are evaluated at x, Z-polynomials at ``e^{ix}`` and
    eta-polynomials at ``eta(x)`` of the family's coordinate.
    """
    dtype = np.clongdouble if config is not None and config.precision == "extended" else complex
    x = np.asarray(x, dtype=float)
    if poly.var is Variable.X:
        point = x.astype(dtype)
    elif poly.var is Variable.Z:
        point = np.exp(1j * x).astype(dtype)
    else:
        point = np.asarray(ETA_COORDINATES[family.coordinate](x)).astype(dtype)
    result = np.zeros_like(point)
    for exponent, value in poly.items():
        result = result + np.asarray(value.to_complex(), dtype=dtype) * point ** exponent
    return result.astype(complex)


def sample_points(family: FamilyDescriptor, binding: ParamBinding) -> np.ndarray:
    lo, hi = family.interval(binding)
    return np.array([lo + (hi - lo) * f for f in SAMPLE_FRACTIONS])


def _require_physical(family: FamilyDescriptor, binding: ParamBinding) -> None:
    if family.physical is not None and not family.physical(binding):
        raise NotPhysicalError(f"{family.tag} binding {binding.digest()} is not physical")


def _unit_ratio_residual(ratio: np.ndarray) -> float:
    """Largest deviation of ``ratio`` from 1, i.e. ``|w' / w - Phi| / |Phi|``."""
    return float(np.max(np.abs(ratio - 1.0)))


def weight_ratio_residual(family: FamilyDescriptor, binding: ParamBinding, x: np.ndarray,
                          truncation: int, config: Optional[NumericConfig] = None) -> float:
    """Relative deviation of ``w(shifted)/w`` from the Christoffel factor over ``x``."""
    shifted = shift_binding(family, binding, expansion_shift(family))
    phi = np.real(poly_values(family, binding, raw_phi(family, binding), x, config))
    ratio = family.weight(shifted, x, truncation) / (family.weight(binding, x, truncation) * phi)
    return _unit_ratio_residual(np.asarray(ratio, dtype=float))


def weight_ratio_check(family: FamilyDescriptor, binding: ParamBinding, config: NumericConfig,
                       x_samples: Optional[Sequence[float]] = None) -> VerificationOutcome:
    """The shifted weight equals the Christoffel factor times the weight.

    Raises:
        NotPhysicalError: If the binding is outside the physical range
    """
    _require_physical(family, binding)
    x = sample_points(family, binding) if x_samples is None else np.asarray(x_samples, dtype=float)
    residual = weight_ratio_residual(family, binding, x, config.qpoch_truncation, config)
    passed = residual <= config.tol_rel
    logger.debug(f"{family.tag}: weight ratio residual {residual:.3e}")
    return VerificationOutcome(passed, None if passed else f"{residual:.3e}", "weight ratio")


def gram_matrix(family: FamilyDescriptor, binding: ParamBinding, weight: Callable[[np.ndarray], np.ndarray],
                size: int, config: NumericConfig) -> QuadratureResult:
    """``G_nm = integral of weight * P_n * conj(P_m)`` for n, m < size."""
    polys = [build_Pn(family, binding, n) for n in range(size)]
    lo, hi = family.interval(binding)

    def integrand(x: np.ndarray) -> np.ndarray:
        values = np.array([poly_values(family, binding, p, x, config) for p in polys])
        return np.einsum("nk,mk->nmk", values, np.conj(values)) * weight(x)

    return integrate(integrand, lo, hi, config)


def gram_size(family: FamilyDescriptor, binding: ParamBinding, n_max: int) -> int:
    top = min(n_max, GRAM_MAX_DEGREE)
    if family.normalizable_max is not None:
        top = min(top, family.normalizable_max(binding))
    return top + 1


def _gram_outcome(gram: QuadratureResult, norms: Sequence[float], config: NumericConfig,
                  detail: str) -> VerificationOutcome:
    worst = 0.0
    size = len(norms)
    for n in range(size):
        for m in range(size):
            if n == m:
                deviation = abs(gram.value[n, n] - norms[n]) / abs(norms[n])
            else:
                deviation = abs(gram.value[n, m]) / np.sqrt(abs(norms[n] * norms[m]))
            worst = max(worst, float(deviation))
    passed = worst <= config.gram_tol
    text = f"{detail}; quadrature tolerance {gram.achieved:.1e}"
    return VerificationOutcome(passed, None if passed else f"{worst:.3e}", text)


def orthogonality_check(family: FamilyDescriptor, binding: ParamBinding, config: NumericConfig,
                        n: int, m: int) -> VerificationOutcome:
    """One entry of the Gram matrix: ``h_n`` on the diagonal, zero elsewhere.

    Raises:
        NotPhysicalError: If the binding is outside the physical range
        QuadratureNonConvergenceError: If the quadrature does not settle
    """
    _require_physical(family, binding)
    truncation = config.qpoch_truncation
    p_n = build_Pn(family, binding, n)
    p_m = build_Pn(family, binding, m)
    lo, hi = family.interval(binding)

    def integrand(x: np.ndarray) -> np.ndarray:
        values = poly_values(family, binding, p_n, x, config) * np.conj(poly_values(family, binding, p_m, x, config))
        return values * family.weight(binding, x, truncation)

    result = integrate(integrand, lo, hi, config)
    h_n = family.norm(binding, n, truncation)
    if n == m:
        deviation = abs(result.value - h_n) / abs(h_n)
    else:
        deviation = abs(result.value) / np.sqrt(abs(h_n * family.norm(binding, m, truncation)))
    passed = deviation <= config.gram_tol
    detail = f"<P_{n}, P_{m}>; quadrature tolerance {result.achieved:.1e}"
    return VerificationOutcome(passed, None if passed else f"{float(deviation):.3e}", detail)


def gram_check(family: FamilyDescriptor, binding: ParamBinding, config: NumericConfig,
               n_max: int) -> VerificationOutcome:
    """Gram matrix of P_0..P_N is diag(h_n) within ``gram_tol``.

    Raises:
        NotPhysicalError: If the binding is outside the physical range
        QuadratureNonConvergenceError: If the quadrature does not settle
    """
    _require_physical(family, binding)
    size = gram_size(family, binding, n_max)
    truncation = config.qpoch_truncation
    gram = gram_matrix(family, binding, lambda x: family.weight(binding, x, truncation), size, config)
    norms = [family.norm(binding, n, truncation) for n in range(size)]
    return _gram_outcome(gram, norms, config, "orthogonality")


def christoffel_orthogonality_check(family: FamilyDescriptor, binding: ParamBinding, config: NumericConfig,
                                    n_max: int) -> VerificationOutcome:
    """The shifted polynomials are orthogonal for ``Phi * w`` with the shifted norms."""
    _require_physical(family, binding)
    shifted = shift_binding(family, binding, expansion_shift(family))
    size = gram_size(family, shifted, n_max)
    truncation = config.qpoch_truncation
    phi = raw_phi(family, binding)

    def weight(x: np.ndarray) -> np.ndarray:
        return family.weight(binding, x, truncation) * np.real(poly_values(family, binding, phi, x, config))

    polys = [build_Pn(family, shifted, n) for n in range(size)]
    lo, hi = family.interval(binding)

    def integrand(x: np.ndarray) -> np.ndarray:
        values = np.array([poly_values(family, shifted, p, x, config) for p in polys])
        return np.einsum("nk,mk->nmk", values, np.conj(values)) * weight(x)

    gram = integrate(integrand, lo, hi, config)
    norms = [family.norm(shifted, n, truncation) for n in range(size)]
    return _gram_outcome(gram, norms, config, "Christoffel orthogonality")


def truncation_convergence_check(family: FamilyDescriptor, binding: ParamBinding,
                                 config: NumericConfig) -> VerificationOutcome:
    """The weight-ratio residual does not grow when the q-product truncation grows."""
    _require_physical(family, binding)
    x = sample_points(family, binding)
    low = config.qpoch_truncation
    high = 2 * low
    res_low = weight_ratio_residual(family, binding, x, low, config)
    res_high = weight_ratio_residual(family, binding, x, high, config)
    passed = res_high <= res_low * (1 + CONVERGENCE_SLACK) + CONVERGENCE_FLOOR
    detail = f"truncation {low}: {res_low:.3e}, truncation {high}: {res_high:.3e}"
    return VerificationOutcome(passed, None if passed else f"{res_high:.3e}", detail)


def single_shift_weight_check(binding: ParamBinding, j: int, config: NumericConfig) -> VerificationOutcome:
    """Askey-Wilson weight with ``a_j -> q a_j`` over the weight is the single-shift factor."""
    _require_physical(ASKEY_WILSON, binding)
    shifted = shift_slot(ASKEY_WILSON, binding, AW_NAMES[j - 1], 2)
    x = sample_points(ASKEY_WILSON, binding)
    truncation = config.qpoch_truncation
    phi = np.real(poly_values(ASKEY_WILSON, binding, single_shift_phi(binding, j - 1), x, config))
    ratio = ASKEY_WILSON.weight(shifted, x, truncation) / (ASKEY_WILSON.weight(binding, x, truncation) * phi)
    residual = _unit_ratio_residual(np.asarray(ratio, dtype=float))
    passed = residual <= config.tol_rel
    return VerificationOutcome(passed, None if passed else f"{residual:.3e}", f"single-shift weight ratio a{j}")
