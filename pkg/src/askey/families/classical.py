"""Families of ordinary quantum mechanics: Hermite, Laguerre, Jacobi, Bessel, pseudo Jacobi.

Polynomials live directly in the ``eta`` variable and the shift operators are
first-order differential operators built from ``c_1(eta)`` and ``c_2(eta)``.
"""
import math
from fractions import Fraction

import numpy as np

from src.askey.exact import HALF, I, ONE, ExactScalar, rising_factorial
from src.askey.families.base import ETA, additive
from src.askey.hypergeometric import hyper_ratio, terminating_series
from src.askey.laurent import LaurentPoly
from src.askey.models import FamilyDescriptor, PhiZero, make_binding
from src.askey.special import gamma_abs2, gamma_real, log_gamma_real

QUARTER = ExactScalar(Fraction(1, 4))
ETA_MONOMIAL = LaurentPoly.monomial(ETA, 1)


def _factorial(n: int) -> ExactScalar:
    return rising_factorial(1, n)


def _eta(coeffs) -> LaurentPoly:
    return LaurentPoly(ETA, coeffs)


def _real_value(b, name: str) -> float:
    return float(b[name].re)


def _half_line_max(b) -> int:
    return math.ceil(b["h"].re) - 1


# Hermite

def _he_build(b, n):
    coeffs = {}
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = (_factorial(n) * (-1) ** k * 2 ** (n - 2 * k)
                             / (_factorial(k) * _factorial(n - 2 * k)))
    return _eta(coeffs)


HERMITE = FamilyDescriptor(
    tag="He",
    name="Hermite",
    mechanics="oQM",
    coordinate="x",
    slots=(),
    m_degree=0,
    build=_he_build,
    energy=lambda b, n: ExactScalar(2 * n),
    forward_coeff=lambda b, n: ExactScalar(2 * n),
    backward_coeff=lambda b, n: ONE,
    leading=lambda b, n: ExactScalar(2 ** n),
    c1=lambda b: _eta({1: -HALF}),
    c2=lambda b: _eta({0: QUARTER}),
    c_F=ONE,
    c_phi=lambda b: ONE,
    zeros=lambda b: (),
    physical=lambda b: True,
    weight=lambda b, x, truncation: np.exp(-x * x),
    norm=lambda b, n, truncation: float(2 ** n * math.factorial(n) * np.sqrt(np.pi)),
    interval=lambda b: (-12.0, 12.0),
    default_bindings=(make_binding("He"),),
)


# Laguerre

def _l_build(b, n):
    g = b["g"]
    series = terminating_series(ETA, n, hyper_ratio(n, [], [g + HALF]), ETA_MONOMIAL)
    return series * (rising_factorial(g + HALF, n) / _factorial(n))


def _l_norm(b, n, truncation):
    g = _real_value(b, "g")
    return float(np.exp(log_gamma_real(n + g + 0.5)) / (2 * math.factorial(n)))


LAGUERRE = FamilyDescriptor(
    tag="L",
    name="Laguerre",
    mechanics="oQM",
    coordinate="x^2",
    slots=(additive("g", 1),),
    m_degree=1,
    build=_l_build,
    energy=lambda b, n: ExactScalar(4 * n),
    forward_coeff=lambda b, n: ExactScalar(-2),
    backward_coeff=lambda b, n: ExactScalar(-2 * (n + 1)),
    leading=lambda b, n: ExactScalar((-1) ** n) / _factorial(n),
    c1=lambda b: _eta({0: b["g"] + HALF, 1: -1}),
    c2=lambda b: ETA_MONOMIAL,
    c_F=ExactScalar(2),
    c_phi=lambda b: ONE,
    zeros=lambda b: (PhiZero(eta=ExactScalar(0), rep_point=ExactScalar(0)),),
    special_values=lambda b, n, row: rising_factorial(b["g"] + HALF, n) / _factorial(n),
    determinant=lambda b, n: ONE,
    alpha=lambda b, n: (-(b["g"] + HALF + n) / (n + 1), ONE),
    beta=lambda b, n: ExactScalar(-(n + 1)),
    beta_f=lambda b, n: ExactScalar(2 * (n + 1)),
    physical=lambda b: b["g"].is_real() and b["g"].re > HALF.re,
    weight=lambda b, x, truncation: x ** (2 * _real_value(b, "g")) * np.exp(-x * x),
    norm=_l_norm,
    interval=lambda b: (0.0, 12.0),
    default_bindings=(
        make_binding("L", g=1),
        make_binding("L", g="3/2"),
        make_binding("L", g="7/3"),
    ),
)


# Jacobi

def _j_build(b, n):
    g, h = b["g"], b["h"]
    factor = _eta({0: HALF, 1: -HALF})
    series = terminating_series(ETA, n, hyper_ratio(n, [g + h + n], [g + HALF]), factor)
    return series * (rising_factorial(g + HALF, n) / _factorial(n))


def _j_special(b, n, row):
    g, h = b["g"], b["h"]
    if row == 0:
        return rising_factorial(g + HALF, n) / _factorial(n)
    return (-1) ** n * rising_factorial(h + HALF, n) / _factorial(n)


def _j_alpha(b, n):
    g, h = b["g"], b["h"]
    gh = g + h
    alpha1 = -(g - h) * (gh + 2 * n + 2) / ((n + 2) * (gh + 2 * n + 1))
    alpha0 = (-(g + HALF + n) * (h + HALF + n) * (gh + 2 * n + 3)
              / (rising_factorial(n + 1, 2) * (gh + 2 * n + 1)))
    return (alpha0, alpha1, ONE)


def _j_norm(b, n, truncation):
    g, h = _real_value(b, "g"), _real_value(b, "h")
    log_num = log_gamma_real(n + g + 0.5) + log_gamma_real(n + h + 0.5)
    log_den = log_gamma_real(n + g + h) + math.lgamma(n + 1)
    return float(np.exp(log_num - log_den) / (2 * (2 * n + g + h)))


def _j_physical(b):
    g, h = b["g"], b["h"]
    return g.is_real() and h.is_real() and g.re > HALF.re and h.re > HALF.re


JACOBI = FamilyDescriptor(
    tag="J",
    name="Jacobi",
    mechanics="oQM",
    coordinate="cos 2x",
    slots=(additive("g", 1), additive("h", 1)),
    m_degree=2,
    build=_j_build,
    energy=lambda b, n: 4 * n * (b["g"] + b["h"] + n),
    forward_coeff=lambda b, n: -2 * (b["g"] + b["h"] + n),
    backward_coeff=lambda b, n: ExactScalar(-2 * (n + 1)),
    leading=lambda b, n: rising_factorial(b["g"] + b["h"] + n, n) / (2 ** n * _factorial(n)),
    c1=lambda b: _eta({0: b["h"] - b["g"], 1: -(b["g"] + b["h"] + 1)}),
    c2=lambda b: _eta({0: 1, 2: -1}),
    c_F=ExactScalar(-4),
    c_phi=lambda b: -QUARTER,
    zeros=lambda b: (PhiZero(eta=ONE, rep_point=ONE), PhiZero(eta=-ONE, rep_point=-ONE)),
    special_values=_j_special,
    determinant=lambda b, n: -(b["g"] + b["h"] + 2 * n + 1) / (n + 1),
    alpha=_j_alpha,
    beta=lambda b, n: -rising_factorial(n + 1, 2) / rising_factorial(b["g"] + b["h"] + 2 * n + 2, 2),
    beta_f=lambda b, n: (2 * rising_factorial(n + 1, 2) * (b["g"] + b["h"] + n + 1)
                         / rising_factorial(b["g"] + b["h"] + 2 * n + 2, 2)),
    physical=_j_physical,
    weight=lambda b, x, truncation: (np.sin(x) ** (2 * _real_value(b, "g"))
                                     * np.cos(x) ** (2 * _real_value(b, "h"))),
    norm=_j_norm,
    interval=lambda b: (0.0, float(np.pi / 2)),
    default_bindings=(
        make_binding("J", g=1, h="3/2"),
        make_binding("J", g="5/3", h="3/4"),
        make_binding("J", g=1, h=1),
    ),
)


# Bessel

def _b_build(b, n):
    h = b["h"]
    return terminating_series(ETA, n, hyper_ratio(n, [n - 2 * h], [], -HALF), ETA_MONOMIAL)


def _b_special(b, n, row):
    if row == 0:
        return ONE
    return HALF * n * (n - 2 * b["h"])


def _b_norm(b, n, truncation):
    h = _real_value(b, "h")
    return float(math.factorial(n) * gamma_real(2 * h - n + 1) / (2 ** (2 * h + 1) * (h - n)))


def _b_interval(b):
    h = _real_value(b, "h")
    return (-5.0, 30.0 / (2 * h - 2 * _half_line_max(b)))


BESSEL = FamilyDescriptor(
    tag="B",
    name="Bessel",
    mechanics="oQM",
    coordinate="e^x",
    slots=(additive("h", -1),),
    m_degree=2,
    build=_b_build,
    energy=lambda b, n: n * (2 * b["h"] - n),
    forward_coeff=lambda b, n: -HALF * n * (2 * b["h"] - n),
    backward_coeff=lambda b, n: ExactScalar(-2),
    leading=lambda b, n: rising_factorial(n - 2 * b["h"], n) / 2 ** n,
    c1=lambda b: _eta({0: HALF, 1: (1 - 2 * b["h"]) * QUARTER}),
    c2=lambda b: _eta({2: QUARTER}),
    c_F=ONE,
    c_phi=lambda b: ONE,
    zeros=lambda b: (PhiZero(eta=ExactScalar(0), rep_point=ExactScalar(0), multiplicity=2),),
    special_values=_b_special,
    determinant=lambda b, n: (2 * n - 2 * b["h"] + 1) / (n * (n - 2 * b["h"])),
    alpha=lambda b, n: ((2 * n - 2 * b["h"] + 3) / (2 * n - 2 * b["h"] + 1),
                        -4 * (n - b["h"] + 1) / (2 * n - 2 * b["h"] + 1),
                        ONE),
    beta=lambda b, n: 4 / rising_factorial(2 * n - 2 * b["h"] + 2, 2),
    beta_f=lambda b, n: (2 * (n + 1) * (n - 2 * b["h"] + 1)
                         / rising_factorial(2 * n - 2 * b["h"] + 2, 2)),
    physical=lambda b: b["h"].is_real() and b["h"].re > 0,
    weight=lambda b, x, truncation: np.exp(-2 * _real_value(b, "h") * x - 2 * np.exp(-x)),
    norm=_b_norm,
    interval=_b_interval,
    normalizable_max=_half_line_max,
    default_bindings=(
        make_binding("B", h="7/3"),
        make_binding("B", h="13/4"),
        make_binding("B", h="19/5"),
    ),
)


# pseudo Jacobi

def _pj_lower(b) -> ExactScalar:
    return -b["h"] + HALF - I * b["mu"]


def _pj_build(b, n):
    h = b["h"]
    lower = _pj_lower(b)
    factor = _eta({0: HALF, 1: -I * HALF})
    series = terminating_series(ETA, n, hyper_ratio(n, [n - 2 * h], [lower]), factor)
    return series * ((-2 * I) ** n * rising_factorial(lower, n) / rising_factorial(n - 2 * h, n))


def _pj_special(b, n, row):
    h, mu = b["h"], b["mu"]
    sign = 1 if row == 0 else -1
    return ((2 * I * sign) ** n * rising_factorial(-h + HALF + I * mu * sign, n)
            / rising_factorial(n - 2 * h, n))


def _pj_alpha(b, n):
    h, mu = b["h"], b["mu"]
    odd = 2 * h - 2 * n - 1
    alpha1 = -4 * mu * (2 * h - n - 1) / (odd * (2 * h - 2 * n - 3))
    alpha0 = (rising_factorial(2 * h - n - 1, 2) * (odd * odd + 4 * mu * mu)
              / (4 * rising_factorial(h - n - 1, 2) * odd * odd))
    return (alpha0, alpha1, ONE)


def _pj_weight(b, x, truncation):
    h, mu = _real_value(b, "h"), _real_value(b, "mu")
    eta = np.sinh(x)
    return (1 + eta * eta) ** (-h) * np.exp(-2 * mu * np.arctan(eta))


def _pj_norm(b, n, truncation):
    h, mu = _real_value(b, "h"), _real_value(b, "mu")
    poch = np.prod([2 * h - 2 * n + 1 + k for k in range(n)]) if n else 1.0
    return float(2 * np.pi * math.factorial(n) * 2 ** (2 * n - 2 * h) * gamma_real(2 * h - 2 * n)
                 / (poch * gamma_abs2(h - n + 0.5 + 1j * mu)))


def _pj_interval(b):
    bound = 30.0 / (2 * _real_value(b, "h") - 2 * _half_line_max(b))
    return (-bound, bound)


PSEUDO_JACOBI = FamilyDescriptor(
    tag="pJ",
    name="pseudo Jacobi",
    mechanics="oQM",
    coordinate="sinh x",
    slots=(additive("h", -1), additive("mu", 0)),
    m_degree=2,
    build=_pj_build,
    energy=lambda b, n: n * (2 * b["h"] - n),
    forward_coeff=lambda b, n: ExactScalar(n),
    backward_coeff=lambda b, n: 2 * b["h"] - n - 1,
    leading=lambda b, n: ONE,
    c1=lambda b: _eta({0: -b["mu"] * HALF, 1: (1 - 2 * b["h"]) * QUARTER}),
    c2=lambda b: _eta({0: QUARTER, 2: QUARTER}),
    c_F=ONE,
    c_phi=lambda b: ONE,
    zeros=lambda b: (PhiZero(eta=I, rep_point=I), PhiZero(eta=-I, rep_point=-I)),
    special_values=_pj_special,
    determinant=lambda b, n: -I * (2 * b["h"] - n) / (b["h"] - n),
    alpha=_pj_alpha,
    beta=lambda b, n: ONE,
    beta_f=lambda b, n: ExactScalar(n + 1),
    physical=lambda b: b["h"].is_real() and b["mu"].is_real() and b["h"].re > 0 and b["mu"].re > 0,
    weight=_pj_weight,
    norm=_pj_norm,
    interval=_pj_interval,
    normalizable_max=_half_line_max,
    default_bindings=(
        make_binding("pJ", h="7/3", mu="1/2"),
        make_binding("pJ", h="13/4", mu="2/3"),
        make_binding("pJ", h="19/5", mu="1/3"),
    ),
)
