"""Class (iii) families, eta(x) = cos x: Askey-Wilson and its limits.

Polynomials are Laurent polynomials in ``z = e^{ix}`` symmetric under
``z -> 1/z``. Besides the full Christoffel data, the Askey-Wilson family
carries the single-parameter shift data used by the single-shift suite.
"""
import numpy as np

from src.askey.exact import ONE, ExactScalar, q_binomial, qpochhammer
from src.askey.families.base import (
    Z,
    closure_errors,
    elementary_symmetric,
    pairs,
    q_power,
    q_range_ok,
    unit_circle,
    values,
    z_pair,
    z_potential,
    z_zero,
)
from src.askey.hypergeometric import basic_ratio, terminating_series, z_pair_factor
from src.askey.laurent import LaurentPoly
from src.askey.models import FamilyDescriptor, make_binding
from src.askey.special import qpoch_inf, qpoch_inf_many

AW_NAMES = ("a1", "a2", "a3", "a4")
CDQH_NAMES = ("a1", "a2", "a3")
ASC_NAMES = ("a1", "a2")


def _q_energy(b, n):
    return b.q ** -n - 1


def _q_forward(b, n):
    return b.s ** n * (b.q ** -n - 1)


def _q_backward(b, n):
    return b.s ** -(n + 1)


def _pair_product(a, fn):
    result = ONE
    for x, y in pairs(a):
        result = result * fn(x, y)
    return result


def _special(b, names, n, row):
    a = values(b, *names)
    q = b.q
    others = [a[row] * a[k] for k in range(len(a)) if k != row]
    return qpochhammer(others, q, n) / a[row] ** n


def _physical(b, names):
    return q_range_ok(b) and all(a.abs2() < 1 for a in values(b, *names))


def _float_q(b) -> float:
    return b.q.to_complex().real


def _cos_weight(b, names, x, truncation):
    q = _float_q(b)
    z = unit_circle(x)
    result = qpoch_inf(z * z, q, truncation) * qpoch_inf(1 / (z * z), q, truncation)
    for a in values(b, *names):
        c = a.to_complex()
        result = result / (qpoch_inf(c * z, q, truncation) * qpoch_inf(c / z, q, truncation))
    return np.real(result)


def _pair_qpoch_inf(b, names, n, truncation):
    q = _float_q(b)
    a = [v.to_complex() for v in values(b, *names)]
    return complex(qpoch_inf_many([x * y * q ** n for x, y in pairs(a)], q, truncation))


# Askey-Wilson

def _aw_b4(b):
    return elementary_symmetric(values(b, *AW_NAMES), 4)


def _aw_build(b, n):
    a1, a2, a3, a4 = values(b, *AW_NAMES)
    q = b.q
    b4 = a1 * a2 * a3 * a4
    lower = [a1 * a2, a1 * a3, a1 * a4]
    ratio = basic_ratio(n, [b4 * q ** (n - 1)], lower, q, q)
    series = terminating_series(Z, n, ratio, z_pair_factor(a1, a1, q))
    return series * (qpochhammer(lower, q, n) / a1 ** n)


def _aw_determinant(b, n):
    a = values(b, *AW_NAMES)
    q, b4 = b.q, _aw_b4(b)
    return (_pair_product(a, lambda x, y: (x - y) * (1 - x * y * q ** n))
            * b4 ** -3 * qpochhammer([b4 * q ** (2 * n), b4 * q ** (2 * n + 2)], q, 3))


def _aw_alpha(b, n):
    a = values(b, *AW_NAMES)
    q = b.q
    b1, b2, b3, b4 = (elementary_symmetric(a, k) for k in (1, 2, 3, 4))
    q3 = 1 + q + q * q

    def t(k):
        return b4 * q ** (2 * n + k)

    alpha3 = (-(1 - t(5)) / (1 - t(2)) / b4
              * (b3 - q3 * (b1 - b3 * q ** (n + 2)) * b4 * q ** (n + 1) - b1 * b4 * b4 * q ** (3 * n + 6)))

    bracket = (b2 * (1 - t(2)) * (1 + t(3)) * (1 - t(4))
               + q3 * (b3 * b3 + b1 * b1 * b4) * (1 + t(3)) * q ** (2 * n + 2)
               - (1 + q) * (q * b1 * b3 + (1 + q * q) * b4) * (1 + b4 * b4 * q ** (4 * n + 6)) * q ** n
               - (1 + q) * (q * (1 + q) ** 2 * b1 * b3 - (1 + q * q) ** 2 * b4) * b4 * q ** (3 * n + 2))
    alpha2 = (1 - t(3)) * (1 - t(6)) / ((1 - t(1)) * (1 - t(2))) / b4 * bracket

    alpha1 = (-_pair_product(a, lambda x, y: 1 - x * y * q ** (n + 1))
              * (1 - t(5)) * (1 - t(6)) / ((1 - t(0)) * (1 - t(2))) / b4
              * (b1 - q3 * (b3 - b1 * b4 * q ** (n + 1)) * q ** n - b3 * b4 * q ** (3 * n + 3)))

    alpha0 = (_pair_product(a, lambda x, y: qpochhammer(x * y * q ** n, q, 2))
              * qpochhammer(t(4), q, 3) / qpochhammer(t(0), q, 3) / b4)
    return (alpha0, alpha1, alpha2, alpha3, ONE)


def _aw_beta_f(b, n):
    q, b4 = b.q, _aw_b4(b)
    return (b4 * b.s ** (-2 * n - 3) * qpochhammer([q ** (n + 1), b4 * q ** (n + 1)], q, 2)
            / qpochhammer(b4 * q ** (2 * n + 3), q, 4))


def _aw_norm(b, n, truncation):
    q = _float_q(b)
    b4 = _aw_b4(b).to_complex()
    finite = complex(np.prod([1 - b4 * q ** (n - 1 + k) for k in range(n)])) if n else 1.0
    num = finite * complex(qpoch_inf(b4 * q ** (2 * n), q, truncation))
    den = complex(qpoch_inf(q ** (n + 1), q, truncation)) * _pair_qpoch_inf(b, AW_NAMES, n, truncation)
    return float(np.real(2 * np.pi * num / den))


def single_shift_phi(b, j: int) -> LaurentPoly:
    """``(1 - a_j z)(1 - a_j/z)``, the factor of the shift a_j -> q a_j."""
    a = values(b, *AW_NAMES)[j]
    return z_pair(a, a)


def single_shift_c_phi(b, j: int) -> ExactScalar:
    return -2 * values(b, *AW_NAMES)[j]


def single_shift_alpha0(b, n: int, j: int) -> ExactScalar:
    a = values(b, *AW_NAMES)
    q = b.q
    result = -ONE / a[j]
    for k, other in enumerate(a):
        if k != j:
            result = result * (1 - a[j] * other * q ** n)
    return result


def single_shift_beta(b, n: int, j: int) -> ExactScalar:
    a = values(b, *AW_NAMES)
    return -a[j] / (1 - _aw_b4(b) * b.q ** (2 * n))


ASKEY_WILSON = FamilyDescriptor(
    tag="AW",
    name="Askey-Wilson",
    mechanics="idQM",
    coordinate="iii",
    slots=tuple(q_power(name, "1/2", 1, "complex") for name in AW_NAMES),
    m_degree=4,
    build=_aw_build,
    energy=lambda b, n: _q_energy(b, n) * (1 - _aw_b4(b) * b.q ** (n - 1)),
    forward_coeff=lambda b, n: _q_forward(b, n) * (1 - _aw_b4(b) * b.q ** (n - 1)),
    backward_coeff=_q_backward,
    leading=lambda b, n: 2 ** n * qpochhammer(_aw_b4(b) * b.q ** (n - 1), b.q, n),
    uses_q=True,
    potential=lambda b: z_potential(values(b, *AW_NAMES), b.q),
    c_phi=lambda b: 16 * _aw_b4(b),
    zeros=lambda b: tuple(z_zero(a) for a in values(b, *AW_NAMES)),
    special_values=lambda b, n, row: _special(b, AW_NAMES, n, row),
    determinant=_aw_determinant,
    alpha=_aw_alpha,
    beta=lambda b, n: _aw_b4(b) / qpochhammer(_aw_b4(b) * b.q ** (2 * n + 3), b.q, 4),
    beta_f=_aw_beta_f,
    closure=lambda b: closure_errors(b, AW_NAMES),
    physical=lambda b: _physical(b, AW_NAMES),
    weight=lambda b, x, truncation: _cos_weight(b, AW_NAMES, x, truncation),
    norm=_aw_norm,
    interval=lambda b: (0.0, float(np.pi)),
    default_bindings=(
        make_binding("AW", s="1/2", a1="1/2", a2="1/3", a3="-1/5", a4="1/7"),
        make_binding("AW", s="1/3", a1="2/5", a2="-1/3", a3="1/4", a4="3/7"),
        make_binding("AW", s="2/5", a1="1/3+1/4i", a2="1/3-1/4i", a3="1/2", a4="-2/7"),
    ),
)


# continuous dual q-Hahn

def _cdqh_build(b, n):
    a1, a2, a3 = values(b, *CDQH_NAMES)
    q = b.q
    lower = [a1 * a2, a1 * a3]
    series = terminating_series(Z, n, basic_ratio(n, [], lower, q, q), z_pair_factor(a1, a1, q))
    return series * (qpochhammer(lower, q, n) / a1 ** n)


def _cdqh_alpha(b, n):
    a = values(b, *CDQH_NAMES)
    q = b.q
    b1, b2, b3 = (elementary_symmetric(a, k) for k in (1, 2, 3))
    q3 = 1 + q + q * q
    alpha2 = -(b2 - (1 + q) * b1 * b3 * q ** (n + 1) + q3 * b3 * b3 * q ** (2 * n + 2)) / b3
    alpha1 = _pair_product(a, lambda x, y: 1 - x * y * q ** (n + 1)) * (b1 - q3 * b3 * q ** n) / b3
    alpha0 = -_pair_product(a, lambda x, y: qpochhammer(x * y * q ** n, q, 2)) / b3
    return (alpha0, alpha1, alpha2, ONE)


def _cdqh_b3(b):
    return elementary_symmetric(values(b, *CDQH_NAMES), 3)


def _cdqh_norm(b, n, truncation):
    q = _float_q(b)
    den = complex(qpoch_inf(q ** (n + 1), q, truncation)) * _pair_qpoch_inf(b, CDQH_NAMES, n, truncation)
    return float(np.real(2 * np.pi / den))


CONTINUOUS_DUAL_Q_HAHN = FamilyDescriptor(
    tag="cdqH",
    name="continuous dual q-Hahn",
    mechanics="idQM",
    coordinate="iii",
    slots=tuple(q_power(name, "1/2", 1, "complex") for name in CDQH_NAMES),
    m_degree=3,
    build=_cdqh_build,
    energy=_q_energy,
    forward_coeff=_q_forward,
    backward_coeff=_q_backward,
    leading=lambda b, n: ExactScalar(2 ** n),
    uses_q=True,
    potential=lambda b: z_potential(values(b, *CDQH_NAMES), b.q),
    c_phi=lambda b: -8 * _cdqh_b3(b),
    zeros=lambda b: tuple(z_zero(a) for a in values(b, *CDQH_NAMES)),
    special_values=lambda b, n, row: _special(b, CDQH_NAMES, n, row),
    determinant=lambda b, n: (_pair_product(values(b, *CDQH_NAMES), lambda x, y: (x - y) * (1 - x * y * b.q ** n))
                              / _cdqh_b3(b) ** 2),
    alpha=_cdqh_alpha,
    beta=lambda b, n: -_cdqh_b3(b),
    beta_f=lambda b, n: -_cdqh_b3(b) * b.s ** (-2 * n - 3) * qpochhammer(b.q ** (n + 1), b.q, 2),
    closure=lambda b: closure_errors(b, CDQH_NAMES),
    physical=lambda b: _physical(b, CDQH_NAMES),
    weight=lambda b, x, truncation: _cos_weight(b, CDQH_NAMES, x, truncation),
    norm=_cdqh_norm,
    interval=lambda b: (0.0, float(np.pi)),
    default_bindings=(
        make_binding("cdqH", s="1/2", a1="1/2", a2="1/3", a3="-1/5"),
        make_binding("cdqH", s="1/3", a1="2/5", a2="1/4", a3="-3/7"),
        make_binding("cdqH", s="2/5", a1="1/3+1/4i", a2="1/3-1/4i", a3="1/2"),
    ),
)


# Al-Salam-Chihara

def _asc_build(b, n):
    a1, a2 = values(b, *ASC_NAMES)
    q = b.q
    series = terminating_series(Z, n, basic_ratio(n, [], [a1 * a2, 0], q, q), z_pair_factor(a1, a1, q))
    return series * (qpochhammer(a1 * a2, q, n) / a1 ** n)


def _asc_special(b, n, row):
    a = values(b, *ASC_NAMES)
    return qpochhammer(a[0] * a[1], b.q, n) / a[row] ** n


def _asc_alpha(b, n):
    a1, a2 = values(b, *ASC_NAMES)
    q = b.q
    p = a1 * a2
    return (qpochhammer(p * q ** n, q, 2) / p, -(a1 + a2) * (1 - p * q ** (n + 1)) / p, ONE)


def _asc_norm(b, n, truncation):
    q = _float_q(b)
    a1, a2 = (v.to_complex() for v in values(b, *ASC_NAMES))
    den = qpoch_inf_many([q ** (n + 1), a1 * a2 * q ** n], q, truncation)
    return float(np.real(2 * np.pi / complex(den)))


def _asc_product(b):
    a1, a2 = values(b, *ASC_NAMES)
    return a1 * a2


AL_SALAM_CHIHARA = FamilyDescriptor(
    tag="ASC",
    name="Al-Salam-Chihara",
    mechanics="idQM",
    coordinate="iii",
    slots=tuple(q_power(name, "1/2", 1, "complex") for name in ASC_NAMES),
    m_degree=2,
    build=_asc_build,
    energy=_q_energy,
    forward_coeff=_q_forward,
    backward_coeff=_q_backward,
    leading=lambda b, n: ExactScalar(2 ** n),
    uses_q=True,
    potential=lambda b: z_potential(values(b, *ASC_NAMES), b.q),
    c_phi=lambda b: 4 * _asc_product(b),
    zeros=lambda b: tuple(z_zero(a) for a in values(b, *ASC_NAMES)),
    special_values=_asc_special,
    determinant=lambda b, n: ((b["a1"] - b["a2"]) * (1 - _asc_product(b) * b.q ** n) / _asc_product(b)),
    alpha=_asc_alpha,
    beta=lambda b, n: _asc_product(b),
    beta_f=lambda b, n: _asc_product(b) * b.s ** (-2 * n - 3) * qpochhammer(b.q ** (n + 1), b.q, 2),
    closure=lambda b: closure_errors(b, ASC_NAMES),
    physical=lambda b: _physical(b, ASC_NAMES),
    weight=lambda b, x, truncation: _cos_weight(b, ASC_NAMES, x, truncation),
    norm=_asc_norm,
    interval=lambda b: (0.0, float(np.pi)),
    default_bindings=(
        make_binding("ASC", s="1/2", a1="1/2", a2="1/3"),
        make_binding("ASC", s="1/3", a1="2/5", a2="-1/4"),
        make_binding("ASC", s="2/5", a1="1/3+1/4i", a2="1/3-1/4i"),
    ),
)


# continuous big q-Hermite

def _cbqhe_build(b, n):
    a, q = b["a"], b.q
    series = terminating_series(Z, n, basic_ratio(n, [], [0, 0], q, q), z_pair_factor(a, a, q))
    return series * a ** -n


def _q_hermite_norm(b, n, truncation):
    q = _float_q(b)
    return float(2 * np.pi / np.real(qpoch_inf(q ** (n + 1), q, truncation)))


CONTINUOUS_BIG_Q_HERMITE = FamilyDescriptor(
    tag="cbqHe",
    name="continuous big q-Hermite",
    mechanics="idQM",
    coordinate="iii",
    slots=(q_power("a", "1/2", 1),),
    m_degree=1,
    build=_cbqhe_build,
    energy=_q_energy,
    forward_coeff=_q_forward,
    backward_coeff=_q_backward,
    leading=lambda b, n: ExactScalar(2 ** n),
    uses_q=True,
    potential=lambda b: z_potential([b["a"]], b.q),
    c_phi=lambda b: -2 * b["a"],
    zeros=lambda b: (z_zero(b["a"]),),
    special_values=lambda b, n, row: b["a"] ** -n,
    determinant=lambda b, n: ONE,
    alpha=lambda b, n: (-ONE / b["a"], ONE),
    beta=lambda b, n: -b["a"],
    beta_f=lambda b, n: -b["a"] * b.s ** (-2 * n - 3) * qpochhammer(b.q ** (n + 1), b.q, 2),
    physical=lambda b: _physical(b, ("a",)) and b["a"].is_real(),
    weight=lambda b, x, truncation: _cos_weight(b, ("a",), x, truncation),
    norm=_q_hermite_norm,
    interval=lambda b: (0.0, float(np.pi)),
    default_bindings=(
        make_binding("cbqHe", s="1/2", a="1/2"),
        make_binding("cbqHe", s="1/3", a="-1/3"),
        make_binding("cbqHe", s="2/5", a="2/5"),
    ),
)


# continuous q-Hermite

def _cqhe_build(b, n):
    q = b.q
    return LaurentPoly(Z, {n - 2 * k: q_binomial(n, k, q) for k in range(n + 1)})


CONTINUOUS_Q_HERMITE = FamilyDescriptor(
    tag="cqHe",
    name="continuous q-Hermite",
    mechanics="idQM",
    coordinate="iii",
    slots=(),
    m_degree=0,
    build=_cqhe_build,
    energy=_q_energy,
    forward_coeff=_q_forward,
    backward_coeff=_q_backward,
    leading=lambda b, n: ExactScalar(2 ** n),
    uses_q=True,
    potential=lambda b: z_potential([], b.q),
    c_phi=lambda b: ONE,
    zeros=lambda b: (),
    physical=q_range_ok,
    weight=lambda b, x, truncation: _cos_weight(b, (), x, truncation),
    norm=_q_hermite_norm,
    interval=lambda b: (0.0, float(np.pi)),
    default_bindings=(
        make_binding("cqHe", s="1/2"),
        make_binding("cqHe", s="1/3"),
        make_binding("cqHe", s="2/5"),
    ),
)