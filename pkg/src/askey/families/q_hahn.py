"""Class (iv) families, eta(x) = cos(x + phi): continuous q-Hahn and q-Meixner-Pollaczek.

The phase enters through the unit ``w = e^{i phi}``; in ``z = e^{ix}`` the
coordinate reads ``eta = (w z + conj(w)/z)/2``.
"""
import numpy as np

from src.askey.exact import I, ONE, pythagorean_unit, qpochhammer
from src.askey.families.base import (
    Z,
    closure_errors,
    cos_2phi,
    cos_phi,
    q_power,
    q_range_ok,
    sin_phi,
    unit_circle,
    values,
    z_potential,
    z_zero,
)
from src.askey.hypergeometric import basic_ratio, terminating_series, z_pair_factor
from src.askey.models import FamilyDescriptor, make_binding
from src.askey.special import qpoch_inf, qpoch_inf_many

CQH_NAMES = ("a1", "a2")


def _shifted_circle_weight(b, a_values, x, truncation):
    q = b.q.to_complex().real
    w = b.w.to_complex()
    z = unit_circle(x)
    u = w * z
    result = qpoch_inf(u * u, q, truncation) * qpoch_inf(1 / (u * u), q, truncation)
    for a in a_values:
        c = a.to_complex()
        for point in (z, w * w * z):
            result = result / (qpoch_inf(c * point, q, truncation) * qpoch_inf(c / point, q, truncation))
    return np.real(result)


# continuous q-Hahn

def _cqh(b):
    a1, a2 = values(b, *CQH_NAMES)
    p = a1 * a2
    return a1, a2, p, p * p


def _cqh_build(b, n):
    a1, a2, p, p2 = _cqh(b)
    q, w = b.q, b.w
    lower = [a1 * a1, p, p * w * w]
    ratio = basic_ratio(n, [p2 * q ** (n - 1)], lower, q, q)
    series = terminating_series(Z, n, ratio, z_pair_factor(a1 * w * w, a1, q))
    return series * (qpochhammer(lower, q, n) / (a1 ** n * w ** n))


def _cqh_zeros(b):
    a1, a2, _, _ = _cqh(b)
    w = b.w
    wbar2 = w.conj() * w.conj()
    return tuple(z_zero(point, w) for point in (a1, a2, a1 * wbar2, a2 * wbar2))


def _cqh_special(b, n, row):
    a1, a2, p, _ = _cqh(b)
    q = b.q
    a = a1 if row % 2 == 0 else a2
    unit = b.w if row < 2 else b.w.conj()
    return qpochhammer([a * a, p, p * unit * unit], q, n) / (a ** n * unit ** n)


def _cqh_determinant(b, n):
    a1, a2, p, p2 = _cqh(b)
    q, w = b.q, b.w
    w2, wbar2 = w * w, w.conj() * w.conj()
    return (4 * sin_phi(w) ** 2 * p ** -5 * (a1 - a2) ** 2 * (a1 - a2 * w2) * (a1 - a2 * wbar2)
            * (1 - a1 * a1 * q ** n) * (1 - a2 * a2 * q ** n) * (1 - p * q ** n) ** 2
            * (1 - p * w2 * q ** n) * (1 - p * wbar2 * q ** n)
            * qpochhammer([p2 * q ** (2 * n), p2 * q ** (2 * n + 2)], q, 3))


def _cqh_alpha(b, n):
    a1, a2, p, p2 = _cqh(b)
    q, w = b.q, b.w
    w2, wbar2 = w * w, w.conj() * w.conj()
    c1, c2 = cos_phi(w), cos_2phi(w)
    total = a1 + a2

    def t(k):
        return p2 * q ** (2 * n + k)

    alpha3 = (-2 * c1 * total * (1 - t(5)) * qpochhammer(p * q ** (n + 1), q, 3)
              / (p * (1 - t(2))))

    bracket = (p * qpochhammer(-p * q ** (n + 1), q, 2)
               * (2 * (1 + t(3)) * c2 - (1 + q) * (1 + q * q) * p * q ** n)
               + total ** 2 * (1 - (1 + q) * q ** (n + 1) * (1 + 2 * c2) * p * (1 + t(3))
                               + t(2) * (2 * q + 2 * (1 + q * q) * (1 + c2) + t(4))))
    alpha2 = ((1 - t(3)) * (1 - t(6)) * qpochhammer(p * q ** (n + 1), q, 2)
              / (p2 * qpochhammer(t(1), q, 2)) * bracket)

    alpha1 = (-2 * c1 * total * qpochhammer(t(5), q, 2) * qpochhammer(p * q ** n, q, 3)
              * (1 - p * q ** (n + 1)) ** 2 / (p2 * (1 - t(0)) * (1 - t(2)))
              * (1 - a1 * a1 * q ** (n + 1)) * (1 - a2 * a2 * q ** (n + 1))
              * (1 - p * w2 * q ** (n + 1)) * (1 - p * wbar2 * q ** (n + 1)))

    alpha0 = (qpochhammer(t(4), q, 3) * qpochhammer(p * q ** n, q, 2) ** 2
              * qpochhammer([a1 * a1 * q ** n, a2 * a2 * q ** n, p * w2 * q ** n, p * wbar2 * q ** n], q, 2)
              / (p2 * qpochhammer(t(0), q, 3)))
    return (alpha0, alpha1, alpha2, alpha3, ONE)


def _cqh_beta_f(b, n):
    _, _, _, p2 = _cqh(b)
    q = b.q
    return (p2 * b.s ** (-2 * n - 3) * qpochhammer([q ** (n + 1), p2 * q ** (n + 1)], q, 2)
            / qpochhammer(p2 * q ** (2 * n + 3), q, 4))


def _cqh_norm(b, n, truncation):
    a1, a2 = (v.to_complex() for v in values(b, *CQH_NAMES))
    q = b.q.to_complex().real
    w = b.w.to_complex()
    p = a1 * a2
    p2 = p * p
    finite = complex(np.prod([1 - p2 * q ** (n - 1 + k) for k in range(n)])) if n else 1.0
    num = 4 * np.pi * finite * complex(qpoch_inf(p2 * q ** (2 * n), q, truncation))
    den = qpoch_inf_many([q ** (n + 1), a1 * a1 * q ** n, a2 * a2 * q ** n, p * q ** n, p * q ** n,
                          p * w * w * q ** n, p * q ** n / (w * w)], q, truncation)
    return float(np.real(num / complex(den)))


CONTINUOUS_Q_HAHN = FamilyDescriptor(
    tag="cqH",
    name="continuous q-Hahn",
    mechanics="idQM",
    coordinate="iv",
    slots=tuple(q_power(name, "1/2", 1, "complex") for name in CQH_NAMES),
    m_degree=4,
    build=_cqh_build,
    energy=lambda b, n: (b.q ** -n - 1) * (1 - _cqh(b)[3] * b.q ** (n - 1)),
    forward_coeff=lambda b, n: b.s ** n * (b.q ** -n - 1) * (1 - _cqh(b)[3] * b.q ** (n - 1)),
    backward_coeff=lambda b, n: b.s ** -(n + 1),
    leading=lambda b, n: 2 ** n * qpochhammer(_cqh(b)[3] * b.q ** (n - 1), b.q, n),
    uses_q=True,
    uses_phase=True,
    potential=lambda b: z_potential([b["a1"], b["a2"], b["a1"] * b.w ** 2, b["a2"] * b.w ** 2], b.q, b.w),
    c_phi=lambda b: 16 * _cqh(b)[3],
    zeros=_cqh_zeros,
    special_values=_cqh_special,
    determinant=_cqh_determinant,
    alpha=_cqh_alpha,
    beta=lambda b, n: _cqh(b)[3] / qpochhammer(_cqh(b)[3] * b.q ** (2 * n + 3), b.q, 4),
    beta_f=_cqh_beta_f,
    closure=lambda b: closure_errors(b, CQH_NAMES),
    physical=lambda b: q_range_ok(b) and all(a.abs2() < 1 for a in values(b, *CQH_NAMES)),
    weight=lambda b, x, truncation: _shifted_circle_weight(b, values(b, *CQH_NAMES), x, truncation),
    norm=_cqh_norm,
    interval=lambda b: (-float(np.pi), float(np.pi)),
    default_bindings=(
        make_binding("cqH", s="1/2", phase=pythagorean_unit(2, 1), a1="1/2", a2="1/3"),
        make_binding("cqH", s="1/3", phase=pythagorean_unit(3, 1), a1="2/5", a2="-1/4"),
        make_binding("cqH", s="2/5", phase=pythagorean_unit(3, 2), a1="1/3+1/4i", a2="1/3-1/4i"),
    ),
)


# q-Meixner-Pollaczek

def _qmp_build(b, n):
    a, q, w = b["a"], b.q, b.w
    ratio = basic_ratio(n, [], [a * a, 0], q, q)
    series = terminating_series(Z, n, ratio, z_pair_factor(a * w * w, a, q))
    return series * (qpochhammer(a * a, q, n) / (a ** n * w ** n * qpochhammer(q, q, n)))


def _qmp_special(b, n, row):
    a, q = b["a"], b.q
    unit = b.w if row == 0 else b.w.conj()
    return qpochhammer(a * a, q, n) / (a ** n * unit ** n * qpochhammer(q, q, n))


def _qmp_alpha(b, n):
    a, q, w = b["a"], b.q, b.w
    return (qpochhammer(a * a * q ** n, q, 2) / (a * a * qpochhammer(q ** (n + 1), q, 2)),
            -2 * cos_phi(w) * (1 - a * a * q ** (n + 1)) / (a * (1 - q ** (n + 2))),
            ONE)


def _qmp_norm(b, n, truncation):
    a = b["a"].to_complex().real
    q = b.q.to_complex().real
    finite = np.real(qpoch_inf(q, q, n)) if n else 1.0
    return float(2 * np.pi / (finite * np.real(qpoch_inf_many([q, a * a * q ** n], q, truncation))))


Q_MEIXNER_POLLACZEK = FamilyDescriptor(
    tag="qMP",
    name="q-Meixner-Pollaczek",
    mechanics="idQM",
    coordinate="iv",
    slots=(q_power("a", "1/2", 1),),
    m_degree=2,
    build=_qmp_build,
    energy=lambda b, n: b.q ** -n - 1,
    forward_coeff=lambda b, n: b.s ** -n,
    backward_coeff=lambda b, n: b.s ** -(n + 1) * (1 - b.q ** (n + 1)),
    leading=lambda b, n: 2 ** n / qpochhammer(b.q, b.q, n),
    uses_q=True,
    uses_phase=True,
    potential=lambda b: z_potential([b["a"], b["a"] * b.w ** 2], b.q, b.w),
    c_phi=lambda b: 4 * b["a"] ** 2,
    zeros=lambda b: (z_zero(b["a"], b.w), z_zero(b["a"] * b.w.conj() ** 2, b.w)),
    special_values=_qmp_special,
    determinant=lambda b, n: (2 * I * sin_phi(b.w) * (1 - b["a"] ** 2 * b.q ** n)
                              / (b["a"] * (1 - b.q ** (n + 1)))),
    alpha=_qmp_alpha,
    beta=lambda b, n: b["a"] ** 2 * qpochhammer(b.q ** (n + 1), b.q, 2),
    beta_f=lambda b, n: b["a"] ** 2 * b.s ** (-2 * n - 3) * qpochhammer(b.q ** (n + 1), b.q, 2),
    physical=lambda b: q_range_ok(b) and b["a"].is_real() and 0 < b["a"].re < 1,
    weight=lambda b, x, truncation: _shifted_circle_weight(b, [b["a"]], x, truncation),
    norm=_qmp_norm,
    interval=lambda b: (-float(np.pi), float(np.pi)),
    default_bindings=(
        make_binding("qMP", s="1/2", phase=pythagorean_unit(2, 1), a="1/2"),
        make_binding("qMP", s="1/3", phase=pythagorean_unit(3, 1), a="1/3"),
        make_binding("qMP", s="2/5", phase=pythagorean_unit(3, 2), a="2/5"),
    ),
)
