"""Continuous q-Jacobi and continuous q-Laguerre (class iii).

Parameters are stored as ``t_alpha = q^((alpha+1/2)/2)`` and
``t_beta = q^((beta+1/2)/2)`` so that one shift multiplies them by ``s``.
"""
import numpy as np

from src.askey.exact import ONE, ExactScalar, qpochhammer
from src.askey.families.base import Z, q_power, q_range_ok, unit_circle, z_potential, z_zero
from src.askey.hypergeometric import basic_ratio, terminating_series, z_pair_factor
from src.askey.models import FamilyDescriptor, make_binding
from src.askey.special import qpoch_inf, qpoch_inf_many


def _t_ok(value: ExactScalar) -> bool:
    return value.is_real() and 0 < value.re <= 1


def _base_s_inf(c: complex, z: np.ndarray, s: float, truncation: int) -> np.ndarray:
    return qpoch_inf(c * z, s, truncation) * qpoch_inf(c / z, s, truncation)


# continuous q-Jacobi

def _cqj(b):
    ta, tb = b["t_alpha"], b["t_beta"]
    return ta, tb, ta * tb, ta / tb


def _cqj_build(b, n):
    ta, tb, t, _ = _cqj(b)
    q, s = b.q, b.s
    ratio = basic_ratio(n, [t * t * q ** n], [ta * ta * s, -t, -t * s], q, q)
    series = terminating_series(Z, n, ratio, z_pair_factor(ta, ta, q))
    return series * (qpochhammer(ta * ta * s, q, n) / qpochhammer(q, q, n))


def _cqj_zeros(b):
    ta, tb, _, _ = _cqj(b)
    s = b.s
    return tuple(z_zero(p) for p in (ta, ta * s, -tb, -tb * s))


def _cqj_special(b, n, row):
    ta, tb, t, r = _cqj(b)
    q, s = b.q, b.s
    lift = (1 + t * q ** n) / (1 + t)
    if row < 2:
        base = qpochhammer(ta * ta * s, q, n) / qpochhammer(q, q, n)
    else:
        base = (-r) ** n * qpochhammer(tb * tb * s, q, n) / qpochhammer(q, q, n)
    return base if row % 2 == 0 else base * s ** -n * lift


def _cqj_determinant(b, n):
    ta, tb, t, r = _cqj(b)
    q, s = b.q, b.s
    num = (-r * s ** -5 * (1 - s) ** 2 * (r + 1) ** 2 * (r + s) * (r * s + 1)
           * (1 - ta * ta * s * q ** n) * (1 - tb * tb * s * q ** n)
           * qpochhammer([t * s ** (2 * n + 1), t * s ** (2 * n + 3)], s, 3))
    den = ((1 - q ** (n + 1)) ** 3 * (1 - q ** (n + 2)) ** 2 * (1 - q ** (n + 3))
           * (1 + t * q ** n) ** 2)
    return num / den


def _cqj_alpha(b, n):
    ta, tb, t, r = _cqj(b)
    q, s = b.q, b.s

    def ts(k):
        return t * s ** (2 * n + k)

    alpha3 = ((r - 1) / s * (1 + s) * (1 + ts(5)) * (1 - ts(6))
              / ((1 - q ** (n + 4)) * (1 - ts(3))))

    bracket = ((1 + q) * (r / q) * ((1 + s) ** 2 * ts(3) - (1 + ts(4)) ** 2)
               + (r - 1) ** 2 / s * ((1 + q) * ts(3) + (1 + ts(4)) ** 2))
    alpha2 = ((1 - ts(4)) * (1 - ts(7))
              / (qpochhammer(q ** (n + 3), q, 2) * (1 - ts(2)) * (1 - ts(3))) * bracket)

    alpha1 = (-(r * (r - 1) / q) * (1 + s)
              * (1 - ta * ta * s * q ** (n + 1)) * (1 - tb * tb * s * q ** (n + 1))
              * (1 + ts(3)) * (1 - ts(6)) * (1 - ts(7))
              / (qpochhammer(q ** (n + 2), q, 3) * (1 - ts(1)) * (1 - ts(3))))

    alpha0 = (r * r / q * qpochhammer([ta * ta * s * q ** n, tb * tb * s * q ** n], q, 2)
              * qpochhammer(ts(5), s, 3)
              / (qpochhammer(q ** (n + 1), q, 4) * qpochhammer(ts(1), s, 3)))
    return (alpha0, alpha1, alpha2, alpha3, ONE)


def _cqj_beta(b, n):
    _, _, t, r = _cqj(b)
    q, s = b.q, b.s
    return (qpochhammer(q ** (n + 1), q, 4) * qpochhammer(-t, s, 4) * q ** (n + 1)
            / (r * r * qpochhammer(t * s ** (2 * n + 4), s, 4)))


def _cqj_beta_f(b, n):
    _, tb, t, _ = _cqj(b)
    q, s = b.q, b.s
    return (tb * tb / s * q ** -n * qpochhammer(q ** (n + 1), q, 4) * qpochhammer(t * t * q ** (n + 2), q, 2)
            / qpochhammer(t * s ** (2 * n + 4), s, 4))


def _cqj_weight(b, x, truncation):
    ta, tb = b["t_alpha"].to_complex(), b["t_beta"].to_complex()
    q, s = b.q.to_complex().real, b.s.to_complex().real
    z = unit_circle(x)
    num = qpoch_inf(z * z, q, truncation) * qpoch_inf(1 / (z * z), q, truncation)
    den = _base_s_inf(ta, z, s, 2 * truncation) * _base_s_inf(-tb, z, s, 2 * truncation)
    return np.real(num / den)


def _cqj_norm(b, n, truncation):
    ta, tb = b["t_alpha"].to_complex().real, b["t_beta"].to_complex().real
    q, s = b.q.to_complex().real, b.s.to_complex().real
    t = ta * tb

    def fin(values):
        return complex(np.prod([np.real(qpoch_inf(v, q, n)) if n else 1.0 for v in values]))

    finite = (2 * np.pi * ta ** (2 * n) * (1 - t * t) * fin([ta * ta * s, tb * tb * s, -t * q])
              / ((1 - t * t * q ** (2 * n)) * fin([q, t * t, -t])))
    infinite = (qpoch_inf_many([t * s, t * q], q, truncation)
                / qpoch_inf_many([q, ta * ta * s, tb * tb * s, -t, -t * s], q, truncation))
    return float(np.real(finite * complex(infinite)))


CONTINUOUS_Q_JACOBI = FamilyDescriptor(
    tag="cqJ",
    name="continuous q-Jacobi",
    mechanics="idQM",
    coordinate="iii",
    slots=(q_power("t_alpha", 1, "1/2"), q_power("t_beta", 1, "1/2")),
    m_degree=4,
    build=_cqj_build,
    energy=lambda b, n: (b.q ** -n - 1) * (1 - _cqj(b)[2] ** 2 * b.q ** n),
    forward_coeff=lambda b, n: (b["t_alpha"] * b.s * b.q ** -n * (1 - _cqj(b)[2] ** 2 * b.q ** n)
                                / ((1 + _cqj(b)[2]) * (1 + _cqj(b)[2] * b.s))),
    backward_coeff=lambda b, n: (b.q ** (n + 1) * (b.q ** -(n + 1) - 1) * (1 + _cqj(b)[2])
                                 * (1 + _cqj(b)[2] * b.s) / (b["t_alpha"] * b.s)),
    leading=lambda b, n: (2 ** n * b["t_alpha"] ** n * qpochhammer(_cqj(b)[2] ** 2 * b.q ** n, b.q, n)
                          / qpochhammer([b.q, -_cqj(b)[2], -_cqj(b)[2] * b.s], b.q, n)),
    uses_q=True,
    potential=lambda b: z_potential([p.rep_point for p in _cqj_zeros(b)], b.q),
    c_phi=lambda b: 16 * _cqj(b)[2] ** 2 * b.q,
    zeros=_cqj_zeros,
    special_values=_cqj_special,
    determinant=_cqj_determinant,
    alpha=_cqj_alpha,
    beta=_cqj_beta,
    beta_f=_cqj_beta_f,
    physical=lambda b: q_range_ok(b) and _t_ok(b["t_alpha"]) and _t_ok(b["t_beta"]),
    weight=_cqj_weight,
    norm=_cqj_norm,
    interval=lambda b: (0.0, float(np.pi)),
    default_bindings=(
        make_binding("cqJ", s="1/2", t_alpha="1/3", t_beta="1/5"),
        make_binding("cqJ", s="1/3", t_alpha="2/5", t_beta="1/4"),
        make_binding("cqJ", s="2/5", t_alpha="1/2", t_beta="2/7"),
    ),
)


# continuous q-Laguerre

def _cql_build(b, n):
    t, q, s = b["t"], b.q, b.s
    ratio = basic_ratio(n, [], [t * t * s, 0], q, q)
    series = terminating_series(Z, n, ratio, z_pair_factor(t, t, q))
    return series * (qpochhammer(t * t * s, q, n) / qpochhammer(q, q, n))


def _cql_special(b, n, row):
    t, q, s = b["t"], b.q, b.s
    base = qpochhammer(t * t * s, q, n) / qpochhammer(q, q, n)
    return base if row == 0 else base * s ** -n


def _cql_alpha(b, n):
    t, q, s = b["t"], b.q, b.s
    return (qpochhammer(t * t * s * q ** n, q, 2) / (s * qpochhammer(q ** (n + 1), q, 2)),
            -(1 + s) * (1 - t * t * s * q ** (n + 1)) / (s * (1 - q ** (n + 2))),
            ONE)


def _cql_weight(b, x, truncation):
    t = b["t"].to_complex()
    q, s = b.q.to_complex().real, b.s.to_complex().real
    z = unit_circle(x)
    num = qpoch_inf(z * z, q, truncation) * qpoch_inf(1 / (z * z), q, truncation)
    return np.real(num / _base_s_inf(t, z, s, 2 * truncation))


def _cql_norm(b, n, truncation):
    t = b["t"].to_complex().real
    q, s = b.q.to_complex().real, b.s.to_complex().real
    finite = np.real(qpoch_inf(t * t * s, q, n) / qpoch_inf(q, q, n)) if n else 1.0
    infinite = np.real(qpoch_inf_many([q, t * t * s], q, truncation))
    return float(2 * np.pi * t ** (2 * n) * finite / infinite)


CONTINUOUS_Q_LAGUERRE = FamilyDescriptor(
    tag="cqL",
    name="continuous q-Laguerre",
    mechanics="idQM",
    coordinate="iii",
    slots=(q_power("t", 1, "1/2"),),
    m_degree=2,
    build=_cql_build,
    energy=lambda b, n: b.q ** -n - 1,
    forward_coeff=lambda b, n: b["t"] * b.s * b.q ** -n,
    backward_coeff=lambda b, n: b.q ** (n + 1) * (b.q ** -(n + 1) - 1) / (b["t"] * b.s),
    leading=lambda b, n: 2 ** n * b["t"] ** n / qpochhammer(b.q, b.q, n),
    uses_q=True,
    potential=lambda b: z_potential([b["t"], b["t"] * b.s], b.q),
    c_phi=lambda b: 4 * b["t"] ** 2 * b.s,
    zeros=lambda b: (z_zero(b["t"]), z_zero(b["t"] * b.s)),
    special_values=_cql_special,
    determinant=lambda b, n: ((1 - b.s) * (1 - b["t"] ** 2 * b.s * b.q ** n)
                              / (b.s * (1 - b.q ** (n + 1)))),
    alpha=_cql_alpha,
    beta=lambda b, n: b.q ** n * b.s * qpochhammer(b.q ** (n + 1), b.q, 2),
    beta_f=lambda b, n: b["t"] ** 2 * b.q ** (-n - 1) * qpochhammer(b.q ** (n + 1), b.q, 2),
    physical=lambda b: q_range_ok(b) and _t_ok(b["t"]),
    weight=_cql_weight,
    norm=_cql_norm,
    interval=lambda b: (0.0, float(np.pi)),
    default_bindings=(
        make_binding("cqL", s="1/2", t="1/3"),
        make_binding("cqL", s="1/3", t="2/5"),
        make_binding("cqL", s="2/5", t="1/2"),
    ),
)
