"""Class (i) families, eta(x) = x: continuous Hahn and Meixner-Pollaczek."""
import numpy as np

from src.askey.exact import I, ONE, ExactScalar, pythagorean_unit, rising_factorial, rising_product
from src.askey.families.base import (
    X,
    additive,
    cos_phi,
    elementary_symmetric,
    phase_angle,
    sin_phi,
    x_linear,
    x_zero,
)
from src.askey.hypergeometric import hyper_ratio, linear_factor, terminating_series
from src.askey.laurent import RationalFn
from src.askey.models import FamilyDescriptor, make_binding
from src.askey.special import gamma_abs2, gamma_complex


def _factorial(n: int) -> ExactScalar:
    return rising_factorial(1, n)


# continuous Hahn

def _ch_params(b):
    a1, a2 = b["a1"], b["a2"]
    return [a1, a2, a1.conj(), a2.conj()]


def _ch_b1(b) -> ExactScalar:
    return sum(_ch_params(b), ExactScalar(0))


def _ch_build(b, n):
    a1, a2, a3, a4 = _ch_params(b)
    b1 = a1 + a2 + a3 + a4
    prefactor = I ** n * rising_product([a1 + a3, a1 + a4], n) / _factorial(n)
    series = terminating_series(X, n, hyper_ratio(n, [b1 + n - 1], [a1 + a3, a1 + a4]), linear_factor(X, a1, I))
    return series * prefactor


def _ch_energy(b, n):
    return ExactScalar(n) * (_ch_b1(b) + n - 1)


def _ch_zeros(b):
    a1, a2, a3, a4 = _ch_params(b)
    return tuple(x_zero(p) for p in (I * a1, I * a2, -I * a3, -I * a4))


def _ch_special(b, n, row):
    a = _ch_params(b)
    if row < 2:
        return I ** n / _factorial(n) * rising_product([a[row] + a[2], a[row] + a[3]], n)
    return (-I) ** n / _factorial(n) * rising_product([a[row] + a[0], a[row] + a[1]], n)


def _ch_cross(a, n):
    result = ONE
    for j in (0, 1):
        for k in (2, 3):
            result = result * (a[j] + a[k] + n)
    return result


def _ch_determinant(b, n):
    a = _ch_params(b)
    b1 = sum(a, ExactScalar(0))
    return ((a[0] - a[1]) * (a[2] - a[3]) * _ch_cross(a, n)
            * rising_factorial(b1 + 2 * n, 3) * rising_factorial(b1 + 2 * n + 2, 3)
            / (rising_factorial(n + 1, 3) * rising_factorial(n + 1, 2) * (n + 1)))


def _ch_alpha(b, n):
    a1, a2, a3, a4 = a = _ch_params(b)
    b1, b2, b3, b4 = (elementary_symmetric(a, k) for k in (1, 2, 3, 4))
    big_a = (a1 - a2 + a3 - a4) * (a1 - a2 - a3 + a4)
    p = rising_factorial

    alpha3 = -I * big_a * (b1 + 2 * n + 5) / ((n + 4) * (b1 + 2 * n + 2))

    s12, s34 = a1 + a2, a3 + a4
    sq12, sq34 = a1 * a1 + a2 * a2, a3 * a3 + a4 * a4
    bracket = ((2 * n + 3) * p(b1 + n, 3)
               - (n + 1) * (2 * n + 1) * p(b1 + n + 1, 2)
               + p(ExactScalar(n + 1), 2) * (2 * n + 3) * (b1 + n + 2)
               - p(ExactScalar(n + 1), 3)
               - 6 * b2 * b2 + b3 * (3 * b1 + 4 * n + 6) + 4 * b4
               + 2 * (p(b1 + n, 2) - 4 * (n + 1) * (b1 + n + 1) + n * (n + 1)) * b2
               - (a1 ** 3 + a2 ** 3) * s34 - s12 * (a3 ** 3 + a4 ** 3)
               - sq12 * a3 * a4 - a1 * a2 * sq34
               + 4 * sq12 * sq34
               + (2 * n + 3) * (sq12 * s34 + s12 * sq34)
               + 2 * p(ExactScalar(n + 1), 2) * s12 * s34)
    alpha2 = ((b1 + 2 * n + 3) * (b1 + 2 * n + 6)
              / (p(ExactScalar(n + 3), 2) * p(b1 + 2 * n + 1, 2)) * bracket)

    alpha1 = (I * big_a * p(b1 + 2 * n + 5, 2)
              / (p(ExactScalar(n + 2), 3) * (b1 + 2 * n) * (b1 + 2 * n + 2)) * _ch_cross(a, n + 1))

    cross2 = ONE
    for j in (0, 1):
        for k in (2, 3):
            cross2 = cross2 * p(a[j] + a[k] + n, 2)
    alpha0 = cross2 * p(b1 + 2 * n + 4, 3) / (p(ExactScalar(n + 1), 4) * p(b1 + 2 * n, 3))
    return (alpha0, alpha1, alpha2, alpha3, ONE)


def _ch_beta(b, n):
    return rising_factorial(n + 1, 4) / rising_factorial(_ch_b1(b) + 2 * n + 3, 4)


def _ch_beta_f(b, n):
    b1 = _ch_b1(b)
    return rising_factorial(n + 1, 4) * rising_factorial(b1 + n + 1, 2) / rising_factorial(b1 + 2 * n + 3, 4)


def _ch_physical(b):
    return all(v.re > 0 for v in _ch_params(b))


def _ch_weight(b, x, truncation):
    a1, a2 = b["a1"].to_complex(), b["a2"].to_complex()
    return gamma_abs2(a1 + 1j * x) * gamma_abs2(a2 + 1j * x)


def _ch_norm(b, n, truncation):
    a = [v.to_complex() for v in _ch_params(b)]
    b1 = sum(a)
    num = np.prod([gamma_complex(n + a[j] + a[k]) for j in (0, 1) for k in (2, 3)])
    den = float(np.prod(np.arange(1, n + 1))) * (2 * n + b1 - 1) * gamma_complex(n + b1 - 1)
    return float(np.real(2 * np.pi * num / den))


CONTINUOUS_HAHN = FamilyDescriptor(
    tag="cH",
    name="continuous Hahn",
    mechanics="idQM",
    coordinate="i",
    slots=(additive("a1", "1/2", "complex"), additive("a2", "1/2", "complex")),
    m_degree=4,
    build=_ch_build,
    energy=_ch_energy,
    forward_coeff=lambda b, n: _ch_b1(b) + n - 1,
    backward_coeff=lambda b, n: ExactScalar(n + 1),
    leading=lambda b, n: rising_factorial(_ch_b1(b) + n - 1, n) / _factorial(n),
    potential=lambda b: RationalFn(x_linear(b["a1"]) * x_linear(b["a2"])),
    c_phi=lambda b: ONE,
    zeros=_ch_zeros,
    special_values=_ch_special,
    determinant=_ch_determinant,
    alpha=_ch_alpha,
    beta=_ch_beta,
    beta_f=_ch_beta_f,
    physical=_ch_physical,
    weight=_ch_weight,
    norm=_ch_norm,
    interval=lambda b: (-20.0, 20.0),
    default_bindings=(
        make_binding("cH", a1="1/2+1/3i", a2="3/4-1/5i"),
        make_binding("cH", a1="2/3", a2="1/3+1/2i"),
        make_binding("cH", a1="5/4+1/7i", a2="2/5+2/3i"),
    ),
)


# Meixner-Pollaczek

def _mp_build(b, n):
    a, w = b["a"], b.w
    prefactor = rising_factorial(2 * a, n) * w ** n / _factorial(n)
    argument = ONE - w.conj() * w.conj()
    series = terminating_series(X, n, hyper_ratio(n, [], [2 * a], argument), linear_factor(X, a, I))
    return series * prefactor


def _mp_zeros(b):
    a = b["a"]
    return (x_zero(I * a), x_zero(-I * a))


def _mp_special(b, n, row):
    a, w = b["a"], b.w
    unit = w if row == 0 else w.conj()
    return rising_factorial(2 * a, n) * unit ** n / _factorial(n)


def _mp_alpha(b, n):
    a, w = b["a"], b.w
    return (rising_factorial(2 * a + n, 2) / rising_factorial(ExactScalar(n + 1), 2),
            -2 * cos_phi(w) * (2 * a + n + 1) / (n + 2),
            ONE)


def _mp_weight(b, x, truncation):
    a, phi = b["a"].to_complex().real, phase_angle(b.w)
    return np.exp((2 * phi - np.pi) * x) * gamma_abs2(a + 1j * x)


def _mp_norm(b, n, truncation):
    a, phi = b["a"].to_complex().real, phase_angle(b.w)
    return float(2 * np.pi * np.real(gamma_complex(n + 2 * a))
                 / (np.prod(np.arange(1, n + 1)) * (2 * np.sin(phi)) ** (2 * a)))


def _mp_physical(b):
    a = b["a"]
    return a.is_real() and a.re > 0 and b.w.im > 0


MEIXNER_POLLACZEK = FamilyDescriptor(
    tag="MP",
    name="Meixner-Pollaczek",
    mechanics="idQM",
    coordinate="i",
    slots=(additive("a", "1/2"),),
    m_degree=2,
    build=_mp_build,
    energy=lambda b, n: 2 * n * sin_phi(b.w),
    forward_coeff=lambda b, n: 2 * sin_phi(b.w),
    backward_coeff=lambda b, n: ExactScalar(n + 1),
    leading=lambda b, n: (2 * sin_phi(b.w)) ** n / _factorial(n),
    uses_phase=True,
    potential=lambda b: RationalFn(x_linear(b["a"]) * (I * b.w.conj())),
    c_phi=lambda b: ONE,
    zeros=_mp_zeros,
    special_values=_mp_special,
    determinant=lambda b, n: -2 * I * sin_phi(b.w) * (2 * b["a"] + n) / (n + 1),
    alpha=_mp_alpha,
    beta=lambda b, n: rising_factorial(ExactScalar(n + 1), 2) / (2 * sin_phi(b.w)) ** 2,
    beta_f=lambda b, n: rising_factorial(ExactScalar(n + 1), 2),
    physical=_mp_physical,
    weight=_mp_weight,
    norm=_mp_norm,
    interval=lambda b: (-60.0, 60.0),
    default_bindings=(
        make_binding("MP", phase=pythagorean_unit(2, 1), a="1/2"),
        make_binding("MP", phase=pythagorean_unit(3, 1), a="1"),
        make_binding("MP", phase=pythagorean_unit(3, 2), a="3/4"),
    ),
)

