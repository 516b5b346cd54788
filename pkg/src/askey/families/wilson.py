"""Class (ii) families, eta(x) = x^2: Wilson and continuous dual Hahn."""
import numpy as np

from src.askey.exact import I, ONE, ExactScalar, rising_factorial, rising_product
from src.askey.families.base import (
    X,
    additive,
    closure_errors,
    elementary_symmetric,
    pairs,
    values,
    wilson_denominator,
    x_linear,
    x_zero,
)
from src.askey.hypergeometric import hyper_ratio, quadratic_factor, terminating_series
from src.askey.laurent import RationalFn, product
from src.askey.models import FamilyDescriptor, make_binding
from src.askey.special import gamma_abs2, gamma_complex

W_NAMES = ("a1", "a2", "a3", "a4")
CDH_NAMES = ("a1", "a2", "a3")


def _wilson_potential(b, names):
    return RationalFn(product((x_linear(a) for a in values(b, *names)), X), wilson_denominator())


def _zeros(b, names):
    return tuple(x_zero(I * a, squared=True) for a in values(b, *names))


def _special(b, names, n, row):
    a = values(b, *names)
    return rising_product([a[row] + a[k] for k in range(len(a)) if k != row], n)


def _pair_product(a, fn):
    result = ONE
    for x, y in pairs(a):
        result = result * fn(x, y)
    return result


def _wilson_weight(b, names, x):
    result = np.ones_like(np.asarray(x, dtype=float))
    for a in values(b, *names):
        result = result * gamma_abs2(a.to_complex() + 1j * x)
    return result / gamma_abs2(2j * x)


def _physical(b, names):
    return all(a.re > 0 for a in values(b, *names))


# Wilson

def _w_b(b, k):
    return elementary_symmetric(values(b, *W_NAMES), k)


def _w_build(b, n):
    a1, a2, a3, a4 = values(b, *W_NAMES)
    b1 = a1 + a2 + a3 + a4
    lower = [a1 + a2, a1 + a3, a1 + a4]
    series = terminating_series(X, n, hyper_ratio(n, [b1 + n - 1], lower), quadratic_factor(X, a1))
    return series * rising_product(lower, n)


def _w_determinant(b, n):
    a = values(b, *W_NAMES)
    b1 = _w_b(b, 1)
    return (_pair_product(a, lambda x, y: (x - y) * (x + y + n))
            * rising_factorial(b1 + 2 * n, 3) * rising_factorial(b1 + 2 * n + 2, 3))


def _w_alpha(b, n):
    a = values(b, *W_NAMES)
    b1, b2, b3, b4 = (elementary_symmetric(a, k) for k in (1, 2, 3, 4))
    p = rising_factorial
    bn = b1 + n

    alpha3 = (-(b1 + 2 * n + 5) / (b1 + 2 * n + 2)
              * (p(b1 + n + 1, 3) + (3 * n * n + 12 * n + 11) * b1 + 3 * p(ExactScalar(n + 1), 3)
                 - 2 * b1 * b2 + 4 * b3))

    bracket = ((3 * n * n + 9 * n + 7) * p(bn, 4)
               + (b3 + (2 * n + 3) * (2 * b2 - 1)) * p(bn, 3)
               + (2 * b4 - (5 * n + 6) * b3 + b2 * (b2 - 2 * (n + 1) * (2 * n + 1))
                  + 3 * (n + 1) * (n ** 3 + 5 * n * n + 10 * n + 7)) * p(bn, 2)
               + (2 * (2 * n + 5) * b4 + (5 * n * (n + 1) - 6 * b2) * b3
                  - 2 * (n + 1) * b2 * (2 * b2 - 2 * n * n - 3 * n - 4)
                  + (n + 1) * (6 * n ** 3 + 28 * n * n + 53 * n + 36)) * bn
               + 2 * (n + 2) * (n + 4) * b4 + b3 * (6 * b3 + 6 * n * b2 - n * (n + 1) * (n - 4))
               + (n + 1) * b2 * ((n - 4) * b2 + 2 * (3 * n * n + 5 * n + 4))
               + (n + 1) * (7 * n ** 3 + 32 * n * n + 57 * n + 36))
    alpha2 = (b1 + 2 * n + 3) * (b1 + 2 * n + 6) / p(b1 + 2 * n + 1, 2) * bracket

    alpha1 = (-_pair_product(a, lambda x, y: x + y + n + 1)
              * p(b1 + 2 * n + 5, 2) / ((b1 + 2 * n) * (b1 + 2 * n + 2))
              * (3 * (n + 1) * p(bn, 2) + (3 * n + 1) * b1 + n * (n + 1) * (n + 5)
                 + 2 * b1 * b2 - 4 * b3))

    alpha0 = (_pair_product(a, lambda x, y: p(x + y + n, 2))
              * p(b1 + 2 * n + 4, 3) / p(b1 + 2 * n, 3))
    return (alpha0, alpha1, alpha2, alpha3, ONE)


def _w_norm(b, n, truncation):
    a = [v.to_complex() for v in values(b, *W_NAMES)]
    b1 = sum(a)
    pair_gamma = np.prod([gamma_complex(n + x + y) for x, y in pairs(a)])
    poch = np.prod([n + b1 - 1 + k for k in range(n)]) if n else 1.0
    factorial = float(np.prod(np.arange(1, n + 1)))
    return float(np.real(2 * np.pi * factorial * poch * pair_gamma / gamma_complex(2 * n + b1)))


WILSON = FamilyDescriptor(
    tag="W",
    name="Wilson",
    mechanics="idQM",
    coordinate="ii",
    slots=tuple(additive(name, "1/2", "complex") for name in W_NAMES),
    m_degree=4,
    build=_w_build,
    energy=lambda b, n: ExactScalar(n) * (_w_b(b, 1) + n - 1),
    forward_coeff=lambda b, n: -ExactScalar(n) * (_w_b(b, 1) + n - 1),
    backward_coeff=lambda b, n: -ONE,
    leading=lambda b, n: (-1) ** n * rising_factorial(_w_b(b, 1) + n - 1, n),
    potential=lambda b: _wilson_potential(b, W_NAMES),
    c_phi=lambda b: ONE,
    zeros=lambda b: _zeros(b, W_NAMES),
    special_values=lambda b, n, row: _special(b, W_NAMES, n, row),
    determinant=_w_determinant,
    alpha=_w_alpha,
    beta=lambda b, n: ONE / rising_factorial(_w_b(b, 1) + 2 * n + 3, 4),
    beta_f=lambda b, n: (rising_factorial(n + 1, 2) * rising_factorial(_w_b(b, 1) + n + 1, 2)
                         / rising_factorial(_w_b(b, 1) + 2 * n + 3, 4)),
    closure=lambda b: closure_errors(b, W_NAMES),
    physical=lambda b: _physical(b, W_NAMES),
    weight=lambda b, x, truncation: _wilson_weight(b, W_NAMES, x),
    norm=_w_norm,
    interval=lambda b: (0.0, 20.0),
    default_bindings=(
        make_binding("W", a1="1/2", a2="1/3", a3="3/4", a4="1/5"),
        make_binding("W", a1="1/2+1/3i", a2="1/2-1/3i", a3="2/3", a4="1/4"),
        make_binding("W", a1="1/3", a2="2/5", a3="5/7", a4="3/4"),
    ),
)


# continuous dual Hahn

def _cdh_build(b, n):
    a1, a2, a3 = values(b, *CDH_NAMES)
    lower = [a1 + a2, a1 + a3]
    series = terminating_series(X, n, hyper_ratio(n, [], lower), quadratic_factor(X, a1))
    return series * rising_product(lower, n)


def _cdh_alpha(b, n):
    a = values(b, *CDH_NAMES)
    b1, b2 = elementary_symmetric(a, 1), elementary_symmetric(a, 2)
    alpha2 = -(b2 + rising_factorial(b1 + n, 2) + (2 * n + 5) * (b1 + n + 1) + n + 2)
    alpha1 = _pair_product(a, lambda x, y: x + y + n + 1) * (2 * b1 + 3 * (n + 1))
    alpha0 = -_pair_product(a, lambda x, y: rising_factorial(x + y + n, 2))
    return (alpha0, alpha1, alpha2, ONE)


def _cdh_norm(b, n, truncation):
    a = [v.to_complex() for v in values(b, *CDH_NAMES)]
    pair_gamma = np.prod([gamma_complex(n + x + y) for x, y in pairs(a)])
    return float(np.real(2 * np.pi * np.prod(np.arange(1, n + 1)) * pair_gamma))


CONTINUOUS_DUAL_HAHN = FamilyDescriptor(
    tag="cdH",
    name="continuous dual Hahn",
    mechanics="idQM",
    coordinate="ii",
    slots=tuple(additive(name, "1/2", "complex") for name in CDH_NAMES),
    m_degree=3,
    build=_cdh_build,
    energy=lambda b, n: ExactScalar(n),
    forward_coeff=lambda b, n: ExactScalar(-n),
    backward_coeff=lambda b, n: -ONE,
    leading=lambda b, n: ExactScalar((-1) ** n),
    potential=lambda b: _wilson_potential(b, CDH_NAMES),
    c_phi=lambda b: ONE,
    zeros=lambda b: _zeros(b, CDH_NAMES),
    special_values=lambda b, n, row: _special(b, CDH_NAMES, n, row),
    determinant=lambda b, n: -_pair_product(values(b, *CDH_NAMES), lambda x, y: (x - y) * (x + y + n)),
    alpha=_cdh_alpha,
    beta=lambda b, n: -ONE,
    beta_f=lambda b, n: -rising_factorial(n + 1, 2),
    closure=lambda b: closure_errors(b, CDH_NAMES),
    physical=lambda b: _physical(b, CDH_NAMES),
    weight=lambda b, x, truncation: _wilson_weight(b, CDH_NAMES, x),
    norm=_cdh_norm,
    interval=lambda b: (0.0, 20.0),
    default_bindings=(
        make_binding("cdH", a1="1/2", a2="1/3", a3="3/4"),
        make_binding("cdH", a1="1/2+1/4i", a2="1/2-1/4i", a3="2/3"),
        make_binding("cdH", a1="1/5", a2="2/3", a3="5/4"),
    ),
)
