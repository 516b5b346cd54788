"""Shared pytest fixtures for testing."""
import numpy as np
import pytest

from src.askey.catalog import clear_cache
from src.askey.exact import ExactScalar, pythagorean_unit
from src.askey.laurent import LaurentPoly, Variable
from src.askey.models import NumericConfig, ParamBinding, make_binding


@pytest.fixture(autouse=True)
def fresh_cache():
    """Start every test with an empty P_n cache."""
    clear_cache()
    yield
    clear_cache()


@pytest.fixture
def mp_binding() -> ParamBinding:
    """Meixner-Pollaczek with a = 1 and phi = pi/2 (w = i)."""
    return make_binding("MP", phase=pythagorean_unit(1, 1), a=1)


@pytest.fixture
def laguerre_binding() -> ParamBinding:
    """Laguerre with g = 1."""
    return make_binding("L", g=1)


@pytest.fixture
def jacobi_binding() -> ParamBinding:
    """Jacobi with g = h = 1."""
    return make_binding("J", g=1, h=1)


@pytest.fixture
def aw_binding() -> ParamBinding:
    """Askey-Wilson with real parameters at q = 1/4."""
    return make_binding("AW", s="1/2", a1="1/2", a2="1/3", a3="-1/5", a4="1/7")


@pytest.fixture
def bessel_binding() -> ParamBinding:
    return make_binding("B", h="7/3")


@pytest.fixture
def numeric_config() -> NumericConfig:
    """Default tolerances with a lighter initial panel count."""
    return NumericConfig(panels=32)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


def random_scalar(rng: np.random.Generator) -> ExactScalar:
    """Gaussian rational with small numerators and denominators."""
    re = int(rng.integers(-9, 10))
    im = int(rng.integers(-9, 10))
    return ExactScalar(re, im) / int(rng.integers(1, 8))


def random_poly(rng: np.random.Generator, var: Variable = Variable.X, low: int = 0, high: int = 4) -> LaurentPoly:
    """Random polynomial with exponents in [low, high]."""
    return LaurentPoly(var, {e: random_scalar(rng) for e in range(low, high + 1)})


@pytest.fixture
def suite_ini() -> str:
    """Small valid suite configuration."""
    return (
        "[suite]\n"
        "families = MP, L\n"
        "suites = basic, christoffel\n"
        "n_max = 3\n"
        "\n"
        "[numeric]\n"
        "qpoch_truncation = 100\n"
        "\n"
        "[family.MP]\n"
        "a = 1/2\n"
        "m = 2\n"
        "n = 1\n"
        "\n"
        "[family.L.small]\n"
        "g = 3/2\n"
    )
