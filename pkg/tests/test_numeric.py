"""Unit tests for the floating-point weight and orthogonality checks."""
from dataclasses import replace

import numpy as np
import pytest

from src.askey.catalog import build_Pn
from src.askey.christoffel import raw_phi
from src.askey.errors import NotPhysicalError, QuadratureNonConvergenceError
from src.askey.families import get_family
from src.askey.laurent import LaurentPoly, Variable
from src.askey.models import NumericConfig, make_binding
from src.askey.numeric import (
    composite_gauss_legendre,
    gram_check,
    gram_size,
    christoffel_orthogonality_check,
    integrate,
    orthogonality_check,
    poly_values,
    sample_points,
    single_shift_weight_check,
    truncation_convergence_check,
    weight_ratio_check,
)


class TestQuadrature:
    """Tests for the composite Gauss-Legendre rule."""

    def test_polynomial_is_exact(self):
        """Test that x^3 on [0, 2] integrates to 4."""
        nodes, weights = composite_gauss_legendre(0.0, 2.0, 3, 4)
        assert np.isclose(nodes ** 3 @ weights, 4.0, rtol=1e-14)

    def test_nodes_inside_interval(self):
        """Test that every node lies in the open interval."""
        nodes, _ = composite_gauss_legendre(-1.0, 1.0, 8, 6)
        assert nodes.shape == (48,)
        assert np.all((nodes > -1.0) & (nodes < 1.0))

    def test_integrate_exponential(self, numeric_config):
        """Test the integral of e^x over [0, 1]."""
        result = integrate(np.exp, 0.0, 1.0, numeric_config)
        assert np.isclose(result.value, np.e - 1, rtol=1e-12)
        assert result.panels == 2 * numeric_config.panels

    def test_non_convergence(self):
        """Test that an integrable singularity exhausts the refinements."""
        config = NumericConfig(panels=1, quad_points=2)
        with pytest.raises(QuadratureNonConvergenceError, match="panels"):
            integrate(lambda x: 1 / np.sqrt(x), 0.0, 1.0, config)


class TestPolyValues:
    """Tests for evaluating exact polynomials on float grids."""

    def test_z_polynomial_on_circle(self):
        """Test that z + 1/z evaluates to 2 cos x."""
        family = get_family("cqHe")
        binding = family.default_bindings[0]
        poly = LaurentPoly(Variable.Z, {1: 1, -1: 1})
        x = np.array([0.1, 0.7, 1.3])
        assert np.allclose(poly_values(family, binding, poly, x), 2 * np.cos(x))

    def test_eta_polynomial_uses_coordinate(self, jacobi_binding):
        """Test that Jacobi eta-polynomials are evaluated at cos 2x."""
        poly = LaurentPoly.monomial(Variable.ETA, 1)
        x = np.array([0.2, 0.4])
        values = poly_values(get_family("J"), jacobi_binding, poly, x)
        assert np.allclose(values, np.cos(2 * x))

    def test_extended_precision(self, jacobi_binding):
        """Test that extended evaluation agrees with double evaluation."""
        poly = LaurentPoly(Variable.ETA, {0: 1, 3: -2})
        x = np.array([0.3])
        family = get_family("J")
        extended = poly_values(family, jacobi_binding, poly, x, NumericConfig(precision="extended"))
        assert np.allclose(extended, poly_values(family, jacobi_binding, poly, x))


class TestWeightRatio:
    """Tests for the shifted weight over the weight."""

    def test_mp_factor_value(self, mp_binding):
        """Test Phi(2) = a^2 + x^2 = 5 at a = 1."""
        family = get_family("MP")
        value = poly_values(family, mp_binding, raw_phi(family, mp_binding), np.array([2.0]))
        assert np.isclose(value[0].real, 5.0)

    def test_mp_ratio_is_factor(self, mp_binding):
        """Test w(a + 1)/w(a) = Phi pointwise at phi = pi/2."""
        family = get_family("MP")
        shifted = make_binding("MP", phase=mp_binding.w, a=2)
        x = np.array([2.0])
        ratio = family.weight(shifted, x, 100) / family.weight(mp_binding, x, 100)
        assert np.isclose(ratio[0], 5.0)

    @pytest.mark.parametrize("tag", ["MP", "AW", "J", "L", "He"])
    def test_ratio_equals_factor(self, tag, numeric_config):
        """Test the ratio at the default samples."""
        family = get_family(tag)
        outcome = weight_ratio_check(family, family.default_bindings[0], numeric_config)
        assert outcome.passed, outcome.residual

    def test_misnormalized_weight_fails(self, laguerre_binding, numeric_config):
        """Test that a weight scaled by 7^g is caught even though its ratio is constant."""
        family = get_family("L")

        def scaled(b, x, truncation):
            return 7.0 ** float(b["g"].re) * family.weight(b, x, truncation)

        outcome = weight_ratio_check(replace(family, weight=scaled), laguerre_binding, numeric_config)
        assert not outcome.passed
        assert np.isclose(float(outcome.residual), 6.0, rtol=1e-3)

    def test_explicit_samples(self, laguerre_binding, numeric_config):
        """Test caller-supplied sample points."""
        outcome = weight_ratio_check(get_family("L"), laguerre_binding, numeric_config, x_samples=[0.5, 1.0, 2.0])
        assert outcome.passed

    def test_not_physical(self, numeric_config):
        """Test that weights outside the physical range are refused."""
        with pytest.raises(NotPhysicalError):
            weight_ratio_check(get_family("L"), make_binding("L", g="1/4"), numeric_config)

    def test_sample_fractions(self, jacobi_binding):
        """Test that samples stay inside the interval."""
        samples = sample_points(get_family("J"), jacobi_binding)
        assert np.all((samples > 0) & (samples < np.pi / 2))


class TestOrthogonality:
    """Tests for Gram matrices."""

    def test_jacobi_ground_norm_by_quadrature(self, jacobi_binding, numeric_config):
        """Test that the integral of w P_0^2 is pi/16 to 1e-8 at g = h = 1."""
        family = get_family("J")
        p0 = build_Pn(family, jacobi_binding, 0)
        lo, hi = family.interval(jacobi_binding)

        def integrand(x):
            values = poly_values(family, jacobi_binding, p0, x)
            return family.weight(jacobi_binding, x, 100) * np.abs(values) ** 2

        result = integrate(integrand, lo, hi, numeric_config)
        assert abs(result.value - np.pi / 16) <= 1e-8 * np.pi / 16
        assert abs(family.norm(jacobi_binding, 0, 100) - np.pi / 16) <= 1e-12
        assert orthogonality_check(family, jacobi_binding, numeric_config, 0, 0).passed

    def test_off_diagonal(self, laguerre_binding, numeric_config):
        """Test <P_1, P_2> = 0 for Laguerre."""
        assert orthogonality_check(get_family("L"), laguerre_binding, numeric_config, 1, 2).passed

    @pytest.mark.parametrize("tag", ["L", "J", "He"])
    def test_gram_matrix(self, tag, numeric_config):
        """Test the Gram matrix of P_0..P_3."""
        family = get_family(tag)
        outcome = gram_check(family, family.default_bindings[0], numeric_config, 3)
        assert outcome.passed, outcome.residual
        assert "quadrature tolerance" in outcome.detail

    def test_gram_size_respects_normalizability(self, bessel_binding):
        """Test that Bessel stops at the largest normalizable degree."""
        assert gram_size(get_family("B"), bessel_binding, 8) == 3

    def test_gram_size_cap(self, laguerre_binding):
        """Test that the Gram matrix never exceeds degree five."""
        assert gram_size(get_family("L"), laguerre_binding, 8) == 6

    @pytest.mark.parametrize("tag", ["L", "J"])
    def test_christoffel_orthogonality(self, tag, numeric_config):
        """Test that the shifted polynomials are orthogonal for Phi w."""
        family = get_family(tag)
        outcome = christoffel_orthogonality_check(family, family.default_bindings[0], numeric_config, 3)
        assert outcome.passed, outcome.residual


class TestQProducts:
    """Tests that depend on truncated q-products."""

    def test_truncation_converges(self, aw_binding, numeric_config):
        """Test that doubling the truncation does not grow the residual."""
        outcome = truncation_convergence_check(get_family("AW"), aw_binding, numeric_config)
        assert outcome.passed, outcome.detail

    @pytest.mark.parametrize("j", [1, 2, 3, 4])
    def test_single_shift_weight(self, aw_binding, numeric_config, j):
        """Test the single-shift weight ratio for each a_j."""
        assert single_shift_weight_check(aw_binding, j, numeric_config).passed
