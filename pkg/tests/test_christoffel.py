"""Unit tests for the Christoffel factor and expansion coefficients."""
from fractions import Fraction

import pytest

from src.askey.christoffel import (
    D_matrix_det,
    alpha_closed_form,
    alpha_from_determinants,
    composition_check_aw,
    compute_phi,
    degree_check,
    determinant_check,
    diagonal_nonvanishing,
    expansion_residual,
    phi_check,
    raw_phi,
    single_shift_aw,
    single_shift_product_check,
    trivial_phi_check,
    verify_expansion,
)
from src.askey.errors import NonRealParameterError, NotPhysicalError, ZeroDenominatorError
from src.askey.exact import ExactScalar
from src.askey.families import get_family
from src.askey.laurent import LaurentPoly, Variable
from src.askey.models import make_binding


NONTRIVIAL = ["cH", "MP", "W", "cdH", "AW", "cdqH", "ASC", "cbqHe", "cqJ", "cqL", "cqH", "qMP", "L", "J", "B", "pJ"]


class TestPhi:
    """Tests for the Christoffel factor."""

    def test_laguerre_factor(self, laguerre_binding):
        """Test that the Laguerre factor is eta itself."""
        assert raw_phi(get_family("L"), laguerre_binding) == LaurentPoly.monomial(Variable.ETA, 1)

    def test_laguerre_factorization(self, laguerre_binding):
        """Test m = 1, c_phi = 1 and the zero at the origin."""
        factor = compute_phi(get_family("L"), laguerre_binding)
        assert factor.m == 1
        assert factor.c_phi == 1
        assert factor.zeros[0].eta == 0

    @pytest.mark.parametrize("tag", ["He", "cqHe"])
    def test_trivial_factor(self, tag):
        """Test that families without zeros have the constant factor 1."""
        family = get_family(tag)
        assert trivial_phi_check(family, family.default_bindings[0])

    def test_trivial_check_needs_trivial_family(self, laguerre_binding):
        """Test that the trivial check refuses families with zeros."""
        with pytest.raises(ValueError, match="nontrivial"):
            trivial_phi_check(get_family("L"), laguerre_binding)

    @pytest.mark.parametrize("tag", NONTRIVIAL)
    def test_printed_factor_data(self, tag):
        """Test the leading coefficient and zeros of every nontrivial factor."""
        family = get_family(tag)
        outcome = phi_check(family, family.default_bindings[0])
        assert outcome.passed, outcome.residual


class TestExpansion:
    """Tests for the Christoffel expansion."""

    def test_laguerre_n0(self, laguerre_binding):
        """Test eta * 1 = -(-3/2 P_0 + P_1) at g = 1."""
        printed = alpha_closed_form(get_family("L"), laguerre_binding, 0)
        assert printed.alpha == (ExactScalar(Fraction(-3, 2)), ExactScalar(1))
        assert printed.beta == -1
        assert expansion_residual(get_family("L"), laguerre_binding, 0, printed).is_zero()

    @pytest.mark.parametrize("tag", NONTRIVIAL)
    def test_expansion_holds(self, tag):
        """Test the expansion with both coefficient paths for small n."""
        family = get_family(tag)
        binding = family.default_bindings[0]
        for n in range(3):
            outcome = verify_expansion(family, binding, n)
            assert outcome.passed, f"n={n}: {outcome.detail} {outcome.residual}"

    def test_mutation_is_detected(self, mp_binding):
        """Test that perturbing alpha_{n,0} breaks the identity."""
        outcome = verify_expansion(get_family("MP"), mp_binding, 1, mutate=True)
        assert not outcome.passed
        assert outcome.detail == "closed-form coefficients"

    def test_determinant_path_matches_printed(self, jacobi_binding):
        """Test that determinant ratios reproduce the printed Jacobi coefficients."""
        family = get_family("J")
        for n in range(3):
            computed = alpha_from_determinants(family, jacobi_binding, n)
            printed = alpha_closed_form(family, jacobi_binding, n)
            assert computed.alpha == printed.alpha
            assert computed.beta == printed.beta
            assert computed.beta_f == printed.beta_f

    def test_vanishing_normalizer(self):
        """Test that P_n vanishing at a simple zero raises."""
        binding = make_binding("L", g="-1/2")
        with pytest.raises(ZeroDenominatorError):
            alpha_from_determinants(get_family("L"), binding, 1)

    @pytest.mark.parametrize("tag", ["MP", "W", "AW", "cqJ", "J"])
    def test_degree(self, tag):
        """Test eta-degree n + m and leading coefficient beta_n c_{n+m}."""
        family = get_family(tag)
        binding = family.default_bindings[0]
        for n in range(3):
            assert degree_check(family, binding, n).passed


class TestDeterminant:
    """Tests for the printed determinants."""

    def test_laguerre_single_column(self, laguerre_binding):
        """Test D_2^(0) = 1 and D_2^(1) = P_3(0)/P_2(0) = 7/6 for Laguerre at g = 1."""
        family = get_family("L")
        assert D_matrix_det(family, laguerre_binding, 2, [0]) == 1
        assert D_matrix_det(family, laguerre_binding, 2, [1]) == ExactScalar(Fraction(7, 6))

    def test_column_count(self, laguerre_binding):
        """Test that the number of columns must equal m."""
        with pytest.raises(ValueError, match="column indices"):
            D_matrix_det(get_family("L"), laguerre_binding, 2, [0, 1])

    @pytest.mark.parametrize("tag", ["MP", "W", "AW", "cqL", "J"])
    def test_printed_determinant(self, tag):
        """Test D_n^(0..m-1) against its closed form."""
        family = get_family(tag)
        binding = family.default_bindings[0]
        for n in range(3):
            assert determinant_check(family, binding, n).passed

    def test_bessel_from_n1(self, bessel_binding):
        """Test the Bessel determinant for n >= 1."""
        family = get_family("B")
        for n in range(1, 4):
            assert determinant_check(family, bessel_binding, n).passed


class TestNonvanishing:
    """Tests for beta_n alpha_{n,0} at physical bindings."""

    def test_physical(self, jacobi_binding):
        """Test that the diagonal coefficient is nonzero."""
        assert diagonal_nonvanishing(get_family("J"), jacobi_binding, 2)

    def test_not_physical(self):
        """Test that bindings outside the physical range are refused."""
        with pytest.raises(NotPhysicalError):
            diagonal_nonvanishing(get_family("L"), make_binding("L", g="1/4"), 1)


class TestSingleShift:
    """Tests for the Askey-Wilson single-parameter shifts."""

    @pytest.mark.parametrize("j", [1, 2, 3, 4])
    def test_two_term_expansion(self, aw_binding, j):
        """Test the two-term expansion for each a_j."""
        for n in range(3):
            assert single_shift_aw(aw_binding, j, n).passed

    def test_product_of_factors(self, aw_binding):
        """Test that the four factors multiply to the full factor."""
        assert single_shift_product_check(aw_binding).passed

    def test_composition(self, aw_binding):
        """Test that four single shifts compose to the full shift."""
        for n in range(3):
            assert composition_check_aw(aw_binding, n).passed

    def test_complex_parameter(self):
        """Test that a complex a_j is rejected."""
        binding = get_family("AW").default_bindings[2]
        with pytest.raises(NonRealParameterError):
            single_shift_aw(binding, 1, 0)

    def test_index_range(self, aw_binding):
        """Test that j outside 1..4 is rejected."""
        with pytest.raises(ValueError, match="1..4"):
            single_shift_aw(aw_binding, 5, 0)
