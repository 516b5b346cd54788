"""Unit tests for building P_n and the family-level identities."""
from fractions import Fraction

import pytest

from src.askey.catalog import (
    build_Pn,
    eta_form,
    eval_at_special_point,
    evaluate_sum,
    leading_coefficient_check,
    perturb_binding,
    potential_V,
    shift_binding,
    spectral_check,
    special_value_check,
    spectral_data,
    symmetry_check,
)
from src.askey.errors import IndexOutOfRangeError, NotIdQMError, UnboundParameterError
from src.askey.exact import ExactScalar
from src.askey.families import family_tags, get_family
from src.askey.laurent import LaurentPoly, Variable
from src.askey.models import make_binding


ETA = Variable.ETA


class TestRegistry:
    """Tests for the family registry."""

    def test_eighteen_families(self):
        """Test that every family of the scheme is registered."""
        assert len(family_tags()) == 18

    def test_unknown_family(self):
        """Test that an unknown tag is rejected."""
        with pytest.raises(ValueError, match="unknown family"):
            get_family("XYZ")

    def test_defaults_present(self):
        """Test that every family ships default bindings."""
        for tag in family_tags():
            assert get_family(tag).default_bindings, tag


class TestBuildPn:
    """Tests for P_n construction."""

    def test_hermite(self):
        """Test H_2 = 4 eta^2 - 2."""
        poly = build_Pn(get_family("He"), make_binding("He"), 2)
        assert poly == LaurentPoly(ETA, {2: 4, 0: -2})

    def test_laguerre(self, laguerre_binding):
        """Test L_1^(1/2) = 3/2 - eta at g = 1."""
        poly = build_Pn(get_family("L"), laguerre_binding, 1)
        assert poly == LaurentPoly(ETA, {0: Fraction(3, 2), 1: -1})

    def test_meixner_pollaczek(self, mp_binding):
        """Test P_1 = 2x at phi = pi/2."""
        poly = build_Pn(get_family("MP"), mp_binding, 1)
        assert poly == LaurentPoly(Variable.X, {1: 2})

    def test_boundary_indices(self, laguerre_binding):
        """Test P_{-1} = 0 and P_0 = 1."""
        family = get_family("L")
        assert build_Pn(family, laguerre_binding, -1).is_zero()
        assert build_Pn(family, laguerre_binding, 0) == 1

    def test_negative_index(self, laguerre_binding):
        """Test that n < -1 is rejected."""
        with pytest.raises(ValueError, match="at least -1"):
            build_Pn(get_family("L"), laguerre_binding, -2)

    def test_unbound_q(self):
        """Test that a q-family binding without s is rejected."""
        with pytest.raises(UnboundParameterError):
            build_Pn(get_family("cbqHe"), make_binding("cbqHe", a="1/2"), 2)

    @pytest.mark.parametrize("tag", ["W", "AW", "cqJ", "qMP", "J", "B"])
    def test_leading_coefficient(self, tag):
        """Test that P_n has eta-degree n and leading coefficient c_n."""
        family = get_family(tag)
        binding = family.default_bindings[0]
        for n in range(4):
            assert leading_coefficient_check(family, binding, n)

    @pytest.mark.parametrize("tag", ["AW", "cqH", "qMP", "cqL"])
    def test_z_symmetry(self, tag):
        """Test that class iii/iv polynomials are polynomials in eta."""
        family = get_family(tag)
        binding = family.default_bindings[0]
        assert symmetry_check(family, binding, 3).passed


class TestSpectral:
    """Tests for energies and shift coefficients."""

    @pytest.mark.parametrize("tag", ["He", "L", "J", "MP", "W", "AW", "cqHe"])
    def test_factorized_energy(self, tag):
        """Test E_0 = 0 and f_n b_{n-1} = E_n."""
        family = get_family(tag)
        binding = family.default_bindings[0]
        for n in range(4):
            assert spectral_check(family, binding, n).passed

    def test_laguerre_spectral_data(self, laguerre_binding):
        """Test E_3 = 12, f_3 = -2 and b_3 = -8 for Laguerre."""
        data = spectral_data(get_family("L"), laguerre_binding, 3)
        assert data.energy == 12
        assert data.forward == -2
        assert data.backward == -8

    def test_potential_needs_idqm(self, laguerre_binding):
        """Test that oQM families have no difference potential."""
        with pytest.raises(NotIdQMError):
            potential_V(get_family("L"), laguerre_binding)


class TestShifts:
    """Tests for parameter shifts and perturbation."""

    def test_additive_shift(self, laguerre_binding):
        """Test g -> g + 1 for Laguerre."""
        shifted = shift_binding(get_family("L"), laguerre_binding)
        assert shifted["g"] == 2

    def test_q_power_shift(self, aw_binding):
        """Test a_i -> a_i q^(1/2) for Askey-Wilson."""
        shifted = shift_binding(get_family("AW"), aw_binding, 2)
        assert shifted["a1"] == ExactScalar(Fraction(1, 8))
        assert shifted.q_sqrt == aw_binding.q_sqrt

    def test_perturbation_is_deterministic(self, laguerre_binding):
        """Test that the same seed gives the same perturbed binding."""
        family = get_family("L")
        first = perturb_binding(family, laguerre_binding, seed=7)
        second = perturb_binding(family, laguerre_binding, seed=7)
        assert first == second
        assert first != laguerre_binding

    def test_perturbation_is_small_rational(self, laguerre_binding):
        """Test that the perturbation is k/997 with small k."""
        perturbed = perturb_binding(get_family("L"), laguerre_binding, seed=1)
        eps = (perturbed["g"] - laguerre_binding["g"]).re
        assert eps.denominator == 997
        assert 0 < eps < Fraction(20, 997)


class TestSpecialValues:
    """Tests for values at the zeros of the Christoffel factor."""

    def test_laguerre_at_origin(self, laguerre_binding):
        """Test P_2(0) = (3/2)_2 / 2! at g = 1."""
        value = eval_at_special_point(get_family("L"), laguerre_binding, 2, 0)
        assert value == ExactScalar(Fraction(15, 8))

    def test_index_out_of_range(self, laguerre_binding):
        """Test that a missing zero index raises."""
        with pytest.raises(IndexOutOfRangeError):
            eval_at_special_point(get_family("L"), laguerre_binding, 2, 1)

    def test_order_exceeds_multiplicity(self, laguerre_binding):
        """Test that derivative rows need a multiple zero."""
        with pytest.raises(IndexOutOfRangeError, match="multiplicity"):
            eval_at_special_point(get_family("L"), laguerre_binding, 2, 0, order=1)

    @pytest.mark.parametrize("tag", ["L", "J", "MP", "W", "AW", "cqJ"])
    def test_closed_forms(self, tag):
        """Test computed special values against the closed forms."""
        family = get_family(tag)
        binding = family.default_bindings[0]
        for n in range(4):
            assert special_value_check(family, binding, n).passed


class TestEvaluateSum:
    """Tests for linear combinations of P_n."""

    def test_combination(self, laguerre_binding):
        """Test P_0 - P_1 = eta - 1/2 at g = 1."""
        family = get_family("L")
        total = evaluate_sum(family, laguerre_binding, 0, [ExactScalar(1), ExactScalar(-1)])
        assert total == LaurentPoly(ETA, {1: 1, 0: Fraction(-1, 2)})

    def test_eta_form_of_hermite(self):
        """Test that oQM polynomials are already in eta."""
        family = get_family("He")
        binding = make_binding("He")
        assert eta_form(family, binding, 3) == build_Pn(family, binding, 3)
