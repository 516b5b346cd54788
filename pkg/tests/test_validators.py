"""Unit tests for binding and suite validators."""
from fractions import Fraction

import pytest

from src.askey.exact import ExactScalar
from src.askey.validators import BindingValidator, SuiteValidator, parse_phase


class TestParsePhase:
    """Tests for the 'm,n' phase notation."""

    def test_pair(self):
        """Test that '2,1' is the unit 3/5 + 4/5 i."""
        assert parse_phase("2,1") == ExactScalar(Fraction(3, 5), Fraction(4, 5))

    def test_spaces(self):
        """Test that whitespace around the integers is ignored."""
        assert parse_phase(" 1 , 1 ") == ExactScalar(0, 1)

    def test_not_a_pair(self):
        """Test that a single number is rejected."""
        with pytest.raises(ValueError, match="m,n"):
            parse_phase("3")

    def test_not_integers(self):
        """Test that fractions are rejected."""
        with pytest.raises(ValueError, match="integers"):
            parse_phase("1/2,1")


class TestBindingValidator:
    """Tests for BindingValidator."""

    def test_valid_binding(self):
        """Test that a valid Laguerre binding passes validation."""
        validator = BindingValidator()
        result = validator.validate("L", {"g": "3/2"})

        assert result.is_valid is True
        assert len(result.errors) == 0
        assert len(result.warnings) == 0

    def test_unknown_family(self):
        """Test that an unknown tag is caught."""
        result = BindingValidator().validate("XYZ", {})

        assert result.is_valid is False
        assert "unknown family" in result.errors[0]

    def test_missing_parameter(self):
        """Test that a missing slot is caught."""
        result = BindingValidator().validate("J", {"g": "1"})

        assert result.is_valid is False
        assert any("missing parameter 'h'" in err for err in result.errors)

    def test_unknown_parameter(self):
        """Test that an extra name is caught."""
        result = BindingValidator().validate("L", {"g": "1", "beta": "2"})

        assert result.is_valid is False
        assert any("unknown parameter 'beta'" in err for err in result.errors)

    def test_missing_s(self):
        """Test that q-families need s."""
        result = BindingValidator().validate("cbqHe", {"a": "1/2"})

        assert result.is_valid is False
        assert any("'s'" in err for err in result.errors)

    def test_unexpected_s(self):
        """Test that families without q reject s."""
        result = BindingValidator().validate("L", {"g": "1", "s": "1/2"})

        assert result.is_valid is False
        assert any("does not take 's'" in err for err in result.errors)

    def test_zero_s(self):
        """Test that s = 0 is caught."""
        result = BindingValidator().validate("cqHe", {"s": "0"})

        assert result.is_valid is False
        assert any("nonzero" in err for err in result.errors)

    def test_missing_phase(self):
        """Test that Meixner-Pollaczek needs a phase."""
        result = BindingValidator().validate("MP", {"a": "1/2"})

        assert result.is_valid is False
        assert any("phase" in err for err in result.errors)

    def test_bad_literal(self):
        """Test that a malformed literal is caught."""
        result = BindingValidator().validate("L", {"g": "3/x"})

        assert result.is_valid is False
        assert any("L.g" in err for err in result.errors)

    def test_real_slot(self):
        """Test that a complex value in a real slot is caught."""
        result = BindingValidator().validate("L", {"g": "1+i"})

        assert result.is_valid is False
        assert any("must be real" in err for err in result.errors)

    def test_conjugate_pair_accepted(self):
        """Test that a conjugate pair of Wilson parameters is closed."""
        params = {"a1": "1/2+1/3i", "a2": "1/2-1/3i", "a3": "2/3", "a4": "1/4"}
        assert BindingValidator().validate("W", params).is_valid is True

    def test_closure_violation(self):
        """Test that a complex parameter without its conjugate is caught."""
        params = {"a1": "1/2+1/3i", "a2": "1/2", "a3": "2/3", "a4": "1/4"}
        result = BindingValidator().validate("W", params)

        assert result.is_valid is False
        assert any("complex conjugation" in err for err in result.errors)

    def test_non_physical_is_warning(self):
        """Test that bindings outside the physical range only warn."""
        result = BindingValidator().validate("L", {"g": "1/4"})

        assert result.is_valid is True
        assert any("physical range" in w for w in result.warnings)

    def test_build(self):
        """Test that build returns exact values with s and phase."""
        binding = BindingValidator().build("qMP", {"a": "1/2", "s": "1/3", "phase": "2,1"}, label="demo")

        assert binding["a"] == ExactScalar(Fraction(1, 2))
        assert binding.q == ExactScalar(Fraction(1, 9))
        assert binding.w == ExactScalar(Fraction(3, 5), Fraction(4, 5))
        assert binding.label == "demo"


class TestSuiteValidator:
    """Tests for SuiteValidator."""

    def test_valid_document(self):
        """Test that a small document passes validation."""
        document = {
            "suite": {"families": ["MP", "L"], "suites": ["basic"]},
            "numeric": {"tol_rel": 1e-9},
            "bindings": [{"family": "L", "label": "small", "values": {"g": "3/2"}}],
        }
        result = SuiteValidator().validate(document)

        assert result.is_valid is True
        assert len(result.errors) == 0

    def test_all_families(self):
        """Test that 'all' selects every family."""
        assert SuiteValidator().validate({"suite": {"families": ["all"]}}).is_valid is True

    def test_unknown_family(self):
        """Test that unknown family tags are caught."""
        result = SuiteValidator().validate({"suite": {"families": ["MP", "Q"]}})

        assert result.is_valid is False
        assert "unknown families" in result.errors[0]

    def test_unknown_suite(self):
        """Test that unknown suite names are caught."""
        result = SuiteValidator().validate({"suite": {"suites": ["basic", "fuzz"]}})

        assert result.is_valid is False
        assert "unknown suites" in result.errors[0]

    def test_empty_suites(self):
        """Test that an empty suite list is caught."""
        result = SuiteValidator().validate({"suite": {"suites": []}})

        assert result.is_valid is False
        assert "at least one suite" in result.errors[0]

    def test_numeric_ranges(self):
        """Test that tol_rel and qpoch_truncation ranges are enforced."""
        result = SuiteValidator().validate({"numeric": {"tol_rel": 1e-2, "qpoch_truncation": 10}})

        assert result.is_valid is False
        assert len(result.errors) == 2

    def test_unknown_numeric_family(self):
        """Test that unknown numeric families are caught."""
        result = SuiteValidator().validate({"numeric": {"families": ["Z"]}})

        assert result.is_valid is False
        assert "numeric families" in result.errors[0]

    def test_binding_errors_are_labelled(self):
        """Test that binding messages carry the binding label."""
        document = {"bindings": [{"family": "L", "label": "bad", "values": {"g": "x"}}]}
        result = SuiteValidator().validate(document)

        assert result.is_valid is False
        assert result.errors[0].startswith("[bad]")
