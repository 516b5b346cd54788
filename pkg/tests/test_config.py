"""Unit tests for environment defaults and suite configuration files."""
from fractions import Fraction

import pytest

from src.askey.config import (
    Config,
    default_spec,
    get_config,
    load_config,
    parse_config_text,
    spec_from_document,
    validate_document,
)
from src.askey.errors import ConfigError
from src.askey.exact import ExactScalar
from src.askey.families import family_tags
from src.askey.models import SUITES


class TestEnvironment:
    """Tests for the configuration classes."""

    def test_named_config(self):
        """Test lookup by name."""
        assert get_config("testing").LOG_LEVEL == "WARNING"
        assert get_config("testing").N_MAX == 4

    def test_env_fallback(self, monkeypatch):
        """Test that ASKEY_ENV selects the configuration."""
        monkeypatch.setenv("ASKEY_ENV", "development")
        assert get_config().LOG_LEVEL == "DEBUG"

    def test_unknown_config(self):
        """Test that unknown names are rejected."""
        with pytest.raises(ConfigError, match="unknown configuration"):
            get_config("staging")

    def test_default_suite_spec(self):
        """Test that the default spec covers every family and suite."""
        spec = default_spec(get_config("testing"))
        assert spec.families == family_tags()
        assert spec.suites == list(SUITES)
        assert spec.n_max == 4


class TestParse:
    """Tests for INI parsing."""

    def test_sections(self, suite_ini):
        """Test that suite, numeric and family sections are read."""
        document, _ = parse_config_text(suite_ini)
        assert document["suite"] == {"families": ["MP", "L"], "suites": ["basic", "christoffel"], "n_max": 3}
        assert document["numeric"] == {"qpoch_truncation": 100}
        assert len(document["bindings"]) == 2

    def test_phase_alias(self, suite_ini):
        """Test that m and n become phase = 'm,n'."""
        document, _ = parse_config_text(suite_ini)
        mp = document["bindings"][0]
        assert mp["family"] == "MP"
        assert mp["values"] == {"a": "1/2", "phase": "2,1"}

    def test_labels(self, suite_ini):
        """Test that the third part of a family section is its label."""
        document, _ = parse_config_text(suite_ini)
        assert document["bindings"][0]["label"] == "MP"
        assert document["bindings"][1]["label"] == "small"

    def test_line_index(self, suite_ini):
        """Test that options are indexed by line."""
        _, lines = parse_config_text(suite_ini)
        assert lines[("suite", "n_max")] == 4
        assert lines[("family.L.small", None)] == 14

    def test_bad_integer(self):
        """Test that a non-integer n_max reports its line."""
        with pytest.raises(ConfigError, match="line 2") as excinfo:
            parse_config_text("[suite]\nn_max = many\n")
        assert excinfo.value.field == "n_max"

    def test_unknown_option(self):
        """Test that unknown suite options are rejected."""
        with pytest.raises(ConfigError, match="unknown option"):
            parse_config_text("[suite]\ncolour = blue\n")

    def test_unknown_section(self):
        """Test that unknown sections are rejected."""
        with pytest.raises(ConfigError, match="unknown section") as excinfo:
            parse_config_text("[suite]\nn_max = 3\n\n[plots]\nx = 1\n")
        assert excinfo.value.line == 4

    def test_missing_header(self):
        """Test that options before any section are rejected."""
        with pytest.raises(ConfigError, match="header"):
            parse_config_text("n_max = 3\n")

    def test_family_without_tag(self):
        """Test that [family.] is rejected."""
        with pytest.raises(ConfigError, match="family"):
            parse_config_text("[family.]\ng = 1\n")


class TestValidation:
    """Tests for document validation and SuiteSpec construction."""

    def test_suite_spec(self, suite_ini):
        """Test that a valid file becomes a SuiteSpec."""
        spec = spec_from_document(*parse_config_text(suite_ini))
        assert spec.families == ["MP", "L"]
        assert spec.n_max == 3
        assert spec.numeric.qpoch_truncation == 100
        assert spec.numeric.tol_rel == Config.TOL_REL
        assert spec.bindings[0].w == ExactScalar(Fraction(3, 5), Fraction(4, 5))
        assert spec.bindings[1]["g"] == ExactScalar(Fraction(3, 2))

    def test_schema_minimum(self):
        """Test that n_max below 2 is rejected with its location."""
        document, lines = parse_config_text("[suite]\nsuites = basic\nn_max = 1\n")
        with pytest.raises(ConfigError) as excinfo:
            validate_document(document, lines)
        assert excinfo.value.section == "suite"
        assert excinfo.value.field == "n_max"
        assert excinfo.value.line == 3

    def test_unknown_suite(self):
        """Test that unknown suite names are rejected."""
        document, lines = parse_config_text("[suite]\nsuites = basic, fuzz\n")
        with pytest.raises(ConfigError, match="unknown suites"):
            validate_document(document, lines)

    def test_closure_violation(self):
        """Test that a binding not closed under conjugation is rejected."""
        text = "[family.W]\na1 = 1/2+1/3i\na2 = 1/2\na3 = 2/3\na4 = 1/4\n"
        with pytest.raises(ConfigError, match="complex conjugation") as excinfo:
            spec_from_document(*parse_config_text(text))
        assert excinfo.value.section == "family.W"
        assert excinfo.value.line == 1

    def test_non_physical_warns(self, caplog):
        """Test that a non-physical binding is accepted with a warning."""
        spec = spec_from_document(*parse_config_text("[family.L]\ng = 1/4\n"))
        assert spec.bindings[0]["g"] == ExactScalar(Fraction(1, 4))
        assert "physical range" in caplog.text

    def test_config_error_is_value_error(self):
        """Test that configuration errors are also ValueErrors."""
        with pytest.raises(ValueError):
            spec_from_document({"suite": {"suites": []}})


class TestLoad:
    """Tests for reading configuration files."""

    def test_load(self, tmp_path, suite_ini):
        """Test reading a file from disk."""
        path = tmp_path / "suite.ini"
        path.write_text(suite_ini)
        spec = load_config(path)
        assert spec.suites == ["basic", "christoffel"]

    def test_missing_file(self, tmp_path):
        """Test that a missing file is a configuration error."""
        with pytest.raises(ConfigError, match="cannot read"):
            load_config(tmp_path / "absent.ini")
