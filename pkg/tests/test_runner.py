"""Tests for the suite runner, report rendering and the command line."""
import json

import pytest

from src.askey.cli import QUICK_N_MAX, QUICK_SUITES, build_parser, main, resolve_spec
from src.askey.config import get_config
from src.askey.errors import ConfigError
from src.askey.families import get_family
from src.askey.models import NumericConfig, SuiteSpec, make_binding
from src.askey.report import render, report_to_dict, summary_frame, to_json, to_text, write_report
from src.askey.runner import SuiteRunner, run


def _spec(families, suites, **kwargs):
    kwargs.setdefault("n_max", 2)
    return SuiteSpec(families=families, suites=suites, **kwargs)


class TestSuiteRunner:
    """Tests for SuiteRunner."""

    def test_christoffel_passes(self, mp_binding):
        """Test that the Christoffel suite passes for Meixner-Pollaczek."""
        report = run(_spec(["MP"], ["christoffel"], n_max=3, bindings=[mp_binding]))

        assert not report.has_failures
        assert report.counts()["pass"] > 0
        assert {r.check for r in report.runs} == {"expansion", "coefficients", "determinant", "degree", "nonvanishing"}

    def test_trivial_factor_skipped(self):
        """Test that families with a trivial factor skip the expansion."""
        report = run(_spec(["cqHe"], ["christoffel"]))

        assert all(r.status == "skipped" for r in report.runs)
        assert report.runs[0].reason == "trivial Christoffel factor"

    def test_mutation_fails(self, mp_binding):
        """Test that a perturbed coefficient is reported as a failure."""
        report = run(_spec(["MP"], ["christoffel"], bindings=[mp_binding], mutate=True))

        assert report.has_failures
        failing = {r.check for r in report.runs if r.status == "fail"}
        assert "expansion" in failing
        assert "coefficients" in failing

    def test_differential_relation(self, laguerre_binding):
        """Test the differential relation suite on Laguerre."""
        report = run(_spec(["L", "MP"], ["theorem8"], bindings=[laguerre_binding]))

        statuses = {(r.family, r.status) for r in report.runs}
        assert ("L", "pass") in statuses
        assert ("MP", "skipped") in statuses
        assert not report.has_failures

    def test_explicit_bindings_replace_defaults(self, laguerre_binding):
        """Test that configured bindings replace the family defaults."""
        runner = SuiteRunner(_spec(["L", "J"], ["basic"], bindings=[laguerre_binding]))

        assert runner.bindings_for(get_family("L")) == [laguerre_binding]
        assert len(runner.bindings_for(get_family("J"))) == 3

    def test_all_families(self):
        """Test that 'all' resolves to every registered family."""
        assert len(SuiteRunner(_spec(["all"], ["basic"])).families) == 18

    def test_retry_with_perturbation(self):
        """Test that a vanishing normalizer is retried with a perturbed binding."""
        binding = make_binding("L", g="-1/2")
        report = run(_spec(["L"], ["christoffel"], bindings=[binding], seed=3))

        expansion = [r for r in report.runs if r.check == "expansion" and r.n == 1][0]
        assert expansion.status == "pass"
        assert expansion.reason.startswith("retried with perturbed binding")
        assert len(report.bindings) == 2

    def test_non_physical_numeric_skipped(self):
        """Test that numeric checks skip bindings outside the physical range."""
        spec = _spec(["L"], ["numeric"], bindings=[make_binding("L", g="1/4")], numeric=NumericConfig(panels=32))
        report = run(spec)

        assert report.runs
        assert all(r.status == "skipped" for r in report.runs)
        assert "not physical" in report.runs[0].reason

    def test_numeric_not_enabled(self):
        """Test that families outside the numeric list are skipped."""
        report = run(_spec(["W"], ["numeric"]))

        assert {r.reason for r in report.runs} == {"numeric checks not enabled for this family"}

    def test_single_shift_other_family(self, mp_binding):
        """Test that single shifts are skipped outside Askey-Wilson."""
        report = run(_spec(["MP"], ["single-shift"], bindings=[mp_binding]))

        assert report.runs[0].status == "skipped"

    def test_ordering(self):
        """Test that runs are sorted by family, binding, suite, check and n."""
        report = run(_spec(["L", "He"], ["basic", "theorem8"]))
        keys = [r.sort_key() for r in report.runs]

        assert keys == sorted(keys)

    def test_empty_suites(self):
        """Test that a spec without suites is rejected."""
        with pytest.raises(ConfigError, match="at least one suite"):
            SuiteSpec(families=["L"], suites=[])


class TestReport:
    """Tests for report rendering."""

    def test_deterministic_across_jobs(self, laguerre_binding):
        """Test that worker count does not change the structured report."""
        spec_one = _spec(["L", "He"], ["basic", "christoffel"], bindings=[laguerre_binding], jobs=1)
        spec_four = _spec(["L", "He"], ["basic", "christoffel"], bindings=[laguerre_binding], jobs=4)

        assert to_json(run(spec_one)) == to_json(run(spec_four))

    def test_structure(self, laguerre_binding):
        """Test the top-level keys and the omitted wall time."""
        document = report_to_dict(run(_spec(["L"], ["basic"], bindings=[laguerre_binding])))

        assert set(document) == {"spec", "bindings", "counts", "runs"}
        assert "wall_time" not in document["runs"][0]
        assert "jobs" not in document["spec"]
        assert document["bindings"][laguerre_binding.digest()] == {"g": "1"}

    def test_summary_frame(self, laguerre_binding):
        """Test that the summary has one column per status."""
        table = summary_frame(run(_spec(["L"], ["basic"], bindings=[laguerre_binding])))

        assert list(table.columns) == ["pass", "fail", "skipped"]
        assert table.loc[("L", "basic"), "fail"] == 0

    def test_text_lists_failures(self, mp_binding):
        """Test that the text report lists failing checks."""
        text = to_text(run(_spec(["MP"], ["christoffel"], bindings=[mp_binding], mutate=True)))

        assert "total:" in text
        assert "failures:" in text

    def test_unknown_format(self):
        """Test that render rejects unknown formats."""
        with pytest.raises(ValueError, match="format"):
            render(run(_spec(["He"], ["basic"])), "yaml")

    def test_write_report(self, tmp_path):
        """Test writing a structured report to disk."""
        path = write_report(run(_spec(["He"], ["basic"])), tmp_path / "report.json")

        assert json.loads(path.read_text())["counts"]["fail"] == 0


class TestCommandLine:
    """Tests for the askey-verify entry point."""

    def test_success(self, capsys):
        """Test exit code 0 when every check passes."""
        code = main(["--env", "testing", "--families", "L", "--suites", "theorem8", "--n-max", "2", "-q"])

        assert code == 0
        assert "total:" in capsys.readouterr().out

    def test_mutation_exit_code(self):
        """Test exit code 1 when a check fails."""
        code = main(["--env", "testing", "--families", "L", "--suites", "theorem8", "--n-max", "2", "--mutate", "-q"])

        assert code == 1

    def test_invalid_n_max(self, capsys):
        """Test exit code 2 for an out-of-range override."""
        code = main(["--env", "testing", "--families", "L", "--suites", "basic", "--n-max", "1", "-q"])

        assert code == 2
        assert "n_max" in capsys.readouterr().err

    def test_unknown_family(self):
        """Test exit code 2 for an unknown family tag."""
        assert main(["--env", "testing", "--families", "XYZ", "-q"]) == 2

    def test_missing_config(self, tmp_path):
        """Test exit code 2 for a missing configuration file."""
        assert main(["--config", str(tmp_path / "absent.ini"), "-q"]) == 2

    def test_config_file_and_report(self, tmp_path, suite_ini):
        """Test running from a configuration file into a structured report."""
        config = tmp_path / "suite.ini"
        config.write_text(suite_ini)
        target = tmp_path / "report.json"

        code = main(["--config", str(config), "--suites", "basic", "--report", str(target),
                     "--format", "structured", "-q"])

        assert code == 0
        document = json.loads(target.read_text())
        assert document["spec"]["families"] == ["MP", "L"]
        assert document["spec"]["suites"] == ["basic"]

    def test_quick_selects_exact_suites(self):
        """Test that --quick narrows suites and degree."""
        args = build_parser().parse_args(["--quick"])
        spec = resolve_spec(args, get_config("default"))

        assert spec.suites == QUICK_SUITES
        assert spec.n_max <= QUICK_N_MAX

    def test_quick_keeps_explicit_choices(self):
        """Test that --suites and --n-max win over --quick."""
        args = build_parser().parse_args(["--quick", "--suites", "theorem8", "--n-max", "6"])
        spec = resolve_spec(args, get_config("default"))

        assert spec.suites == ["theorem8"]
        assert spec.n_max == 6

    def test_help_mentions_quick(self, capsys):
        """Test that the help text points to the quick path."""
        with pytest.raises(SystemExit) as excinfo:
            main(["--help"])

        assert excinfo.value.code == 0
        assert "--quick" in capsys.readouterr().out
