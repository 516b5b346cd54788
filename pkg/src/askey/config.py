"""Environment defaults and suite configuration files."""
import configparser
import logging
import os
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import jsonschema

from src.askey.errors import ConfigError
from src.askey.families import family_tags
from src.askey.models import SUITES, NumericConfig, SuiteSpec
from src.askey.validators import BindingValidator, SuiteValidator


logger = logging.getLogger(__name__)


class Config:
    """Base configuration read from the environment."""
    N_MAX = int(os.getenv("ASKEY_N_MAX", "8"))
    JOBS = int(os.getenv("ASKEY_JOBS", "1"))
    SEED = int(os.getenv("ASKEY_SEED", "0"))
    LOG_LEVEL = os.getenv("ASKEY_LOG_LEVEL", "INFO")
    QPOCH_TRUNCATION = int(os.getenv("ASKEY_QPOCH_TRUNCATION", "200"))
    TOL_REL = float(os.getenv("ASKEY_TOL_REL", "1e-8"))


class DevelopmentConfig(Config):
    LOG_LEVEL = "DEBUG"


class TestingConfig(Config):
    LOG_LEVEL = "WARNING"
    N_MAX = 4


CONFIGS = {
    "default": Config,
    "development": DevelopmentConfig,
    "testing": TestingConfig,
}


def get_config(name: Optional[str] = None) -> type:
    """Configuration class by name, defaulting to ``ASKEY_ENV`` or ``default``."""
    name = name or os.getenv("ASKEY_ENV", "default")
    try:
        return CONFIGS[name]
    except KeyError:
        raise ConfigError(f"unknown configuration '{name}'; choose from {list(CONFIGS)}") from None


_STRING_LIST = {"type": "array", "items": {"type": "string"}, "minItems": 1}

SUITE_SCHEMA = {
    "type": "object",
    "properties": {
        "suite": {
            "type": "object",
            "properties": {
                "families": _STRING_LIST,
                "suites": _STRING_LIST,
                "n_max": {"type": "integer", "minimum": 2},
                "jobs": {"type": "integer", "minimum": 1},
                "seed": {"type": "integer", "minimum": 0},
                "mutate": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
        "numeric": {
            "type": "object",
            "properties": {
                "precision": {"enum": ["double", "extended"]},
                "qpoch_truncation": {"type": "integer", "minimum": 50},
                "quad_points": {"type": "integer", "minimum": 2},
                "tol_rel": {"type": "number", "exclusiveMinimum": 0, "maximum": 1e-4},
                "gram_tol": {"type": "number", "exclusiveMinimum": 0},
                "panels": {"type": "integer", "minimum": 1},
                "families": _STRING_LIST,
            },
            "additionalProperties": False,
        },
        "bindings": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["family", "values"],
                "properties": {
                    "family": {"type": "string"},
                    "label": {"type": "string"},
                    "section": {"type": "string"},
                    "values": {
                        "type": "object",
                        "additionalProperties": {"type": ["string", "integer"]},
                    },
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

_SUITE_TYPES = {"n_max": int, "jobs": int, "seed": int, "mutate": bool, "families": list, "suites": list}
_NUMERIC_TYPES = {
    "precision": str,
    "qpoch_truncation": int,
    "quad_points": int,
    "tol_rel": float,
    "gram_tol": float,
    "panels": int,
    "families": list,
}
_SECTION = re.compile(r"^\s*\[([^\]]+)\]")
_OPTION = re.compile(r"^\s*([^=:#;\s][^=:]*?)\s*[=:]")


def _line_index(text: str) -> Dict[Tuple[str, Optional[str]], int]:
    """Line numbers of section headers and their options."""
    index = {}
    section = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        header = _SECTION.match(line)
        if header:
            section = header.group(1).strip()
            index.setdefault((section, None), lineno)
            continue
        option = _OPTION.match(line)
        if option and section is not None:
            index.setdefault((section, option.group(1).strip()), lineno)
    return index


def _split_list(value: str) -> List[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _typed_section(parser: configparser.ConfigParser, section: str, types: Dict[str, type],
                   lines: Dict) -> Dict[str, Any]:
    result = {}
    for key, raw in parser.items(section):
        kind = types.get(key)
        line = lines.get((section, key))
        if kind is None:
            raise ConfigError(f"unknown option; expected one of {sorted(types)}", section, key, line)
        try:
            if kind is bool:
                result[key] = parser.getboolean(section, key)
            elif kind is list:
                result[key] = _split_list(raw)
            else:
                result[key] = kind(raw)
        except ValueError:
            raise ConfigError(f"cannot read '{raw}' as {kind.__name__}", section, key, line) from None
    return result


def _binding_entry(parser: configparser.ConfigParser, section: str, lines: Dict) -> Dict[str, Any]:
    parts = section.split(".", 2)
    tag = parts[1] if len(parts) > 1 else ""
    if not tag:
        raise ConfigError("family sections are named [family.<tag>] or [family.<tag>.<label>]",
                          section, line=lines.get((section, None)))
    values = dict(parser.items(section))
    if "phase" not in values and "m" in values and "n" in values:
        values["phase"] = f"{values.pop('m')},{values.pop('n')}"
    return {"family": tag, "label": parts[2] if len(parts) > 2 else tag, "section": section, "values": values}


def parse_config_text(text: str, source: str = "<string>") -> Tuple[Dict[str, Any], Dict]:
    """Read INI text into a suite document plus a line index for diagnostics.

    Raises:
        ConfigError: On syntax errors and on options that cannot be typed
    """
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        parser.read_string(text, source=source)
    except configparser.MissingSectionHeaderError as exc:
        raise ConfigError("file must start with a [section] header", line=exc.lineno) from None
    except configparser.ParsingError as exc:
        lineno, line = exc.errors[0]
        raise ConfigError(f"cannot parse {line!r}", line=lineno) from None
    except (configparser.DuplicateSectionError, configparser.DuplicateOptionError) as exc:
        raise ConfigError(exc.message, getattr(exc, "section", None), getattr(exc, "option", None),
                          exc.lineno) from None

    lines = _line_index(text)
    document: Dict[str, Any] = {}
    bindings = []
    for section in parser.sections():
        if section == "suite":
            document["suite"] = _typed_section(parser, section, _SUITE_TYPES, lines)
        elif section == "numeric":
            document["numeric"] = _typed_section(parser, section, _NUMERIC_TYPES, lines)
        elif section.startswith("family."):
            bindings.append(_binding_entry(parser, section, lines))
        else:
            raise ConfigError("unknown section; expected [suite], [numeric] or [family.<tag>]",
                              section, line=lines.get((section, None)))
    if bindings:
        document["bindings"] = bindings
    return document, lines


def _schema_location(error: jsonschema.ValidationError, document: Dict[str, Any]) -> Tuple[str, Optional[str]]:
    path = list(error.absolute_path)
    if not path:
        return None, None
    if path[0] == "bindings" and len(path) > 1:
        entry = document["bindings"][path[1]]
        field = path[3] if len(path) > 3 else (path[2] if len(path) > 2 else None)
        return entry.get("section", f"family.{entry.get('family')}"), field
    return path[0], path[1] if len(path) > 1 else None


def schema_errors(document: Dict[str, Any]) -> List[jsonschema.ValidationError]:
    """JSON Schema violations of a suite document, in path order."""
    return sorted(jsonschema.Draft7Validator(SUITE_SCHEMA).iter_errors(document),
                  key=lambda e: [str(p) for p in e.absolute_path])


def validate_document(document: Dict[str, Any], lines: Optional[Dict] = None) -> None:
    """Schema, suite and binding validation of a parsed document.

    Raises:
        ConfigError: For the first problem found, with its section, field and line
    """
    lines = lines or {}
    errors = schema_errors(document)
    if errors:
        error = errors[0]
        section, field = _schema_location(error, document)
        raise ConfigError(error.message, section, field, lines.get((section, field), lines.get((section, None))))

    result = SuiteValidator().validate({k: v for k, v in document.items() if k != "bindings"})
    if not result.is_valid:
        raise ConfigError("; ".join(result.errors), "suite", line=lines.get(("suite", None)))

    validator = BindingValidator()
    for entry in document.get("bindings", []):
        section = entry.get("section", f"family.{entry['family']}")
        checked = validator.validate(entry["family"], entry["values"])
        if not checked.is_valid:
            raise ConfigError("; ".join(checked.errors), section, line=lines.get((section, None)))
        for warning in checked.warnings:
            logger.warning(warning)


def spec_from_document(document: Dict[str, Any], lines: Optional[Dict] = None,
                       defaults: type = Config) -> SuiteSpec:
    """Validate a document and build the SuiteSpec it describes.

    Raises:
        ConfigError: If the document is invalid
    """
    validate_document(document, lines)
    suite = document.get("suite", {})
    numeric = dict(document.get("numeric", {}))
    numeric.setdefault("qpoch_truncation", defaults.QPOCH_TRUNCATION)
    numeric.setdefault("tol_rel", defaults.TOL_REL)

    validator = BindingValidator()
    bindings = [
        validator.build(entry["family"], entry["values"], entry.get("label", ""))
        for entry in document.get("bindings", [])
    ]
    try:
        return SuiteSpec(
            families=suite.get("families", ["all"]),
            suites=suite.get("suites", list(SUITES)),
            n_max=suite.get("n_max", defaults.N_MAX),
            bindings=bindings,
            numeric=NumericConfig(**numeric),
            jobs=suite.get("jobs", defaults.JOBS),
            seed=suite.get("seed", defaults.SEED),
            mutate=suite.get("mutate", False),
        )
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc), "numeric") from None


def load_config(path: Union[str, Path], defaults: type = Config) -> SuiteSpec:
    """Read and validate a suite configuration file.

    Raises:
        ConfigError: If the file is missing or invalid
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    document, lines = parse_config_text(text, str(path))
    logger.info(f"Loaded suite configuration from {path}")
    return spec_from_document(document, lines, defaults)


def default_spec(defaults: type = Config) -> SuiteSpec:
    """Every family and every suite with the default bindings."""
    return SuiteSpec(
        families=family_tags(),
        suites=list(SUITES),
        n_max=defaults.N_MAX,
        numeric=NumericConfig(qpoch_truncation=defaults.QPOCH_TRUNCATION, tol_rel=defaults.TOL_REL),
        jobs=defaults.JOBS,
        seed=defaults.SEED,
    )
