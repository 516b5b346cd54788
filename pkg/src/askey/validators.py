"""Validation for suite documents and parameter bindings."""
from typing import Any, Dict, List

from src.askey.errors import AskeyError
from src.askey.exact import ExactScalar, pythagorean_unit
from src.askey.families import FAMILIES, get_family
from src.askey.models import SUITES, FamilyDescriptor, ParamBinding, ValidationResult


RESERVED_KEYS = ("s", "phase")


def parse_phase(text: str) -> ExactScalar:
    """``"m,n"`` to the unit ``((m^2-n^2) + 2mn i)/(m^2+n^2)``.

    Raises:
        ValueError: If the text is not a pair of integers
    """
    parts = [part.strip() for part in str(text).split(",")]
    if len(parts) != 2:
        raise ValueError(f"phase must be 'm,n', got '{text}'")
    try:
        m, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"phase must be a pair of integers, got '{text}'") from None
    return pythagorean_unit(m, n)


class BindingValidator:
    """Validates the parameter strings of one binding against its family.

    Checks slot names, literal syntax, real-valued slots, the presence of
    ``s`` and ``phase`` where the family needs them, and closure of the
    parameter set under complex conjugation. Bindings outside the physical
    range only produce a warning; the algebraic identities hold there too.
    """

    def validate(self, tag: str, params: Dict[str, Any]) -> ValidationResult:
        """Validate a binding.

        Args:
            tag: Family tag
            params: Parameter name to literal string

        Returns:
            ValidationResult with errors and warnings
        """
        errors = []
        warnings = []

        if tag not in FAMILIES:
            return ValidationResult(False, [f"unknown family '{tag}'"], [])
        family = get_family(tag)

        errors.extend(self._validate_names(family, params))
        errors.extend(self._validate_literals(family, params))

        if not errors:
            binding = self.build(tag, params)
            errors.extend(self._validate_closure(family, binding))
            if not errors:
                warnings.extend(self._check_physical(family, binding))

        return ValidationResult(is_valid=len(errors) == 0, errors=errors, warnings=warnings)

    def build(self, tag: str, params: Dict[str, Any], label: str = "") -> ParamBinding:
        """Turn validated parameter strings into a ParamBinding."""
        family = get_family(tag)
        values = tuple((slot.name, ExactScalar.parse(str(params[slot.name]))) for slot in family.slots)
        s = ExactScalar.parse(str(params["s"])) if family.uses_q else None
        w = parse_phase(params["phase"]) if family.uses_phase else None
        return ParamBinding(tag, values, s, w, label)

    def _validate_names(self, family: FamilyDescriptor, params: Dict[str, Any]) -> List[str]:
        errors = []
        names = [slot.name for slot in family.slots]
        for name in names:
            if name not in params:
                errors.append(f"{family.tag}: missing parameter '{name}'")
        for key in params:
            if key not in names and key not in RESERVED_KEYS:
                errors.append(f"{family.tag}: unknown parameter '{key}'; expected {names}")
        if family.uses_q and "s" not in params:
            errors.append(f"{family.tag}: q must be given as 's' with q = s^2")
        if not family.uses_q and "s" in params:
            errors.append(f"{family.tag}: family does not take 's'")
        if family.uses_phase and "phase" not in params:
            errors.append(f"{family.tag}: phase must be given as 'phase=m,n'")
        if not family.uses_phase and "phase" in params:
            errors.append(f"{family.tag}: family does not take a phase")
        return errors

    def _validate_literals(self, family: FamilyDescriptor, params: Dict[str, Any]) -> List[str]:
        errors = []
        for slot in family.slots:
            if slot.name not in params:
                continue
            try:
                value = ExactScalar.parse(str(params[slot.name]))
            except ValueError as exc:
                errors.append(f"{family.tag}.{slot.name}: {exc}")
                continue
            if slot.domain == "real" and not value.is_real():
                errors.append(f"{family.tag}.{slot.name}: must be real, got {value}")
        if family.uses_q and "s" in params:
            try:
                s = ExactScalar.parse(str(params["s"]))
            except ValueError as exc:
                errors.append(f"{family.tag}.s: {exc}")
            else:
                if s.is_zero():
                    errors.append(f"{family.tag}.s: must be nonzero")
        if family.uses_phase and "phase" in params:
            try:
                parse_phase(params["phase"])
            except ValueError as exc:
                errors.append(f"{family.tag}.phase: {exc}")
        return errors

    def _validate_closure(self, family: FamilyDescriptor, binding: ParamBinding) -> List[str]:
        if family.closure is None:
            return []
        return [f"{family.tag}: {message}" for message in family.closure(binding)]

    def _check_physical(self, family: FamilyDescriptor, binding: ParamBinding) -> List[str]:
        if family.physical is None:
            return []
        try:
            physical = family.physical(binding)
        except AskeyError:
            physical = False
        if physical:
            return []
        return [f"{family.tag}: binding {binding.as_dict()} is outside the physical range; numeric checks will be skipped"]


class SuiteValidator:
    """Validates the logical content of a suite document.

    The structural part (types, required keys) is covered by the JSON
    Schema in ``src.askey.config``; this class checks names and ranges.
    """

    def __init__(self) -> None:
        self.binding_validator = BindingValidator()

    def validate(self, document: Dict[str, Any]) -> ValidationResult:
        """Validate a suite document.

        Args:
            document: Parsed document with ``suite``, ``numeric`` and ``bindings`` keys

        Returns:
            ValidationResult with errors and warnings
        """
        errors = []
        warnings = []

        suite = document.get("suite", {})
        errors.extend(self._validate_families(suite.get("families", ["all"])))
        errors.extend(self._validate_suites(suite.get("suites", list(SUITES))))
        errors.extend(self._validate_numeric(document.get("numeric", {})))

        for entry in document.get("bindings", []):
            result = self.binding_validator.validate(entry["family"], entry["values"])
            label = entry.get("label") or entry["family"]
            errors.extend(f"[{label}] {message}" for message in result.errors)
            warnings.extend(f"[{label}] {message}" for message in result.warnings)

        return ValidationResult(is_valid=len(errors) == 0, errors=errors, warnings=warnings)

    def _validate_families(self, families: List[str]) -> List[str]:
        if families == ["all"]:
            return []
        unknown = [tag for tag in families if tag not in FAMILIES]
        if unknown:
            return [f"unknown families {unknown}; choose from {list(FAMILIES)}"]
        return []

    def _validate_suites(self, suites: List[str]) -> List[str]:
        if not suites:
            return ["at least one suite must be selected"]
        unknown = [name for name in suites if name not in SUITES]
        if unknown:
            return [f"unknown suites {unknown}; choose from {list(SUITES)}"]
        return []

    def _validate_numeric(self, numeric: Dict[str, Any]) -> List[str]:
        errors = []
        unknown = [tag for tag in numeric.get("families", []) if tag not in FAMILIES]
        if unknown:
            errors.append(f"unknown numeric families {unknown}")
        tol = numeric.get("tol_rel")
        if tol is not None and not 0 < tol <= 1e-4:
            errors.append(f"tol_rel must lie in (0, 1e-4], got {tol}")
        truncation = numeric.get("qpoch_truncation")
        if truncation is not None and truncation < 50:
            errors.append(f"qpoch_truncation must be at least 50, got {truncation}")
        return errors
