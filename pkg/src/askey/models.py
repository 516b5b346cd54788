"""Data models for families, parameter bindings, coefficients and reports."""
import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from src.askey.errors import ConfigError, UnboundParameterError
from src.askey.exact import ExactScalar, as_scalar
from src.askey.laurent import LaurentPoly


MECHANICS = ("idQM", "oQM")
IDQM_CLASSES = ("i", "ii", "iii", "iv")
SUITES = ("basic", "christoffel", "single-shift", "operators", "theorem4", "theorem8", "numeric")
STATUSES = ("pass", "fail", "skipped")
# Families whose weights are checked numerically when no list is configured
DEFAULT_NUMERIC_FAMILIES = ("MP", "AW", "J", "L")


@dataclass(frozen=True)
class ParamSlot:
    """One named parameter of a family.

    Attributes:
        name: Slot name as used in configuration files
        shift: Component of the shift vector delta for this slot
        mode: ``additive`` (value + delta) or ``q-power`` (value stores q^(c*lambda))
        q_exponent: The ``c`` in q^(c*lambda) for ``q-power`` slots
        domain: ``real`` or ``complex``
    """
    name: str
    shift: Fraction = Fraction(0)
    mode: str = "additive"
    q_exponent: Fraction = Fraction(1)
    domain: str = "real"

    def __post_init__(self) -> None:
        if self.mode not in ("additive", "q-power"):
            raise ValueError(f"mode must be additive or q-power, got {self.mode}")
        if self.domain not in ("real", "complex"):
            raise ValueError(f"domain must be real or complex, got {self.domain}")

    def scale_power(self, times: int) -> int:
        """Power of s = q^(1/2) that ``times`` shifts multiply a q-power slot by."""
        power = 2 * self.q_exponent * self.shift * times
        if power.denominator != 1:
            raise ValueError(f"shift of slot '{self.name}' is not an integer power of q^(1/2)")
        return int(power)


@dataclass(frozen=True)
class ParamBinding:
    """Exact values bound to a family's parameter slots.

    Attributes:
        family: Family tag
        values: (slot name, value) pairs in slot order
        q_sqrt: s with q = s^2 (classes iii/iv only)
        phi_unit: w = e^(i phi) as a unit-modulus Gaussian rational (MP and class iv)
        label: Free-form label used in reports
    """
    family: str
    values: Tuple[Tuple[str, ExactScalar], ...] = ()
    q_sqrt: Optional[ExactScalar] = None
    phi_unit: Optional[ExactScalar] = None
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.phi_unit is not None and self.phi_unit.abs2() != 1:
            raise ValueError(f"phi_unit must have modulus 1, got {self.phi_unit}")
        if self.q_sqrt is not None and self.q_sqrt.is_zero():
            raise ValueError("q_sqrt must be nonzero")

    def __getitem__(self, name: str) -> ExactScalar:
        for key, value in self.values:
            if key == name:
                return value
        raise UnboundParameterError(f"{self.family} binding has no parameter '{name}'")

    def get(self, name: str, default: Optional[ExactScalar] = None) -> Optional[ExactScalar]:
        for key, value in self.values:
            if key == name:
                return value
        return default

    @property
    def s(self) -> ExactScalar:
        if self.q_sqrt is None:
            raise UnboundParameterError(f"{self.family} binding needs q via 's'")
        return self.q_sqrt

    @property
    def q(self) -> ExactScalar:
        return self.s * self.s

    @property
    def w(self) -> ExactScalar:
        if self.phi_unit is None:
            raise UnboundParameterError(f"{self.family} binding needs the phase unit 'phase'")
        return self.phi_unit

    def with_values(self, **updates: ExactScalar) -> "ParamBinding":
        values = tuple((key, updates.get(key, value)) for key, value in self.values)
        return ParamBinding(self.family, values, self.q_sqrt, self.phi_unit, self.label)

    def as_dict(self) -> Dict[str, str]:
        """String rendering of every bound value, suitable for reports."""
        rendered = {key: str(value) for key, value in self.values}
        if self.q_sqrt is not None:
            rendered["s"] = str(self.q_sqrt)
        if self.phi_unit is not None:
            rendered["w"] = str(self.phi_unit)
        return rendered

    def digest(self) -> str:
        """Short stable digest of the exact values."""
        text = ";".join(f"{k}={v}" for k, v in sorted(self.as_dict().items()))
        return hashlib.sha256(f"{self.family}|{text}".encode()).hexdigest()[:12]


def make_binding(family: str, s: Any = None, phase: Any = None, label: str = "", **values: Any) -> ParamBinding:
    """Convenience constructor taking literals (``"1/3"``, ``"1/2+1/4i"``, ints, Fractions)."""
    return ParamBinding(
        family=family,
        values=tuple((name, as_scalar(value)) for name, value in values.items()),
        q_sqrt=None if s is None else as_scalar(s),
        phi_unit=None if phase is None else as_scalar(phase),
        label=label,
    )


@dataclass(frozen=True)
class PhiZero:
    """A zero of the Christoffel factor.

    Attributes:
        eta: Position eta_j of the zero in the eta variable
        rep_point: The point x_j (class i/ii), z_j = e^(i x_j) (class iii/iv) or eta_j (oQM)
        multiplicity: Order of the zero
    """
    eta: ExactScalar
    rep_point: ExactScalar
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be positive, got {self.multiplicity}")


@dataclass(frozen=True)
class PhiFactorization:
    """Christoffel factor with its eta-degree, leading coefficient and zeros.

    Attributes:
        phi: The factor in the representation variable
        m: Degree in eta
        c_phi: Leading eta-coefficient
        zeros: Zeros with multiplicities
    """
    phi: LaurentPoly
    m: int
    c_phi: ExactScalar
    zeros: Tuple[PhiZero, ...]

    def __post_init__(self) -> None:
        total = sum(zero.multiplicity for zero in self.zeros)
        if total != self.m:
            raise ValueError(f"zero multiplicities must add up to m={self.m}, got {total}")


@dataclass(frozen=True)
class ChristoffelCoefficients:
    """Expansion coefficients of the Christoffel-transformed polynomial.

    Attributes:
        n: Degree index
        alpha: alpha_{n,0} .. alpha_{n,m}
        beta: beta_n
        beta_f: beta^F_n
    """
    n: int
    alpha: Tuple[ExactScalar, ...]
    beta: ExactScalar
    beta_f: ExactScalar


@dataclass(frozen=True)
class SpectralData:
    """Energy and shift-relation coefficients at one degree.

    Attributes:
        energy: E_n
        forward: f_n
        backward: b_n
    """
    energy: ExactScalar
    forward: ExactScalar
    backward: ExactScalar


@dataclass(frozen=True)
class FamilyDescriptor:
    """Complete data set of one polynomial family.

    Closure fields take a ParamBinding (and degree/zero indices) and return
    exact values. Fields that do not apply to a family are None.

    Attributes:
        tag: Family tag (``AW``, ``cqJ``, ``J``, ...)
        name: Human-readable family name
        mechanics: ``idQM`` or ``oQM``
        coordinate: Class ``i``..``iv`` for idQM, the eta(x) formula for oQM
        slots: Parameter slots
        m_degree: Expected eta-degree of the Christoffel factor (0: trivial)
        build: P_n in the representation variable
        energy: E_n
        forward_coeff: f_n
        backward_coeff: b_n
        leading: c_n, the leading eta-coefficient of P_n
        uses_q: Whether a binding carries s = q^(1/2)
        uses_phase: Whether a binding carries w = e^(i phi)
        potential: V(x) (idQM)
        c1: c_1(eta) (oQM)
        c2: c_2(eta) (oQM)
        c_F: The constant of the oQM forward shift
        c_phi: Leading coefficient of the Christoffel factor
        zeros: Zeros of the Christoffel factor
        special_values: Printed P_n value for a determinant row
        determinant: Printed D_n^(0..m-1)
        alpha: Printed alpha_{n,0..m}
        beta: Printed beta_n
        beta_f: Printed beta^F_n
        closure: Extra binding constraints, returns error messages
        physical: Physical-range predicate
        weight: phi_0(x)^2 as a float function (numeric checks)
        norm: h_n as a float (numeric checks)
        interval: Integration interval for the numeric checks
        normalizable_max: Largest normalizable n, when finite
        default_bindings: Bindings used when none are configured
    """
    tag: str
    name: str
    mechanics: str
    coordinate: str
    slots: Tuple[ParamSlot, ...]
    m_degree: int
    build: Callable
    energy: Callable
    forward_coeff: Callable
    backward_coeff: Callable
    leading: Callable
    uses_q: bool = False
    uses_phase: bool = False
    potential: Optional[Callable] = None
    c1: Optional[Callable] = None
    c2: Optional[Callable] = None
    c_F: Optional[ExactScalar] = None
    c_phi: Optional[Callable] = None
    zeros: Optional[Callable] = None
    special_values: Optional[Callable] = None
    determinant: Optional[Callable] = None
    alpha: Optional[Callable] = None
    beta: Optional[Callable] = None
    beta_f: Optional[Callable] = None
    closure: Optional[Callable] = None
    physical: Optional[Callable] = None
    weight: Optional[Callable] = None
    norm: Optional[Callable] = None
    interval: Optional[Callable] = None
    normalizable_max: Optional[Callable] = None
    default_bindings: Tuple[ParamBinding, ...] = ()

    def __post_init__(self) -> None:
        if self.mechanics not in MECHANICS:
            raise ValueError(f"mechanics must be one of {MECHANICS}, got {self.mechanics}")
        if self.mechanics == "idQM" and self.coordinate not in IDQM_CLASSES:
            raise ValueError(f"idQM coordinate class must be one of {IDQM_CLASSES}, got {self.coordinate}")
        if self.m_degree < 0:
            raise ValueError(f"m_degree must be non-negative, got {self.m_degree}")

    @property
    def is_idqm(self) -> bool:
        return self.mechanics == "idQM"

    @property
    def has_trivial_phi(self) -> bool:
        return self.m_degree == 0

    @property
    def delta(self) -> Tuple[Fraction, ...]:
        return tuple(slot.shift for slot in self.slots)

    def slot(self, name: str) -> ParamSlot:
        for slot in self.slots:
            if slot.name == name:
                return slot
        raise UnboundParameterError(f"{self.tag} has no parameter '{name}'")


@dataclass(frozen=True)
class VerificationOutcome:
    """Verdict of one identity check before it is attached to a run record.

    Attributes:
        passed: Whether the identity held
        residual: Exact rendering of the nonzero residual, if any
        detail: Short description of what was compared
    """
    passed: bool
    residual: Optional[str] = None
    detail: str = ""

    @classmethod
    def from_residual(cls, residual: Any, detail: str = "") -> "VerificationOutcome":
        """Pass iff ``residual`` is zero (a LaurentPoly, RationalFn numerator or scalar)."""
        zero = residual.is_zero() if hasattr(residual, "is_zero") else not residual
        return cls(passed=zero, residual=None if zero else str(residual), detail=detail)

    @classmethod
    def combine(cls, outcomes: List["VerificationOutcome"], detail: str = "") -> "VerificationOutcome":
        failed = [o for o in outcomes if not o.passed]
        if not failed:
            return cls(True, None, detail)
        first = failed[0]
        return cls(False, first.residual, first.detail or detail)


@dataclass
class NumericConfig:
    """Settings for the floating-point checks.

    Attributes:
        precision: ``double`` or ``extended``
        qpoch_truncation: Number of factors kept in (a;q)_infinity
        quad_points: Gauss-Legendre nodes per panel
        tol_rel: Relative tolerance
        gram_tol: Relative tolerance for Gram-matrix entries
        panels: Initial number of quadrature panels
        families: Families the numeric suite runs on
    """
    precision: str = "double"
    qpoch_truncation: int = 200
    quad_points: int = 32
    tol_rel: float = 1e-8
    gram_tol: float = 1e-6
    panels: int = 64
    families: List[str] = field(default_factory=lambda: list(DEFAULT_NUMERIC_FAMILIES))

    def __post_init__(self) -> None:
        if self.precision not in ("double", "extended"):
            raise ValueError(f"precision must be double or extended, got {self.precision}")
        if self.qpoch_truncation < 50:
            raise ValueError(f"qpoch_truncation must be at least 50, got {self.qpoch_truncation}")
        if not 0 < self.tol_rel <= 1e-4:
            raise ValueError(f"tol_rel must lie in (0, 1e-4], got {self.tol_rel}")
        if self.quad_points < 2:
            raise ValueError(f"quad_points must be at least 2, got {self.quad_points}")
        if self.panels < 1:
            raise ValueError(f"panels must be positive, got {self.panels}")


@dataclass
class SuiteSpec:
    """What a verification run covers.

    Attributes:
        families: Family tags, or ``["all"]``
        suites: Suite names
        n_max: Largest degree index
        bindings: Explicit bindings; families without one use their defaults
        numeric: Numeric settings
        jobs: Worker threads
        seed: Seed for perturbing rejected bindings
        mutate: Perturb one printed coefficient (mutation smoke test)
    """
    families: List[str]
    suites: List[str]
    n_max: int = 8
    bindings: List[ParamBinding] = field(default_factory=list)
    numeric: NumericConfig = field(default_factory=NumericConfig)
    jobs: int = 1
    seed: int = 0
    mutate: bool = False

    def __post_init__(self) -> None:
        if not self.suites:
            raise ConfigError("at least one suite must be selected", section="suite", field="suites")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ConfigError(f"unknown suites {unknown}; choose from {list(SUITES)}", section="suite", field="suites")
        if not self.families:
            raise ConfigError("at least one family must be selected", section="suite", field="families")
        if self.n_max < 2:
            raise ConfigError(f"n_max must be at least 2, got {self.n_max}", section="suite", field="n_max")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be positive, got {self.jobs}", section="suite", field="jobs")


@dataclass
class CheckOutcome:
    """Result of one check.

    Attributes:
        family: Family tag
        binding: Binding digest
        suite: Suite name
        check: Check identifier
        n: Degree index, or None for degree-free checks
        status: ``pass``, ``fail`` or ``skipped``
        reason: Skip reason or failure summary
        residual: Exact rendering of a nonzero residual
        wall_time: Seconds spent on the check
    """
    family: str
    binding: str
    suite: str
    check: str
    n: Optional[int]
    status: str
    reason: str = ""
    residual: Optional[str] = None
    wall_time: float = 0.0

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}, got {self.status}")

    def sort_key(self) -> Tuple:
        return (self.family, self.binding, self.suite, self.check, -1 if self.n is None else self.n)


@dataclass
class VerificationReport:
    """Structured outcome of a suite run.

    Attributes:
        runs: All check outcomes, deterministically ordered
        bindings: Digest to rendered parameter values
        spec: Rendered run specification
    """
    runs: List[CheckOutcome] = field(default_factory=list)
    bindings: Dict[str, Dict[str, str]] = field(default_factory=dict)
    spec: Dict[str, Any] = field(default_factory=dict)

    @property
    def has_failures(self) -> bool:
        return any(run.status == "fail" for run in self.runs)

    def counts(self) -> Dict[str, int]:
        totals = {status: 0 for status in STATUSES}
        for run in self.runs:
            totals[run.status] += 1
        return totals


@dataclass
class ValidationResult:
    """Result of validating a configuration document or binding.

    Attributes:
        is_valid: Whether validation passed
        errors: List of error messages (validation failures)
        warnings: List of warning messages (non-blocking issues)
    """
    is_valid: bool
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
