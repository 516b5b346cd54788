"""Suite runner: binds parameters, executes checks and assembles the report."""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict
from typing import Callable, Dict, List, Optional

from src.askey import catalog, christoffel, numeric, operators
from src.askey.errors import (
    ConversionFailureError,
    DegreeMismatchError,
    ExactDivisionByZero,
    NonRealParameterError,
    NotDivisibleError,
    NotPhysicalError,
    QuadratureNonConvergenceError,
    ZeroDenominatorError,
)
from src.askey.families import family_tags, get_family
from src.askey.models import (
    CheckOutcome,
    FamilyDescriptor,
    ParamBinding,
    SuiteSpec,
    VerificationOutcome,
    VerificationReport,
)


logger = logging.getLogger(__name__)

THEOREM4_MAX_N = 6
COMPOSITION_MAX_N = 6

FAILING_ERRORS = (NotDivisibleError, DegreeMismatchError, ConversionFailureError, QuadratureNonConvergenceError)
RETRY_ERRORS = (ZeroDenominatorError, ExactDivisionByZero)
SKIPPING_ERRORS = (NonRealParameterError, NotPhysicalError)

Check = Callable[[ParamBinding], VerificationOutcome]


def _from_bool(passed: bool, detail: str) -> VerificationOutcome:
    return VerificationOutcome(passed, None if passed else "false", detail)


class SuiteRunner:
    """Runs the selected suites over every family and binding of a SuiteSpec.

    Work is split into (family, binding, suite) tasks executed on a thread
    pool; outcomes are sorted before the report is assembled, so the report
    does not depend on ``jobs``.

    Attributes:
        spec: The run specification
        families: Resolved family tags
        perturbed: Digest to rendered values of bindings created by retries
    """

    def __init__(self, spec: SuiteSpec) -> None:
        """Initialize the runner.

        Args:
            spec: Validated run specification

        Example:
            >>> report = SuiteRunner(spec).run()
        """
        self.spec = spec
        self.families = family_tags() if spec.families == ["all"] else list(spec.families)
        self.perturbed: Dict[str, Dict[str, str]] = {}

    def bindings_for(self, family: FamilyDescriptor) -> List[ParamBinding]:
        explicit = [b for b in self.spec.bindings if b.family == family.tag]
        return explicit or list(family.default_bindings)

    def run(self) -> VerificationReport:
        """Execute all tasks and return the deterministically ordered report."""
        tasks = []
        bindings: Dict[str, Dict[str, str]] = {}
        for tag in self.families:
            family = get_family(tag)
            for binding in self.bindings_for(family):
                bindings[binding.digest()] = self._render(binding)
                for suite in self.spec.suites:
                    tasks.append((family, binding, suite))

        logger.info(f"Running {len(tasks)} suite tasks over {len(self.families)} families with {self.spec.jobs} job(s)")
        start = time.perf_counter()
        if self.spec.jobs == 1:
            results = [self._run_task(*task) for task in tasks]
        else:
            with ThreadPoolExecutor(max_workers=self.spec.jobs) as pool:
                results = list(pool.map(lambda task: self._run_task(*task), tasks))

        runs = sorted((run for batch in results for run in batch), key=CheckOutcome.sort_key)
        bindings.update(self.perturbed)
        report = VerificationReport(runs=runs, bindings=bindings, spec=self._render_spec())
        counts = report.counts()
        logger.info(f"Finished in {time.perf_counter() - start:.2f}s: {counts['pass']} pass, "
                    f"{counts['fail']} fail, {counts['skipped']} skipped")
        return report

    def _render(self, binding: ParamBinding) -> Dict[str, str]:
        rendered = binding.as_dict()
        if binding.label:
            rendered["label"] = binding.label
        return rendered

    def _render_spec(self) -> Dict:
        return {
            "families": self.families,
            "suites": list(self.spec.suites),
            "n_max": self.spec.n_max,
            "seed": self.spec.seed,
            "mutate": self.spec.mutate,
            "numeric": asdict(self.spec.numeric),
        }

    def _run_task(self, family: FamilyDescriptor, binding: ParamBinding, suite: str) -> List[CheckOutcome]:
        builder = SUITE_BUILDERS[suite]
        records = []
        for check_id, n, check in builder(self, family, binding):
            if isinstance(check, str):
                records.append(CheckOutcome(family.tag, binding.digest(), suite, check_id, n, "skipped", reason=check))
                continue
            records.append(self.execute(family, binding, suite, check_id, n, check))
        return records

    def execute(self, family: FamilyDescriptor, binding: ParamBinding, suite: str, check_id: str,
                n: Optional[int], check: Check) -> CheckOutcome:
        """Run one check, mapping exceptions to statuses.

        Division by zero at a non-generic binding is retried once with a
        perturbed binding before the check is skipped.
        """
        digest = binding.digest()
        start = time.perf_counter()
        reason = ""
        try:
            try:
                outcome = check(binding)
            except RETRY_ERRORS as exc:
                perturbed = catalog.perturb_binding(family, binding, self.spec.seed)
                self.perturbed[perturbed.digest()] = self._render(perturbed)
                reason = f"retried with perturbed binding {perturbed.digest()} after: {exc}"
                outcome = check(perturbed)
        except RETRY_ERRORS as exc:
            return CheckOutcome(family.tag, digest, suite, check_id, n, "skipped",
                                reason=f"non-generic binding: {exc}", wall_time=time.perf_counter() - start)
        except SKIPPING_ERRORS as exc:
            return CheckOutcome(family.tag, digest, suite, check_id, n, "skipped", reason=str(exc),
                                wall_time=time.perf_counter() - start)
        except FAILING_ERRORS as exc:
            logger.debug(f"{family.tag} {check_id} n={n}: {exc}")
            return CheckOutcome(family.tag, digest, suite, check_id, n, "fail", reason=str(exc),
                                wall_time=time.perf_counter() - start)

        elapsed = time.perf_counter() - start
        if outcome.passed:
            return CheckOutcome(family.tag, digest, suite, check_id, n, "pass", reason=reason, wall_time=elapsed)
        logger.debug(f"{family.tag} {check_id} n={n} failed: {outcome.detail}")
        return CheckOutcome(family.tag, digest, suite, check_id, n, "fail", reason=outcome.detail,
                            residual=outcome.residual, wall_time=elapsed)

    def degrees(self, limit: Optional[int] = None) -> range:
        top = self.spec.n_max if limit is None else min(self.spec.n_max, limit)
        return range(top + 1)


# Suite builders yield (check id, n, check) with check either a callable or a skip reason

def _basic(runner: SuiteRunner, family: FamilyDescriptor, binding: ParamBinding):
    if family.has_trivial_phi:
        yield "phi", None, lambda b: _from_bool(christoffel.trivial_phi_check(family, b), "Christoffel factor is 1")
    else:
        yield "phi", None, lambda b: christoffel.phi_check(family, b)
    for n in runner.degrees():
        yield "leading", n, lambda b, n=n: _from_bool(catalog.leading_coefficient_check(family, b, n),
                                                      f"leading eta-coefficient of P_{n}")
        yield "spectral", n, lambda b, n=n: catalog.spectral_check(family, b, n)
        if not family.has_trivial_phi:
            yield "special-values", n, lambda b, n=n: catalog.special_value_check(family, b, n)
        if family.is_idqm and family.coordinate in ("iii", "iv"):
            yield "symmetry", n, lambda b, n=n: catalog.symmetry_check(family, b, n)


def _has_multiple_zero(family: FamilyDescriptor, binding: ParamBinding) -> bool:
    return any(zero.multiplicity > 1 for zero in family.zeros(binding))


def _coefficients(family: FamilyDescriptor, binding: ParamBinding, n: int, mutate: bool) -> VerificationOutcome:
    return christoffel.compare_coefficients(christoffel.alpha_from_determinants(family, binding, n),
                                            christoffel.alpha_closed_form(family, binding, n, mutate))


def _christoffel(runner: SuiteRunner, family: FamilyDescriptor, binding: ParamBinding):
    if family.has_trivial_phi:
        yield "expansion", None, "trivial Christoffel factor"
        return
    mutate = runner.spec.mutate
    for n in runner.degrees():
        yield "expansion", n, lambda b, n=n: christoffel.verify_expansion(family, b, n, mutate)
        yield "coefficients", n, lambda b, n=n: _coefficients(family, b, n, mutate)
        if n == 0 and _has_multiple_zero(family, binding):
            yield "determinant", n, "derivative rows are unnormalized at n = 0"
        else:
            yield "determinant", n, lambda b, n=n: christoffel.determinant_check(family, b, n)
        yield "degree", n, lambda b, n=n: christoffel.degree_check(family, b, n)
        yield "nonvanishing", n, lambda b, n=n: _from_bool(christoffel.diagonal_nonvanishing(family, b, n),
                                                           "beta_n alpha_{n,0} != 0")


def _single_shift(runner: SuiteRunner, family: FamilyDescriptor, binding: ParamBinding):
    if family.tag != "AW":
        yield "single-shift", None, "single-parameter shifts are defined for AW only"
        return
    yield "single-shift-product", None, lambda b: christoffel.single_shift_product_check(b)
    for n in runner.degrees():
        for j in range(1, 5):
            yield f"single-shift-a{j}", n, lambda b, n=n, j=j: christoffel.single_shift_aw(b, j, n)
    for n in runner.degrees(COMPOSITION_MAX_N):
        yield "composition", n, lambda b, n=n: christoffel.composition_check_aw(b, n)


def _operators(runner: SuiteRunner, family: FamilyDescriptor, binding: ParamBinding):
    if family.is_idqm:
        yield "prop3", None, lambda b: operators.verify_prop3(family, b)
    for n in runner.degrees():
        yield "forward", n, lambda b, n=n: operators.forward_relation_check(family, b, n)
        if n >= 1:
            yield "backward", n, lambda b, n=n: operators.backward_relation_check(family, b, n)
        yield "htilde", n, lambda b, n=n: operators.eigen_check(family, b, n)
        yield "factorization", n, lambda b, n=n: operators.factorization_check(family, b, n)


def _theorem4(runner: SuiteRunner, family: FamilyDescriptor, binding: ParamBinding):
    if not family.is_idqm:
        yield "theorem4", None, "difference relation applies to idQM families"
        return
    if family.has_trivial_phi:
        yield "theorem4", None, "trivial Christoffel factor"
        return
    mutate = runner.spec.mutate
    for n in runner.degrees(THEOREM4_MAX_N):
        yield "theorem4", n, lambda b, n=n: operators.verify_theorem4(family, b, n, mutate)
        yield "triangle", n, lambda b, n=n: operators.consistency_triangle(family, b, n, mutate)


def _theorem8(runner: SuiteRunner, family: FamilyDescriptor, binding: ParamBinding):
    if family.is_idqm:
        yield "theorem8", None, "differential relation applies to oQM families"
        return
    if family.has_trivial_phi:
        yield "theorem8", None, "trivial Christoffel factor"
        return
    mutate = runner.spec.mutate
    for n in runner.degrees():
        yield "theorem8", n, lambda b, n=n: operators.verify_theorem8(family, b, n, mutate)


def _numeric(runner: SuiteRunner, family: FamilyDescriptor, binding: ParamBinding):
    config = runner.spec.numeric
    if family.tag not in config.families:
        yield "numeric", None, "numeric checks not enabled for this family"
        return
    if family.weight is None:
        yield "numeric", None, "no weight function"
        return
    n_max = runner.spec.n_max
    yield "weight-ratio", None, lambda b: numeric.weight_ratio_check(family, b, config)
    yield "orthogonality", None, lambda b: numeric.gram_check(family, b, config, n_max)
    if not family.has_trivial_phi:
        yield "christoffel-orthogonality", None, lambda b: numeric.christoffel_orthogonality_check(family, b, config, n_max)
    if family.uses_q:
        yield "truncation", None, lambda b: numeric.truncation_convergence_check(family, b, config)
    if family.tag == "AW":
        for j in range(1, 5):
            yield f"single-shift-weight-a{j}", None, lambda b, j=j: numeric.single_shift_weight_check(b, j, config)


SUITE_BUILDERS = {
    "basic": _basic,
    "christoffel": _christoffel,
    "single-shift": _single_shift,
    "operators": _operators,
    "theorem4": _theorem4,
    "theorem8": _theorem8,
    "numeric": _numeric,
}


def run(spec: SuiteSpec) -> VerificationReport:
    """Execute a SuiteSpec.

    Args:
        spec: Validated run specification

    Returns:
        VerificationReport with one record per (family, binding, suite, check, n)
    """
    return SuiteRunner(spec).run()
