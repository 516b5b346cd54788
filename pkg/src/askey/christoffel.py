"""Christoffel factor, expansion coefficients and their cross-checks.

The factor multiplies the weight of a family into the weight of the shifted
family. Its expansion coefficients are obtained twice: from determinants of
P_n values at the factor's zeros, and from the printed closed forms.
"""
import logging
from typing import Dict, List, Sequence

from src.askey.catalog import (
    build_Pn,
    evaluate_sum,
    expansion_shift,
    eval_at_special_point,
    potential_V,
    shift_binding,
    shift_slot,
    special_rows,
)
from src.askey.errors import (
    ConversionFailureError,
    DegreeMismatchError,
    NonRealParameterError,
    NotDivisibleError,
    NotPhysicalError,
    ZeroDenominatorError,
)
from src.askey.exact import ONE, ZERO, ExactScalar, det
from src.askey.families.askey_wilson import (
    ASKEY_WILSON,
    AW_NAMES,
    single_shift_alpha0,
    single_shift_beta,
    single_shift_phi,
)
from src.askey.laurent import LaurentPoly, product
from src.askey.models import (
    ChristoffelCoefficients,
    FamilyDescriptor,
    ParamBinding,
    PhiFactorization,
    VerificationOutcome,
)
from src.askey.representation import half_shift, representation_of, to_eta_basis


logger = logging.getLogger(__name__)


def raw_phi(family: FamilyDescriptor, binding: ParamBinding) -> LaurentPoly:
    """The Christoffel factor in the representation variable.

    idQM: ``kappa^-1 phi^2 phi(x - i gamma/2) phi(x + i gamma/2) V V*``.
    oQM: ``(4/c_F^2) c_2(eta)``.

    Raises:
        DegreeMismatchError: If the idQM product is not a Laurent polynomial
    """
    if not family.is_idqm:
        return family.c2(binding) * (4 / (family.c_F * family.c_F))
    rep = representation_of(family, binding)
    phi = rep.varphi
    v = potential_V(family, binding)
    prefactor = phi * phi * half_shift(rep, phi, 1) * half_shift(rep, phi, -1) * (ONE / rep.kappa)
    try:
        return (v * v.star_conjugate() * prefactor).to_polynomial()
    except NotDivisibleError as exc:
        raise DegreeMismatchError(f"{family.tag}: Christoffel factor is not polynomial: {exc}") from exc


def compute_phi(family: FamilyDescriptor, binding: ParamBinding) -> PhiFactorization:
    """Christoffel factor with its eta-degree, leading coefficient and zeros.

    Raises:
        DegreeMismatchError: If the factor is not a polynomial in eta of degree m
    """
    phi = raw_phi(family, binding)
    rep = representation_of(family, binding)
    try:
        eta_phi = to_eta_basis(rep, phi)
    except ConversionFailureError as exc:
        raise DegreeMismatchError(f"{family.tag}: Christoffel factor is not a polynomial in eta") from exc
    degree = 0 if eta_phi.is_zero() else eta_phi.degree()
    if eta_phi.is_zero() or degree != family.m_degree:
        raise DegreeMismatchError(f"{family.tag}: Christoffel factor has eta-degree {degree}, "
                                  f"expected {family.m_degree}")
    zeros = family.zeros(binding) if family.zeros else ()
    return PhiFactorization(phi=phi, m=degree, c_phi=eta_phi.leading_coefficient(), zeros=tuple(zeros))


def trivial_phi_check(family: FamilyDescriptor, binding: ParamBinding) -> bool:
    """Whether the Christoffel factor is the constant 1 (families with m = 0)."""
    if not family.has_trivial_phi:
        raise ValueError(f"{family.tag} has a nontrivial Christoffel factor")
    phi = raw_phi(family, binding)
    return phi == LaurentPoly.constant(phi.var, 1)


def phi_check(family: FamilyDescriptor, binding: ParamBinding) -> VerificationOutcome:
    """Leading coefficient and zeros of the Christoffel factor against the printed data."""
    factor = compute_phi(family, binding)
    outcomes = [VerificationOutcome.from_residual(factor.c_phi - family.c_phi(binding), "c_phi")]
    rep = representation_of(family, binding)
    eta_phi = to_eta_basis(rep, factor.phi)
    for j, zero in enumerate(factor.zeros):
        poly = eta_phi
        for order in range(zero.multiplicity):
            outcomes.append(VerificationOutcome.from_residual(poly.evaluate(zero.eta), f"zero {j} order {order}"))
            poly = poly.derivative()
        if zero.multiplicity == 1:
            value = factor.phi.evaluate(zero.rep_point)
            outcomes.append(VerificationOutcome.from_residual(value, f"zero {j} at representation point"))
    return VerificationOutcome.combine(outcomes, "Christoffel factor")


def determinant_rows(family: FamilyDescriptor, binding: ParamBinding, n: int,
                     ells: Sequence[int]) -> List[List[ExactScalar]]:
    """Rows ``P_{n+l}(x_j) / P_n(x_j)`` of the Christoffel determinant.

    Rows of a multiple zero use eta-derivatives of order 0..r-1, each
    normalized by the same derivative of P_n; a vanishing derivative
    normalizer leaves that row unnormalized.

    Raises:
        ZeroDenominatorError: If P_n vanishes at a simple zero
    """
    rows = []
    for j, order in special_rows(family, binding):
        values = [eval_at_special_point(family, binding, n + ell, j, order) for ell in ells]
        norm = eval_at_special_point(family, binding, n, j, order)
        if norm == ZERO:
            if order == 0:
                raise ZeroDenominatorError(f"{family.tag}: P_{n} vanishes at zero {j}")
            rows.append(values)
        else:
            rows.append([value / norm for value in values])
    return rows


def D_matrix_det(family: FamilyDescriptor, binding: ParamBinding, n: int, ells: Sequence[int]) -> ExactScalar:
    """``D_n^(ells)``, the determinant of ``determinant_rows``."""
    if len(ells) != family.m_degree:
        raise ValueError(f"{family.tag} needs {family.m_degree} column indices, got {len(ells)}")
    return det(determinant_rows(family, binding, n, ells))


def alpha_from_determinants(family: FamilyDescriptor, binding: ParamBinding, n: int) -> ChristoffelCoefficients:
    """Expansion coefficients from determinant ratios.

    ``alpha_k = (-1)^(m-k) D^(0..k^..m) / D^(0..m-1)``; beta follows from the
    leading coefficients and beta^F from the forward-shift coefficients.

    Raises:
        ZeroDenominatorError: If the base determinant or a normalizer vanishes
    """
    m = family.m_degree
    base = D_matrix_det(family, binding, n, list(range(m)))
    if base == ZERO:
        raise ZeroDenominatorError(f"{family.tag}: D_{n}^(0..{m - 1}) vanishes")
    alpha = []
    for k in range(m + 1):
        ells = [ell for ell in range(m + 1) if ell != k]
        alpha.append((-1) ** (m - k) * D_matrix_det(family, binding, n, ells) / base)

    c_phi = compute_phi(family, binding).c_phi
    shifted = shift_binding(family, binding, expansion_shift(family))
    beta = c_phi * family.leading(shifted, n) / family.leading(binding, n + m)
    return ChristoffelCoefficients(n=n, alpha=tuple(alpha), beta=beta, beta_f=beta_f_from_beta(family, binding, n, beta))


def beta_f_from_beta(family: FamilyDescriptor, binding: ParamBinding, n: int, beta: ExactScalar) -> ExactScalar:
    if family.is_idqm:
        once = shift_binding(family, binding, 1)
        return family.forward_coeff(once, n + 1) * family.forward_coeff(binding, n + 2) * beta
    return family.forward_coeff(binding, n + 1) * beta


def alpha_closed_form(family: FamilyDescriptor, binding: ParamBinding, n: int,
                      mutate: bool = False) -> ChristoffelCoefficients:
    """Printed closed forms; ``mutate`` adds 1 to alpha_{n,0} for mutation runs."""
    alpha = list(family.alpha(binding, n))
    if mutate:
        alpha[0] = alpha[0] + 1
    return ChristoffelCoefficients(n=n, alpha=tuple(alpha), beta=family.beta(binding, n),
                                   beta_f=family.beta_f(binding, n))


def compare_coefficients(computed: ChristoffelCoefficients,
                         printed: ChristoffelCoefficients) -> VerificationOutcome:
    if len(computed.alpha) != len(printed.alpha):
        return VerificationOutcome(False, f"{len(computed.alpha)} vs {len(printed.alpha)} coefficients",
                                   "coefficient count")
    outcomes = [VerificationOutcome.from_residual(c - p, f"alpha_{computed.n},{k}")
                for k, (c, p) in enumerate(zip(computed.alpha, printed.alpha))]
    outcomes.append(VerificationOutcome.from_residual(computed.beta - printed.beta, "beta"))
    outcomes.append(VerificationOutcome.from_residual(computed.beta_f - printed.beta_f, "beta^F"))
    return VerificationOutcome.combine(outcomes, "coefficients")


def determinant_check(family: FamilyDescriptor, binding: ParamBinding, n: int) -> VerificationOutcome:
    """``D_n^(0..m-1)`` against its printed value."""
    computed = D_matrix_det(family, binding, n, list(range(family.m_degree)))
    return VerificationOutcome.from_residual(computed - family.determinant(binding, n), "D_n^(0..m-1)")


def expansion_residual(family: FamilyDescriptor, binding: ParamBinding, n: int,
                       coefficients: ChristoffelCoefficients) -> LaurentPoly:
    """``Phi * P_n(shifted) - beta * sum_k alpha_k P_{n+k}``."""
    phi = raw_phi(family, binding)
    shifted = shift_binding(family, binding, expansion_shift(family))
    lhs = phi * build_Pn(family, shifted, n)
    rhs = evaluate_sum(family, binding, n, coefficients.alpha) * coefficients.beta
    return lhs - rhs


def verify_expansion(family: FamilyDescriptor, binding: ParamBinding, n: int,
                     mutate: bool = False) -> VerificationOutcome:
    """The expansion identity with closed-form and determinant-path coefficients."""
    outcomes = [VerificationOutcome.from_residual(
        expansion_residual(family, binding, n, alpha_closed_form(family, binding, n, mutate)),
        "closed-form coefficients")]
    outcomes.append(VerificationOutcome.from_residual(
        expansion_residual(family, binding, n, alpha_from_determinants(family, binding, n)),
        "determinant coefficients"))
    return VerificationOutcome.combine(outcomes, "expansion")


def degree_check(family: FamilyDescriptor, binding: ParamBinding, n: int) -> VerificationOutcome:
    """eta-degree n+m of the transformed polynomial, with leading coefficient beta_n c_{n+m}."""
    rep = representation_of(family, binding)
    shifted = shift_binding(family, binding, expansion_shift(family))
    lhs = to_eta_basis(rep, raw_phi(family, binding) * build_Pn(family, shifted, n))
    m = family.m_degree
    if lhs.is_zero() or lhs.degree() != n + m:
        return VerificationOutcome(False, str(lhs), f"expected eta-degree {n + m}")
    expected = family.beta(binding, n) * family.leading(binding, n + m)
    return VerificationOutcome.from_residual(lhs.leading_coefficient() - expected, "leading coefficient")


def diagonal_nonvanishing(family: FamilyDescriptor, binding: ParamBinding, n: int) -> bool:
    """Whether ``beta_n alpha_{n,0}`` is nonzero at a physical binding.

    Raises:
        NotPhysicalError: If the binding is outside the physical range
    """
    if family.physical is not None and not family.physical(binding):
        raise NotPhysicalError(f"{family.tag} binding {binding.digest()} is not physical")
    return family.beta(binding, n) * family.alpha(binding, n)[0] != ZERO


# Askey-Wilson single-parameter shifts

def _require_real(binding: ParamBinding, names: Sequence[str]) -> None:
    for name in names:
        if not binding[name].is_real():
            raise NonRealParameterError(f"AW parameter {name} = {binding[name]} is not real")


def single_shift_aw(binding: ParamBinding, j: int, n: int) -> VerificationOutcome:
    """Shifting only ``a_j -> q a_j`` (j = 1..4) gives a two-term expansion.

    Raises:
        NonRealParameterError: If ``a_j`` is not real
    """
    if not 1 <= j <= 4:
        raise ValueError(f"j must lie in 1..4, got {j}")
    name = AW_NAMES[j - 1]
    _require_real(binding, [name])
    shifted = shift_slot(ASKEY_WILSON, binding, name, 2)
    lhs = single_shift_phi(binding, j - 1) * build_Pn(ASKEY_WILSON, shifted, n)
    alpha0 = single_shift_alpha0(binding, n, j - 1)
    rhs = evaluate_sum(ASKEY_WILSON, binding, n, [alpha0, ONE]) * single_shift_beta(binding, n, j - 1)
    return VerificationOutcome.from_residual(lhs - rhs, f"single shift of a{j}")


def single_shift_product_check(binding: ParamBinding) -> VerificationOutcome:
    """The four single-shift factors multiply to the full Christoffel factor."""
    factors = product((single_shift_phi(binding, j) for j in range(4)), raw_phi(ASKEY_WILSON, binding).var)
    return VerificationOutcome.from_residual(factors - raw_phi(ASKEY_WILSON, binding), "product of single-shift factors")


def composed_coefficients(binding: ParamBinding, n: int) -> Dict[int, ExactScalar]:
    """Full-shift coefficients ``beta_n alpha_{n,k}`` assembled from four single shifts.

    The shifts are applied for a4, a3, a2, a1 in turn; the step for a_j uses
    the binding in which a_1..a_{j-1} are already multiplied by q.
    """
    stages = [binding]
    for name in AW_NAMES[:3]:
        stages.append(shift_slot(ASKEY_WILSON, stages[-1], name, 2))

    terms: Dict[int, ExactScalar] = {0: ONE}
    for j in range(3, -1, -1):
        stage = stages[j]
        updated: Dict[int, ExactScalar] = {}
        for k, c in terms.items():
            idx = n + k
            beta = single_shift_beta(stage, idx, j)
            alpha0 = single_shift_alpha0(stage, idx, j)
            updated[k] = updated.get(k, ZERO) + c * beta * alpha0
            updated[k + 1] = updated.get(k + 1, ZERO) + c * beta
        terms = updated
    return terms


def composition_check_aw(binding: ParamBinding, n: int) -> VerificationOutcome:
    """Composed single-shift coefficients equal the full-shift closed forms.

    Raises:
        NonRealParameterError: If any a_j is not real
    """
    _require_real(binding, AW_NAMES)
    composed = composed_coefficients(binding, n)
    printed = alpha_closed_form(ASKEY_WILSON, binding, n)
    outcomes = [VerificationOutcome.from_residual(composed.get(k, ZERO) - printed.beta * printed.alpha[k],
                                                  f"beta alpha_{n},{k}")
                for k in range(len(printed.alpha))]
    return VerificationOutcome.combine(outcomes, "composition")
