"""Shift operators, the square-root-free Hamiltonian and the difference/differential relations."""
import logging

from src.askey.catalog import build_Pn, evaluate_sum, potential_V, shift_binding
from src.askey.christoffel import alpha_closed_form, raw_phi
from src.askey.errors import NotIdQMError
from src.askey.exact import I, ONE
from src.askey.laurent import LaurentPoly, RationalFn, Variable, exact_divide
from src.askey.models import FamilyDescriptor, ParamBinding, VerificationOutcome
from src.askey.representation import (
    Representation,
    from_eta_basis,
    full_shift,
    half_shift,
    representation_of,
)


logger = logging.getLogger(__name__)

PROP3_DEGREE = 10


def forward_shift(family: FamilyDescriptor, binding: ParamBinding, poly: LaurentPoly) -> LaurentPoly:
    """F acting on a representation polynomial.

    idQM: ``i (g(x - i gamma/2) - g(x + i gamma/2)) / phi``; oQM: ``c_F dg/deta``.

    Raises:
        NotDivisibleError: If the difference is not divisible by phi
    """
    if not family.is_idqm:
        return poly.derivative() * family.c_F
    rep = representation_of(family, binding)
    difference = (half_shift(rep, poly, 1) - half_shift(rep, poly, -1)) * I
    return exact_divide(difference, rep.varphi)


def backward_shift(family: FamilyDescriptor, binding: ParamBinding, poly: LaurentPoly) -> LaurentPoly:
    """B acting on a representation polynomial of the shifted family.

    idQM: ``-i (V (phi g)(x - i gamma/2) - V* (phi g)(x + i gamma/2))``;
    oQM: ``-(4/c_F)(c_2 dg/deta + c_1 g)``.

    Raises:
        NotDivisibleError: If the image is not a polynomial
    """
    if not family.is_idqm:
        image = family.c2(binding) * poly.derivative() + family.c1(binding) * poly
        return image * (-4 / family.c_F)
    rep = representation_of(family, binding)
    v = potential_V(family, binding)
    lifted = rep.varphi * poly
    image = v * half_shift(rep, lifted, 1) - v.star_conjugate() * half_shift(rep, lifted, -1)
    return (image * (-I)).to_polynomial()


def apply_Htilde(family: FamilyDescriptor, binding: ParamBinding, poly: LaurentPoly) -> LaurentPoly:
    """The similarity-transformed Hamiltonian.

    idQM: ``V (g(x - i gamma) - g) + V* (g(x + i gamma) - g)``;
    oQM: ``-4 c_2 g'' - 4 c_1 g'``.

    Raises:
        NotDivisibleError: If the image is not a polynomial
    """
    if not family.is_idqm:
        first = poly.derivative()
        return (family.c2(binding) * first.derivative() + family.c1(binding) * first) * -4
    rep = representation_of(family, binding)
    v = potential_V(family, binding)
    image = v * (full_shift(rep, poly, 1) - poly) + v.star_conjugate() * (full_shift(rep, poly, -1) - poly)
    return image.to_polynomial()


def forward_relation_check(family: FamilyDescriptor, binding: ParamBinding, n: int) -> VerificationOutcome:
    """``F(lambda) P_n(lambda) = f_n P_{n-1}(lambda + delta)``."""
    lhs = forward_shift(family, binding, build_Pn(family, binding, n))
    rhs = build_Pn(family, shift_binding(family, binding, 1), n - 1) * family.forward_coeff(binding, n)
    return VerificationOutcome.from_residual(lhs - rhs, "forward shift")


def backward_relation_check(family: FamilyDescriptor, binding: ParamBinding, n: int) -> VerificationOutcome:
    """``B(lambda) P_{n-1}(lambda + delta) = b_{n-1} P_n(lambda)`` for n >= 1."""
    if n < 1:
        raise ValueError(f"the backward relation starts at n = 1, got {n}")
    lhs = backward_shift(family, binding, build_Pn(family, shift_binding(family, binding, 1), n - 1))
    rhs = build_Pn(family, binding, n) * family.backward_coeff(binding, n - 1)
    return VerificationOutcome.from_residual(lhs - rhs, "backward shift")


def eigen_check(family: FamilyDescriptor, binding: ParamBinding, n: int) -> VerificationOutcome:
    """``H~ P_n = E_n P_n``."""
    poly = build_Pn(family, binding, n)
    residual = apply_Htilde(family, binding, poly) - poly * family.energy(binding, n)
    return VerificationOutcome.from_residual(residual, "eigenvalue equation")


def factorization_check(family: FamilyDescriptor, binding: ParamBinding, n: int) -> VerificationOutcome:
    """``H~ = B F`` on P_n."""
    poly = build_Pn(family, binding, n)
    composed = backward_shift(family, binding, forward_shift(family, binding, poly))
    return VerificationOutcome.from_residual(composed - apply_Htilde(family, binding, poly), "H~ = B F")


def double_forward_numerator(rep: Representation, poly: LaurentPoly) -> LaurentPoly:
    """``kappa_sum phi g - phi(x + i gamma/2) g(x - i gamma) - phi(x - i gamma/2) g(x + i gamma)``.

    Equals ``phi phi(x - i gamma/2) phi(x + i gamma/2)`` times the double forward shift of ``g``.
    """
    phi = rep.varphi
    phi_minus = half_shift(rep, phi, 1)
    phi_plus = half_shift(rep, phi, -1)
    return (phi * poly * rep.kappa_sum
            - phi_plus * full_shift(rep, poly, 1)
            - phi_minus * full_shift(rep, poly, -1))


def verify_prop3(family: FamilyDescriptor, binding: ParamBinding, max_degree: int = PROP3_DEGREE) -> VerificationOutcome:
    """Double forward shift in closed form.

    Checks ``phi(x - i gamma/2) + phi(x + i gamma/2) = kappa_sum phi`` and, on
    every eta-monomial up to ``max_degree``, that ``F(lambda+delta) F(lambda)``
    times ``phi phi_- phi_+`` equals ``double_forward_numerator``.
    """
    if not family.is_idqm:
        raise NotIdQMError(f"{family.tag} is not a difference-equation family")
    rep = representation_of(family, binding)
    phi = rep.varphi
    outcomes = [VerificationOutcome.from_residual(
        half_shift(rep, phi, 1) + half_shift(rep, phi, -1) - phi * rep.kappa_sum, "phi half-shift sum")]
    shifted = shift_binding(family, binding, 1)
    weight = phi * half_shift(rep, phi, 1) * half_shift(rep, phi, -1)
    for degree in range(max_degree + 1):
        g = from_eta_basis(rep, LaurentPoly.monomial(Variable.ETA, degree))
        twice = forward_shift(family, shifted, forward_shift(family, binding, g))
        residual = twice * weight - double_forward_numerator(rep, g)
        outcomes.append(VerificationOutcome.from_residual(residual, f"eta^{degree}"))
    return VerificationOutcome.combine(outcomes, "double forward shift")


def double_forward_check(family: FamilyDescriptor, binding: ParamBinding, n: int) -> VerificationOutcome:
    """``F(lambda+delta) F(lambda) P_{n+2}(lambda) = f_{n+1}(lambda+delta) f_{n+2}(lambda) P_n(lambda+2 delta)``."""
    shifted = shift_binding(family, binding, 1)
    lhs = forward_shift(family, shifted, forward_shift(family, binding, build_Pn(family, binding, n + 2)))
    factor = family.forward_coeff(shifted, n + 1) * family.forward_coeff(binding, n + 2)
    rhs = build_Pn(family, shift_binding(family, binding, 2), n) * factor
    return VerificationOutcome.from_residual(lhs - rhs, "double forward shift of P_{n+2}")


def verify_theorem4(family: FamilyDescriptor, binding: ParamBinding, n: int,
                    mutate: bool = False) -> VerificationOutcome:
    """Difference relation: ``kappa^-1 phi V V* N(P_{n+2}) = beta^F_n sum_k alpha_{n,k} P_{n+k}``.

    ``N`` is ``double_forward_numerator``; both sides are compared after
    clearing the denominators of V and V* once.
    """
    if not family.is_idqm:
        raise NotIdQMError(f"{family.tag} is not a difference-equation family")
    rep = representation_of(family, binding)
    v = potential_V(family, binding)
    numerator = double_forward_numerator(rep, build_Pn(family, binding, n + 2))
    lhs = v * v.star_conjugate() * (rep.varphi * numerator * (ONE / rep.kappa))
    coefficients = alpha_closed_form(family, binding, n, mutate)
    rhs = RationalFn(evaluate_sum(family, binding, n, coefficients.alpha) * coefficients.beta_f)
    residual = lhs.num * rhs.den - rhs.num * lhs.den
    return VerificationOutcome.from_residual(residual, "difference relation")


def consistency_triangle(family: FamilyDescriptor, binding: ParamBinding, n: int,
                         mutate: bool = False) -> VerificationOutcome:
    """Christoffel factor times the double forward shift of P_{n+2} against the expansion.

    Together with ``double_forward_check`` this ties the difference relation
    back to the Christoffel expansion.
    """
    shifted = shift_binding(family, binding, 1)
    twice = forward_shift(family, shifted, forward_shift(family, binding, build_Pn(family, binding, n + 2)))
    coefficients = alpha_closed_form(family, binding, n, mutate)
    rhs = evaluate_sum(family, binding, n, coefficients.alpha) * coefficients.beta_f
    return VerificationOutcome.combine([
        double_forward_check(family, binding, n),
        VerificationOutcome.from_residual(raw_phi(family, binding) * twice - rhs, "Christoffel factor times F F P"),
    ], "consistency triangle")


def verify_theorem8(family: FamilyDescriptor, binding: ParamBinding, n: int,
                    mutate: bool = False) -> VerificationOutcome:
    """Differential relation: ``(4/c_F) c_2 P'_{n+1} = beta^F_n sum_k alpha_{n,k} P_{n+k}``."""
    if family.is_idqm:
        raise ValueError(f"{family.tag} is not a differential-equation family")
    lhs = family.c2(binding) * build_Pn(family, binding, n + 1).derivative() * (4 / family.c_F)
    coefficients = alpha_closed_form(family, binding, n, mutate)
    rhs = evaluate_sum(family, binding, n, coefficients.alpha) * coefficients.beta_f
    return VerificationOutcome.from_residual(lhs - rhs, "differential relation")
