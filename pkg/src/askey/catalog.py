"""Family-level operations: building P_n, shifting parameters and the basic identities."""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import List

import numpy as np

from src.askey.errors import IndexOutOfRangeError, NotIdQMError
from src.askey.exact import ZERO, ExactScalar
from src.askey.families import get_family
from src.askey.laurent import LaurentPoly, RationalFn
from src.askey.models import (
    FamilyDescriptor,
    ParamBinding,
    SpectralData,
    VerificationOutcome,
)
from src.askey.representation import (
    is_symmetric,
    representation_of,
    to_eta_basis,
    variable_of,
)


logger = logging.getLogger(__name__)

PERTURBATION_DENOMINATOR = 997


@lru_cache(maxsize=4096)
def _build_cached(tag: str, binding: ParamBinding, n: int) -> LaurentPoly:
    return get_family(tag).build(binding, n)


def build_Pn(family: FamilyDescriptor, binding: ParamBinding, n: int) -> LaurentPoly:
    """P_n in the representation variable, with ``P_{-1} = 0``.

    Results are memoized per (family, binding, n); the cache is only used
    for registered families.
    """
    if n < -1:
        raise ValueError(f"n must be at least -1, got {n}")
    if n == -1:
        return LaurentPoly.zero(variable_of(family))
    if n == 0:
        return LaurentPoly.constant(variable_of(family), 1)
    try:
        registered = get_family(family.tag) is family
    except ValueError:
        registered = False
    if registered:
        return _build_cached(family.tag, binding, n)
    return family.build(binding, n)


def clear_cache() -> None:
    _build_cached.cache_clear()


def shift_slot(family: FamilyDescriptor, binding: ParamBinding, name: str, times: int) -> ParamBinding:
    """Apply ``times`` copies of the shift of a single slot.

    Additive slots move by ``shift*times``; q-power slots are multiplied by
    the matching power of ``s``.
    """
    slot = family.slot(name)
    value = binding[name]
    if slot.mode == "additive":
        updated = value + slot.shift * times
    else:
        updated = value * binding.s ** slot.scale_power(times)
    return binding.with_values(**{name: updated})


def shift_binding(family: FamilyDescriptor, binding: ParamBinding, times: int = 1) -> ParamBinding:
    """``lambda -> lambda + times*delta``."""
    shifted = binding
    for slot in family.slots:
        if slot.shift:
            shifted = shift_slot(family, shifted, slot.name, times)
    return shifted


def expansion_shift(family: FamilyDescriptor) -> int:
    """Number of delta-shifts in the Christoffel expansion: 2 for idQM, 1 for oQM."""
    return 2 if family.is_idqm else 1


def eta_form(family: FamilyDescriptor, binding: ParamBinding, n: int) -> LaurentPoly:
    """P_n rewritten as a polynomial in eta."""
    rep = representation_of(family, binding)
    return to_eta_basis(rep, build_Pn(family, binding, n))


def leading_coefficient_check(family: FamilyDescriptor, binding: ParamBinding, n: int) -> bool:
    """Whether P_n has eta-degree n with leading coefficient c_n.

    Raises:
        ConversionFailureError: If P_n is not a polynomial in eta
    """
    poly = eta_form(family, binding, n)
    if poly.is_zero() or poly.degree() != n:
        logger.debug(f"{family.tag}: P_{n} has eta-degree {None if poly.is_zero() else poly.degree()}")
        return False
    return poly.leading_coefficient() == family.leading(binding, n)


def potential_V(family: FamilyDescriptor, binding: ParamBinding) -> RationalFn:
    """The potential V in the representation variable.

    Raises:
        NotIdQMError: For oQM families
    """
    if not family.is_idqm or family.potential is None:
        raise NotIdQMError(f"{family.tag} has no difference-equation potential")
    return family.potential(binding)


def spectral_data(family: FamilyDescriptor, binding: ParamBinding, n: int) -> SpectralData:
    return SpectralData(
        energy=family.energy(binding, n),
        forward=family.forward_coeff(binding, n),
        backward=family.backward_coeff(binding, n),
    )


def spectral_check(family: FamilyDescriptor, binding: ParamBinding, n: int) -> VerificationOutcome:
    """``E_0 = 0`` at n = 0 and ``f_n b_{n-1} = E_n`` for n >= 1."""
    energy = family.energy(binding, n)
    if n == 0:
        return VerificationOutcome.from_residual(energy, "E_0")
    product = family.forward_coeff(binding, n) * family.backward_coeff(binding, n - 1)
    return VerificationOutcome.from_residual(product - energy, "f_n b_{n-1} - E_n")


def symmetry_check(family: FamilyDescriptor, binding: ParamBinding, n: int) -> VerificationOutcome:
    """P_n of classes iii/iv must be invariant under the (twisted) inversion of z."""
    rep = representation_of(family, binding)
    poly = build_Pn(family, binding, n)
    if is_symmetric(rep, poly):
        return VerificationOutcome(True, detail="symmetric in z")
    return VerificationOutcome(False, str(poly), "P_n is not a polynomial in eta")


def special_rows(family: FamilyDescriptor, binding: ParamBinding) -> List[tuple]:
    """Flattened determinant rows as (zero index, derivative order)."""
    zeros = family.zeros(binding) if family.zeros else ()
    return [(j, order) for j, zero in enumerate(zeros) for order in range(zero.multiplicity)]


def eval_at_special_point(family: FamilyDescriptor, binding: ParamBinding, n: int, j: int,
                          order: int = 0) -> ExactScalar:
    """P_n (or its ``order``-th eta-derivative) at the j-th zero of the Christoffel factor.

    Raises:
        IndexOutOfRangeError: If ``j`` does not index a zero or ``order`` exceeds its multiplicity
    """
    zeros = family.zeros(binding) if family.zeros else ()
    if not 0 <= j < len(zeros):
        raise IndexOutOfRangeError(f"{family.tag} has {len(zeros)} zeros, got index {j}")
    zero = zeros[j]
    if not 0 <= order < zero.multiplicity:
        raise IndexOutOfRangeError(f"zero {j} of {family.tag} has multiplicity {zero.multiplicity}")
    if order == 0:
        return build_Pn(family, binding, n).evaluate(zero.rep_point)
    poly = eta_form(family, binding, n)
    for _ in range(order):
        poly = poly.derivative()
    return poly.evaluate(zero.eta)


def special_value_closed_form(family: FamilyDescriptor, binding: ParamBinding, n: int, row: int) -> ExactScalar:
    return family.special_values(binding, n, row)


def special_value_check(family: FamilyDescriptor, binding: ParamBinding, n: int) -> VerificationOutcome:
    """Compare every determinant-row value of P_n with its printed closed form."""
    outcomes = []
    for row, (j, order) in enumerate(special_rows(family, binding)):
        computed = eval_at_special_point(family, binding, n, j, order)
        printed = special_value_closed_form(family, binding, n, row)
        outcomes.append(VerificationOutcome.from_residual(computed - printed, f"row {row}"))
    return VerificationOutcome.combine(outcomes, "special values")


def perturb_binding(family: FamilyDescriptor, binding: ParamBinding, seed: int, attempt: int = 1) -> ParamBinding:
    """Move a binding off a non-generic point by a small rational amount.

    One real ``eps = k/997`` is used for every slot (added to additive
    slots, ``1 + eps`` multiplies q-power slots) so conjugation closure of
    the parameter set is preserved.
    """
    rng = np.random.default_rng([seed, attempt, int(binding.digest()[:8], 16)])
    eps = Fraction(int(rng.integers(1, 20)), PERTURBATION_DENOMINATOR)
    updates = {}
    for slot in family.slots:
        value = binding[slot.name]
        updates[slot.name] = value + eps if slot.mode == "additive" else value * (1 + eps)
    perturbed = binding.with_values(**updates)
    logger.warning(f"{family.tag}: perturbed binding {binding.digest()} -> {perturbed.digest()} (eps={eps})")
    return perturbed


def evaluate_sum(family: FamilyDescriptor, binding: ParamBinding, n: int, coefficients) -> LaurentPoly:
    """``sum_k coefficients[k] * P_{n+k}``."""
    total = LaurentPoly.zero(variable_of(family))
    for k, value in enumerate(coefficients):
        if value != ZERO:
            total = total + build_Pn(family, binding, n + k) * value
    return total
