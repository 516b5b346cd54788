"""Representation variables, sinusoidal coordinates and their shift actions.

Classes (i)/(ii) work in ``x`` with the literal shifts ``x -> x -/+ i/2``;
classes (iii)/(iv) work in ``z = e^{ix}`` where the same shifts become the
scalings ``z -> s^{+/-1} z`` with ``s = q^{1/2}``. oQM families work in the
coordinate ``eta`` directly.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from src.askey.errors import ConversionFailureError, UnboundParameterError
from src.askey.exact import HALF, I, ONE, ExactScalar, Number
from src.askey.laurent import LaurentPoly, Variable, substitute_scale
from src.askey.models import FamilyDescriptor, ParamBinding


logger = logging.getLogger(__name__)

SHIFT = "shift"
SCALE = "scale"
ETA = "eta"


@dataclass(frozen=True)
class Representation:
    """How polynomials of one family are stored and shifted.

    Attributes:
        var: Representation variable
        kind: ``shift`` (classes i/ii), ``scale`` (classes iii/iv) or ``eta`` (oQM)
        eta: The coordinate eta written in ``var``
        varphi: The function phi(x) of the difference operators (idQM only)
        s: q^(1/2) for the ``scale`` kind
        w: Phase unit e^(i phi) of class (iv)
        kappa: Shape-invariance constant
        kappa_sum: kappa^(1/2) + kappa^(-1/2)
    """
    var: Variable
    kind: str
    eta: LaurentPoly
    varphi: Optional[LaurentPoly]
    s: Optional[ExactScalar]
    w: Optional[ExactScalar]
    kappa: ExactScalar
    kappa_sum: ExactScalar


def representation_of(family: FamilyDescriptor, binding: ParamBinding) -> Representation:
    """Representation data of ``family`` at ``binding``.

    Raises:
        UnboundParameterError: If the class needs q or the phase and the binding lacks it
    """
    two = ExactScalar(2)
    if not family.is_idqm:
        eta = LaurentPoly.monomial(Variable.ETA, 1)
        return Representation(Variable.ETA, ETA, eta, None, None, None, ONE, two)

    cls = family.coordinate
    if cls == "i":
        return Representation(Variable.X, SHIFT, LaurentPoly.monomial(Variable.X, 1),
                              LaurentPoly.constant(Variable.X, 1), None, None, ONE, two)
    if cls == "ii":
        return Representation(Variable.X, SHIFT, LaurentPoly.monomial(Variable.X, 2),
                              LaurentPoly.monomial(Variable.X, 1, 2), None, None, ONE, two)

    if binding.q_sqrt is None:
        raise UnboundParameterError(f"{family.tag} needs q through 's'")
    s = binding.q_sqrt
    w = ONE
    if cls == "iv":
        if binding.phi_unit is None:
            raise UnboundParameterError(f"{family.tag} needs the phase unit 'phase'")
        w = binding.phi_unit
    eta = LaurentPoly(Variable.Z, {1: w * HALF, -1: w.conj() * HALF})
    varphi = LaurentPoly(Variable.Z, {1: -I * w, -1: I * w.conj()})
    return Representation(Variable.Z, SCALE, eta, varphi, s, w if cls == "iv" else None,
                          ONE / (s * s), s + ONE / s)


def half_shift(rep: Representation, p, sign: int):
    """``g(x) -> g(x - sign*i*gamma/2)``, i.e. ``e^{sign*gamma*p/2}`` acting on ``g``.

    Accepts LaurentPoly or RationalFn.
    """
    if rep.kind == SHIFT:
        return p.substitute_shift(-sign * HALF * I)
    if rep.kind == SCALE:
        return p.substitute_scale(rep.s if sign > 0 else ONE / rep.s)
    raise ValueError("half shifts are not defined for oQM representations")


def full_shift(rep: Representation, p, sign: int):
    """``g(x) -> g(x - sign*i*gamma)``, i.e. ``e^{sign*gamma*p}`` acting on ``g``."""
    if rep.kind == SHIFT:
        return p.substitute_shift(-sign * I)
    if rep.kind == SCALE:
        q = rep.s * rep.s
        return p.substitute_scale(q if sign > 0 else ONE / q)
    raise ValueError("full shifts are not defined for oQM representations")


def to_eta_basis(rep: Representation, p: LaurentPoly) -> LaurentPoly:
    """Rewrite a representation polynomial as a polynomial in eta.

    Raises:
        ConversionFailureError: If ``p`` is not a polynomial in eta
    """
    if p.var is not rep.var:
        raise ConversionFailureError(f"expected a polynomial in {rep.var.value}, got {p.var.value}")
    if rep.kind == ETA:
        return p
    if rep.kind == SHIFT:
        step = rep.eta.degree()
        coeffs = {}
        for exponent, value in p.items():
            if exponent < 0 or exponent % step:
                raise ConversionFailureError(f"x^{exponent} is not a power of eta = {rep.eta}")
            coeffs[exponent // step] = value
        return LaurentPoly(Variable.ETA, coeffs)

    # u = w z turns eta into (u + 1/u)/2
    work = p if rep.w is None else substitute_scale(p, rep.w.conj())
    coeffs = {}
    while not work.is_zero():
        top = work.degree()
        if work.valuation() != -top:
            raise ConversionFailureError(f"{p} is not symmetric under z -> 1/z")
        lead = work.leading_coefficient() * (2 ** top)
        coeffs[top] = lead
        power = LaurentPoly(Variable.Z, {1: HALF, -1: HALF}) ** top
        work = work - power * lead
    return LaurentPoly(Variable.ETA, coeffs)


def from_eta_basis(rep: Representation, p: LaurentPoly) -> LaurentPoly:
    """Substitute the representation's eta into a polynomial in eta."""
    if p.var is not Variable.ETA:
        raise ConversionFailureError(f"expected a polynomial in eta, got {p.var.value}")
    if rep.kind == ETA:
        return p
    result = LaurentPoly.zero(rep.var)
    for exponent, value in p.items():
        result = result + (rep.eta ** exponent) * value
    return result


def evaluate_at(p: LaurentPoly, point: Number) -> ExactScalar:
    """Exact value of a representation polynomial at ``x_j``, ``z_j`` or ``eta_j``."""
    return p.evaluate(point)


def variable_of(family: FamilyDescriptor) -> Variable:
    """Representation variable of ``family`` without needing a binding."""
    if not family.is_idqm:
        return Variable.ETA
    return Variable.X if family.coordinate in ("i", "ii") else Variable.Z


def is_symmetric(rep: Representation, p: LaurentPoly) -> bool:
    """Whether ``p`` is a polynomial in eta (the z -> 1/z symmetry of classes iii/iv)."""
    try:
        to_eta_basis(rep, p)
    except ConversionFailureError:
        return False
    return True
