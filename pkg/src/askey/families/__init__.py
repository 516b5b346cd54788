"""Registry of the eighteen polynomial families."""
from typing import Dict, List

from src.askey.families.askey_wilson import (
    AL_SALAM_CHIHARA,
    ASKEY_WILSON,
    CONTINUOUS_BIG_Q_HERMITE,
    CONTINUOUS_DUAL_Q_HAHN,
    CONTINUOUS_Q_HERMITE,
)
from src.askey.families.classical import BESSEL, HERMITE, JACOBI, LAGUERRE, PSEUDO_JACOBI
from src.askey.families.continuous import CONTINUOUS_HAHN, MEIXNER_POLLACZEK
from src.askey.families.q_hahn import CONTINUOUS_Q_HAHN, Q_MEIXNER_POLLACZEK
from src.askey.families.q_jacobi import CONTINUOUS_Q_JACOBI, CONTINUOUS_Q_LAGUERRE
from src.askey.families.wilson import CONTINUOUS_DUAL_HAHN, WILSON
from src.askey.models import DEFAULT_NUMERIC_FAMILIES, FamilyDescriptor


FAMILIES: Dict[str, FamilyDescriptor] = {
    family.tag: family
    for family in (
        CONTINUOUS_HAHN,
        MEIXNER_POLLACZEK,
        WILSON,
        CONTINUOUS_DUAL_HAHN,
        ASKEY_WILSON,
        CONTINUOUS_DUAL_Q_HAHN,
        AL_SALAM_CHIHARA,
        CONTINUOUS_BIG_Q_HERMITE,
        CONTINUOUS_Q_HERMITE,
        CONTINUOUS_Q_JACOBI,
        CONTINUOUS_Q_LAGUERRE,
        CONTINUOUS_Q_HAHN,
        Q_MEIXNER_POLLACZEK,
        HERMITE,
        LAGUERRE,
        JACOBI,
        BESSEL,
        PSEUDO_JACOBI,
    )
}


def get_family(tag: str) -> FamilyDescriptor:
    """Look up a family by tag.

    Raises:
        ValueError: If the tag is unknown
    """
    try:
        return FAMILIES[tag]
    except KeyError:
        raise ValueError(f"unknown family '{tag}'; choose from {list(FAMILIES)}") from None


def family_tags() -> List[str]:
    return list(FAMILIES)


__all__ = ["FAMILIES", "DEFAULT_NUMERIC_FAMILIES", "get_family", "family_tags"]
