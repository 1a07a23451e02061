"""
The nilpotent group laws on ℤ_p^d and their elements.
"""

from .elements import (
    DEFAULT_QUOTIENT_CAP,
    GroupElement,
    enumerate_quotient,
    identity,
    inverse,
    one_param,
    quotient_positions,
    quotient_residues,
    star,
)
from .laws import (
    LAW_IDS,
    AbelianLaw,
    EngelLaw,
    G52Law,
    G53Law,
    G54Law,
    G55Law,
    G56Law,
    GroupLaw,
    HeisenbergLaw,
    available_laws,
    law_for,
    unit_inverse,
)

__all__ = [
    "DEFAULT_QUOTIENT_CAP",
    "LAW_IDS",
    "AbelianLaw",
    "EngelLaw",
    "G52Law",
    "G53Law",
    "G54Law",
    "G55Law",
    "G56Law",
    "GroupElement",
    "GroupLaw",
    "HeisenbergLaw",
    "available_laws",
    "enumerate_quotient",
    "identity",
    "inverse",
    "law_for",
    "one_param",
    "quotient_positions",
    "quotient_residues",
    "star",
    "unit_inverse",
]
