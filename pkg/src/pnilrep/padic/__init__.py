"""
Exact p-adic arithmetic: truncated integers, dual tails and phases.
"""

from .numbers import (
    DualElem,
    DualPoint,
    PadicInt,
    PhaseRational,
    Valuation,
    character_eval,
    check_prime,
    div_exact,
    fractional_part,
    int_valuation,
    lambda_p,
    legendre,
    phase_to_complex,
    rational_fractional_part,
    rational_valuation,
    valuation,
)

__all__ = [
    "DualElem",
    "DualPoint",
    "PadicInt",
    "PhaseRational",
    "Valuation",
    "character_eval",
    "check_prime",
    "div_exact",
    "fractional_part",
    "int_valuation",
    "lambda_p",
    "legendre",
    "phase_to_complex",
    "rational_fractional_part",
    "rational_valuation",
    "valuation",
]
