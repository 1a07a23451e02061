"""
Irreducible representations, characters and the group Fourier transform.
"""

from .characters import (
    character_closed_form,
    character_closed_form_residues,
    character_l2_norm,
    class_function_l2_norm,
    expected_l2_norm,
)
from .engine import (
    MonomialMatrix,
    MonomialTable,
    RepMatrix,
    cached_realization,
    character_trace,
    character_trace_residues,
    element_residues,
    matrix_coefficient,
    matrix_coefficient_function,
    monomial_generator,
    monomial_residues,
    monomial_table,
    rep_matrix,
    rep_matrix_residues,
)
from .fourier import (
    FourierCoefficient,
    TestFunction,
    fourier_series,
    fourier_transform,
    plancherel_sum,
    schur_inner_product,
    synthesize,
)
from .realization import Realization, realization_for, realization_summary

__all__ = [
    "FourierCoefficient",
    "MonomialMatrix",
    "MonomialTable",
    "Realization",
    "RepMatrix",
    "TestFunction",
    "cached_realization",
    "character_closed_form",
    "character_closed_form_residues",
    "character_l2_norm",
    "character_trace",
    "character_trace_residues",
    "class_function_l2_norm",
    "element_residues",
    "expected_l2_norm",
    "fourier_series",
    "fourier_transform",
    "matrix_coefficient",
    "matrix_coefficient_function",
    "monomial_generator",
    "monomial_residues",
    "monomial_table",
    "plancherel_sum",
    "realization_for",
    "realization_summary",
    "rep_matrix",
    "rep_matrix_residues",
    "schur_inner_product",
    "synthesize",
]
