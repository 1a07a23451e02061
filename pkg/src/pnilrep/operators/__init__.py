"""
Vladimirov–Taibleson operators, sub-Laplacian symbols and spectra.
"""

from .hypoelliptic import hypoellipticity_margin, japanese_bracket
from .sublaplacian import (
    Cycle,
    DirectionAction,
    Eigenfunction,
    SpectralDecomposition,
    SpectralEntry,
    SymbolMatrix,
    block_residual,
    canonical_directions,
    check_directions,
    closed_form_spectrum,
    direction_action,
    directional_symbol,
    eigenfunction,
    generator_norm,
    numeric_eigenfunctions,
    spectral_decomposition,
    spectrum_report,
    sublaplacian_symbol,
    symbol_blocks,
)
from .vt import (
    directional_vt_apply,
    frequency_level,
    frequency_weight,
    integrate_locally_constant,
    p_power,
    vt_apply,
    vt_constant,
    vt_offset,
)

__all__ = [
    "Cycle",
    "DirectionAction",
    "Eigenfunction",
    "SpectralDecomposition",
    "SpectralEntry",
    "SymbolMatrix",
    "block_residual",
    "canonical_directions",
    "check_directions",
    "closed_form_spectrum",
    "direction_action",
    "directional_symbol",
    "directional_vt_apply",
    "eigenfunction",
    "frequency_level",
    "frequency_weight",
    "generator_norm",
    "hypoellipticity_margin",
    "integrate_locally_constant",
    "japanese_bracket",
    "numeric_eigenfunctions",
    "p_power",
    "spectral_decomposition",
    "spectrum_report",
    "sublaplacian_symbol",
    "symbol_blocks",
    "vt_apply",
    "vt_constant",
    "vt_offset",
]
