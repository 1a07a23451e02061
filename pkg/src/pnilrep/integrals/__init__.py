"""
Oscillatory integrals over p-adic disks.
"""

from .gaussian import (
    DEFAULT_ORACLE_CAP,
    disk_integral,
    gaussian_disk_integral,
    gaussian_lambda,
    gaussian_modulus,
    p_norm,
    riemann_oscillatory_oracle,
)
from .lemmas import AUX_LEMMAS, aux_lemma_ids, lemma_regime_ok, verify_aux_lemma
from .polynomial import PhasePolynomial, as_fraction, coefficient_level, numerator_at

__all__ = [
    "AUX_LEMMAS",
    "DEFAULT_ORACLE_CAP",
    "PhasePolynomial",
    "as_fraction",
    "aux_lemma_ids",
    "coefficient_level",
    "disk_integral",
    "gaussian_disk_integral",
    "gaussian_lambda",
    "gaussian_modulus",
    "lemma_regime_ok",
    "numerator_at",
    "p_norm",
    "riemann_oscillatory_oracle",
    "verify_aux_lemma",
]
