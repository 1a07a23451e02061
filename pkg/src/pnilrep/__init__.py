"""
pnilrep

Exact representation theory of compact p-adic nilpotent groups: unitary
duals, matrix coefficients, characters, the group Fourier transform and the
spectra of Vladimirov–Taibleson sub-Laplacians, with a CLI that checks every
counting identity and closed form at desk scale.
"""

__version__ = "0.1.0"
__author__ = "maxisam"

from .config import RunConfig
from .duals import RepLabel, enumerate_dual_ball, label_for, peter_weyl_check
from .groups import GroupElement, GroupLaw, available_laws, law_for
from .models import OutputFormat, SpectralRegime, Suite
from .padic import DualElem, DualPoint, PadicInt

__all__ = [
    "__version__",
    "DualElem",
    "DualPoint",
    "GroupElement",
    "GroupLaw",
    "OutputFormat",
    "PadicInt",
    "RepLabel",
    "RunConfig",
    "SpectralRegime",
    "Suite",
    "available_laws",
    "enumerate_dual_ball",
    "label_for",
    "law_for",
    "peter_weyl_check",
]
