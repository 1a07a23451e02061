"""
Report models for pnilrep.

This module exports the enumerations and report classes returned by the
library operations and rendered by the output formatters.
"""

from enum import Enum


class OutputFormat(Enum):
    """Enumeration of supported output formats."""
    CONSOLE = "console"
    JSON = "json"
    CSV = "csv"


class Suite(Enum):
    """Verification suites of ``pnilrep verify``."""
    REPS = "reps"
    CHARACTERS = "characters"
    GAUSSIANS = "gaussians"
    PLANCHEREL = "plancherel"
    SPECTRUM = "spectrum"
    HYPOELLIPTIC = "hypoelliptic"
    ALL = "all"

    @classmethod
    def concrete(cls) -> list:
        """Every suite except ALL, in run order."""
        return [s for s in cls if s is not cls.ALL]


class SpectralRegime(Enum):
    """How a label's closed-form spectrum is compared with the symbol."""
    TRIVIAL = "trivial"
    CLOSED = "closed"
    SCHRODINGER = "schrodinger"
    NUMERIC = "numeric"


# Import model classes for re-export
from .reports import (
    DualReport,
    GaussianReport,
    HypoellipticReport,
    LabelRow,
    LemmaReport,
    PeterWeylReport,
    PlancherelReport,
    PropertyResult,
    RepReport,
    SpectrumReport,
    SpectrumRow,
    SpectrumTable,
    SuiteReport,
)

__all__ = [
    "OutputFormat",
    "Suite",
    "SpectralRegime",
    "DualReport",
    "GaussianReport",
    "HypoellipticReport",
    "LabelRow",
    "LemmaReport",
    "PeterWeylReport",
    "PlancherelReport",
    "PropertyResult",
    "RepReport",
    "SpectrumReport",
    "SpectrumRow",
    "SpectrumTable",
    "SuiteReport",
]
