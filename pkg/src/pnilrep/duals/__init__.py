"""
Unitary duals: labels, membership and the Peter–Weyl dual balls.
"""

from .atlas import (
    DEFAULT_DUAL_CAP,
    DualAtlas,
    Membership,
    atlas_for,
    branch_counts,
    enumerate_dual_ball,
    label_for,
    membership,
    peter_weyl_check,
    provenance_notes,
    rep_dimension,
)
from .labels import CHARACTER_BRANCH, Index, RepLabel
from .tails import canonical_tails, tails, tails_of_level

__all__ = [
    "CHARACTER_BRANCH",
    "DEFAULT_DUAL_CAP",
    "DualAtlas",
    "Index",
    "Membership",
    "RepLabel",
    "atlas_for",
    "branch_counts",
    "canonical_tails",
    "enumerate_dual_ball",
    "label_for",
    "membership",
    "peter_weyl_check",
    "provenance_notes",
    "rep_dimension",
    "tails",
    "tails_of_level",
]
