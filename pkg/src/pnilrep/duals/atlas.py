"""
Unitary dual atlases.

Every supported law has an atlas that decides whether a canonical dual point
is a label of its dual (``classify``) and lists the dual ball B(n)
constructively (``generate``). Both are built from the same branch tables so
that membership and enumeration cannot drift apart; ``peter_weyl_check``
guards the tables against mis-transcription.
"""

import itertools
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..errors import NotInDualError, ResourceCapError, UnsupportedLawError
from ..groups import (
    AbelianLaw,
    EngelLaw,
    G52Law,
    G53Law,
    G54Law,
    G55Law,
    G56Law,
    GroupLaw,
    HeisenbergLaw,
)
from ..models import PeterWeylReport
from ..padic import DualElem, DualPoint
from .labels import CHARACTER_BRANCH, RepLabel
from .tails import canonical_tails, tails, tails_of_level

logger = logging.getLogger(__name__)

DEFAULT_DUAL_CAP = 10 ** 7

Branch = Tuple[str, Tuple[int, ...]]
Components = Tuple[DualElem, ...]


def _canonical(m: int, *elems: DualElem) -> bool:
    return all(e.is_canonical_mod(m) for e in elems)


def _engel_branch(x1: DualElem, x2: DualElem, x3: DualElem, x4: DualElem) -> Optional[Branch]:
    """Branch of (ξ₁, ξ₂, ξ₃, ξ₄) for B₄ and the ξ₅-trivial part of G^{5,4..6}."""
    if x3.is_trivial and x4.is_trivial:
        return CHARACTER_BRANCH, ()
    if not x3.is_trivial:
        k3 = x3.level
        if k3 > x4.level and _canonical(k3, x1, x2):
            return "A1", (k3,)
        return None
    k4 = x4.level
    if _canonical(k4, x1):
        return "A1", (k4,)
    return None


def _engel_points(p: int, n: int) -> Iterator[Components]:
    for x1, x2 in itertools.product(tails(p, n), repeat=2):
        yield x1, x2, DualElem.trivial(p), DualElem.trivial(p)
    for k3 in range(1, n + 1):
        for x3 in tails_of_level(p, k3):
            for x4 in tails(p, k3 - 1):
                for x1, x2 in itertools.product(canonical_tails(p, n, k3), repeat=2):
                    yield x1, x2, x3, x4
    for k4 in range(1, n + 1):
        for x4 in tails_of_level(p, k4):
            for x1 in canonical_tails(p, n, k4):
                for x2 in tails(p, n):
                    yield x1, x2, DualElem.trivial(p), x4


class DualAtlas(ABC):
    """
    Branch tables of one group's unitary dual.

    ``classify`` returns the branch tag and the index-set exponents of a
    canonical dual point, or None when the point is not a label.
    """

    #: Machine-readable note on the reading of the published indexing sets.
    provenance: str = ""

    def __init__(self, law: GroupLaw) -> None:
        self.law = law

    @abstractmethod
    def classify(self, xi: DualPoint) -> Optional[Branch]:
        """Branch of ξ, or None."""

    @abstractmethod
    def generate(self, p: int, n: int) -> Iterator[Components]:
        """Every label of B(n), each exactly once."""


class AbelianAtlas(DualAtlas):
    """ℤ_p^d: every ξ is a character."""

    def classify(self, xi: DualPoint) -> Optional[Branch]:
        return CHARACTER_BRANCH, ()

    def generate(self, p: int, n: int) -> Iterator[Components]:
        return itertools.product(tails(p, n), repeat=self.law.dimension)


class HeisenbergAtlas(DualAtlas):
    """H_d: (ξ, η) canonical modulo |λ|, characters when λ is trivial."""

    def classify(self, xi: DualPoint) -> Optional[Branch]:
        d = self.law.degree
        lam = xi[2 * d]
        if lam.is_trivial:
            return CHARACTER_BRANCH, ()
        k = lam.level
        if _canonical(k, *xi.components[:2 * d]):
            return "A1", (k,) * d
        return None

    def generate(self, p: int, n: int) -> Iterator[Components]:
        d = self.law.degree
        for head in itertools.product(tails(p, n), repeat=2 * d):
            yield head + (DualElem.trivial(p),)
        for k in range(1, n + 1):
            for lam in tails_of_level(p, k):
                for head in itertools.product(canonical_tails(p, n, k), repeat=2 * d):
                    yield head + (lam,)


class EngelAtlas(DualAtlas):
    """B₄."""

    def classify(self, xi: DualPoint) -> Optional[Branch]:
        return _engel_branch(*xi.components)

    def generate(self, p: int, n: int) -> Iterator[Components]:
        return _engel_points(p, n)


class G52Atlas(DualAtlas):
    """G^{5,2}: characters, |ξ₄| > |ξ₅| and |ξ₄| ≤ |ξ₅| ≠ 1."""

    def classify(self, xi: DualPoint) -> Optional[Branch]:
        x1, x2, x3, x4, x5 = xi.components
        if x4.is_trivial and x5.is_trivial:
            return CHARACTER_BRANCH, ()
        if x4.level > x5.level:
            return ("A2", (x4.level,)) if _canonical(x4.level, x1, x2) else None
        return ("A3", (x5.level,)) if _canonical(x5.level, x1, x3) else None

    def generate(self, p: int, n: int) -> Iterator[Components]:
        triv = DualElem.trivial(p)
        for head in itertools.product(tails(p, n), repeat=3):
            yield head + (triv, triv)
        for k4 in range(1, n + 1):
            for x4 in tails_of_level(p, k4):
                for x5 in tails(p, k4 - 1):
                    for x1, x2 in itertools.product(canonical_tails(p, n, k4), repeat=2):
                        for x3 in tails(p, n):
                            yield x1, x2, x3, x4, x5
        for k5 in range(1, n + 1):
            for x5 in tails_of_level(p, k5):
                for x4 in tails(p, k5):
                    for x1, x3 in itertools.product(canonical_tails(p, n, k5), repeat=2):
                        for x2 in tails(p, n):
                            yield x1, x2, x3, x4, x5


class G53Atlas(DualAtlas):
    """
    G^{5,3}, following the three regimes of the dual's proof.

    ξ₅ trivial gives characters and the |ξ₄|-dimensional family; ξ₅
    nontrivial splits into ξ₄ nontrivial (then |ξ₄| > |ξ₅|, dimension
    |ξ₄||ξ₅|) and ξ₄ trivial (dimension |ξ₅|²).
    """

    provenance = (
        "regimes: xi5 trivial (chars, A1); |xi4|>|xi5|>1 (A2, index Z/|xi4| x Z/|xi5|); "
        "xi4 trivial, xi5 nontrivial (A3, index Z/|xi5| x Z/|xi5|); "
        "phase uses +xi4*u1*x2 and no extra x2*h1' term"
    )

    def classify(self, xi: DualPoint) -> Optional[Branch]:
        x1, x2, x3, x4, x5 = xi.components
        if x5.is_trivial:
            if x4.is_trivial:
                return CHARACTER_BRANCH, ()
            return ("A1", (x4.level,)) if _canonical(x4.level, x1, x2) else None
        k5 = x5.level
        if x4.is_trivial:
            return ("A3", (k5, k5)) if _canonical(k5, x1, x2, x3) else None
        if _canonical(k5, x3, x4) and _canonical(x4.level, x1, x2):
            return "A2", (x4.level, k5)
        return None

    def generate(self, p: int, n: int) -> Iterator[Components]:
        triv = DualElem.trivial(p)
        for head in itertools.product(tails(p, n), repeat=3):
            yield head + (triv, triv)
        for k4 in range(1, n + 1):
            for x4 in tails_of_level(p, k4):
                for x1, x2 in itertools.product(canonical_tails(p, n, k4), repeat=2):
                    for x3 in tails(p, n):
                        yield x1, x2, x3, x4, triv
        for k5 in range(1, n + 1):
            reps = canonical_tails(p, n, k5)
            for x5 in tails_of_level(p, k5):
                for x4 in reps:
                    if x4.is_trivial:
                        for x1, x2, x3 in itertools.product(reps, repeat=3):
                            yield x1, x2, x3, x4, x5
                        continue
                    for x1, x2 in itertools.product(canonical_tails(p, n, x4.level), repeat=2):
                        for x3 in reps:
                            yield x1, x2, x3, x4, x5


class G54Atlas(DualAtlas):
    """
    G^{5,4}.

    With ξ₅ trivial the sets are those of B₄. Otherwise the larger of
    |ξ₄|, |ξ₅| decides the realization (ties go to ξ₄); ξ₃ either vanishes
    or strictly dominates both, in which case (ξ₁, ξ₂) are reduced modulo |ξ₃|.
    """

    provenance = (
        "xi5 trivial: B4 sets; xi5-dominant |xi5|>|xi4|: A2 (xi3 trivial, xi2 mod |xi5|, xi1 free); "
        "xi4-dominant |xi4|>=|xi5|>1: A3 (xi3 trivial, xi1 mod |xi4|, xi2 free); "
        "|xi3|>max(|xi4|,|xi5|): A4 ((xi1,xi2) mod |xi3|); "
        "A2/A3 indices dilated so q(x) = p^k(xi4 x1 + xi5 x2), phases from the tilted polarization"
    )

    def classify(self, xi: DualPoint) -> Optional[Branch]:
        x1, x2, x3, x4, x5 = xi.components
        if x5.is_trivial:
            return _engel_branch(x1, x2, x3, x4)
        k3, k4, k5 = x3.level, x4.level, x5.level
        top = max(k4, k5)
        if k3 > top:
            return ("A4", (k3,)) if _canonical(k3, x1, x2) else None
        if not x3.is_trivial:
            return None
        if k5 > k4:
            return ("A2", (k5,)) if _canonical(k5, x2) else None
        return ("A3", (k4,)) if _canonical(k4, x1) else None

    def generate(self, p: int, n: int) -> Iterator[Components]:
        triv = DualElem.trivial(p)
        for head in _engel_points(p, n):
            yield head + (triv,)
        for k5 in range(1, n + 1):
            for x5 in tails_of_level(p, k5):
                for k4 in range(0, n + 1):
                    top = max(k4, k5)
                    for x4 in tails_of_level(p, k4):
                        if k5 > k4:
                            for x2 in canonical_tails(p, n, k5):
                                for x1 in tails(p, n):
                                    yield x1, x2, triv, x4, x5
                        else:
                            for x1 in canonical_tails(p, n, k4):
                                for x2 in tails(p, n):
                                    yield x1, x2, triv, x4, x5
                        for k3 in range(top + 1, n + 1):
                            for x3 in tails_of_level(p, k3):
                                for x1, x2 in itertools.product(canonical_tails(p, n, k3), repeat=2):
                                    yield x1, x2, x3, x4, x5


class G55Atlas(DualAtlas):
    """
    G^{5,5}.

    For ξ₅ nontrivial the labels form a cross-section of the coadjoint
    orbits: ξ₄ mod |ξ₅|, then ξ₃ mod |ξ₄|/|ξ₅|, ξ₂ mod |ξ₃|/p^m and ξ₁ mod
    ‖(ξ₃, ξ₄, ξ₅)‖ with p^m = max(|ξ₄|, |ξ₅|).
    """

    provenance = (
        "xi5 trivial: B4 sets; xi5 nontrivial: orbit cross-section "
        "xi4 mod |xi5|, xi3 mod |xi4|/|xi5| (free if xi4 trivial), xi2 mod |xi3|/max(|xi4|,|xi5|), "
        "xi1 mod ||(xi3,xi4,xi5)||"
    )

    def classify(self, xi: DualPoint) -> Optional[Branch]:
        x1, x2, x3, x4, x5 = xi.components
        if x5.is_trivial:
            return _engel_branch(x1, x2, x3, x4)
        k5 = x5.level
        if not x4.is_canonical_mod(k5):
            return None
        if x4.is_trivial:
            m = k5
        else:
            m = x4.level
            if not x3.is_canonical_mod(m - k5):
                return None
        k3 = x3.level
        if k3 > m and not x2.is_canonical_mod(k3 - m):
            return None
        k = max(k3, m)
        return ("A2", (k,)) if _canonical(k, x1) else None

    def generate(self, p: int, n: int) -> Iterator[Components]:
        triv = DualElem.trivial(p)
        for head in _engel_points(p, n):
            yield head + (triv,)
        for k5 in range(1, n + 1):
            for x5 in tails_of_level(p, k5):
                for x4 in canonical_tails(p, n, k5):
                    if x4.is_trivial:
                        m, thirds = k5, tails(p, n)
                    else:
                        m, thirds = x4.level, canonical_tails(p, n, x4.level - k5)
                    for x3 in thirds:
                        k3 = x3.level
                        seconds = canonical_tails(p, n, k3 - m) if k3 > m else tails(p, n)
                        for x2 in seconds:
                            for x1 in canonical_tails(p, n, max(k3, m)):
                                yield x1, x2, x3, x4, x5


class G56Atlas(DualAtlas):
    """G^{5,6}: B₄ sets for ξ₅ trivial, one |ξ₅|-graded family otherwise."""

    provenance = "x5 correction 1/6x1^3y2+1/2x1^2y3+x1y4+1/2x1y2^2+x2y3+x1x2y2"

    def classify(self, xi: DualPoint) -> Optional[Branch]:
        x1, x2, x3, x4, x5 = xi.components
        if x5.is_trivial:
            return _engel_branch(x1, x2, x3, x4)
        k5 = x5.level
        k = max(x3.level, x4.level, k5)
        if _canonical(k5, x3, x4) and _canonical(k, x1, x2):
            return "A2", (k, k5)
        return None

    def generate(self, p: int, n: int) -> Iterator[Components]:
        triv = DualElem.trivial(p)
        for head in _engel_points(p, n):
            yield head + (triv,)
        for k5 in range(1, n + 1):
            reps = canonical_tails(p, n, k5)
            for x5 in tails_of_level(p, k5):
                for x3, x4 in itertools.product(reps, repeat=2):
                    k = max(x3.level, x4.level, k5)
                    for x1, x2 in itertools.product(canonical_tails(p, n, k), repeat=2):
                        yield x1, x2, x3, x4, x5


_ATLAS_TYPES = [
    (AbelianLaw, AbelianAtlas),
    (HeisenbergLaw, HeisenbergAtlas),
    (EngelLaw, EngelAtlas),
    (G52Law, G52Atlas),
    (G53Law, G53Atlas),
    (G54Law, G54Atlas),
    (G55Law, G55Atlas),
    (G56Law, G56Atlas),
]


def atlas_for(law: GroupLaw) -> DualAtlas:
    """
    Return the dual atlas of a law.

    Raises:
        UnsupportedLawError: If the law has no atlas
    """
    for law_type, atlas_type in _ATLAS_TYPES:
        if isinstance(law, law_type):
            return atlas_type(law)
    raise UnsupportedLawError(f"No dual atlas for {law}")


@dataclass(frozen=True)
class Membership:
    """Result of a membership test."""
    member: bool
    branch: Optional[str] = None

    def __bool__(self) -> bool:
        return self.member


def _check_shape(law: GroupLaw, xi: DualPoint) -> None:
    if xi.dimension != law.dimension:
        raise ValueError(f"{law.name} labels need {law.dimension} components, got {xi.dimension}")


def membership(law: GroupLaw, xi: DualPoint) -> Membership:
    """
    Decide whether ξ is a label of the law's unitary dual.

    Args:
        law: Group law
        xi: Canonical dual point with d components

    Returns:
        Membership with the branch tag when ξ is a label
    """
    _check_shape(law, xi)
    branch = atlas_for(law).classify(xi)
    if branch is None:
        return Membership(False)
    return Membership(True, branch[0])


def label_for(law: GroupLaw, xi: DualPoint) -> RepLabel:
    """
    Build the RepLabel of ξ.

    Raises:
        NotInDualError: If ξ is not a label of the dual
    """
    _check_shape(law, xi)
    branch = atlas_for(law).classify(xi)
    if branch is None:
        raise NotInDualError(f"({xi}) is not a canonical label of the {law.name} dual")
    return RepLabel(law, xi, branch[0], branch[1])


def rep_dimension(law: GroupLaw, xi: DualPoint) -> int:
    """d_ξ of a label; raises NotInDualError for non-members."""
    return label_for(law, xi).dim


def enumerate_dual_ball(law: GroupLaw, prime: int, n: int, cap: int = DEFAULT_DUAL_CAP) -> List[RepLabel]:
    """
    List B(n) = {ξ in the dual : ‖ξ‖_p ≤ p^n}.

    Labels are sorted by their dual point, trivial components first.

    Args:
        law: Group law
        prime: The prime p
        n: Ball radius exponent
        cap: Maximum Σ d_ξ² (which equals p^{dn})

    Returns:
        The labels of B(n)

    Raises:
        ResourceCapError: If p^{dn} exceeds the cap
    """
    if n < 0:
        raise ValueError(f"Ball level must be non-negative, got {n}")
    law.check_prime(prime)
    total = prime ** (law.dimension * n)
    if total > cap:
        raise ResourceCapError(f"B({n}) of {law.name} at p={prime} has Σd² = {total}, cap is {cap}")
    atlas = atlas_for(law)
    labels = []
    for components in atlas.generate(prime, n):
        xi = DualPoint(tuple(components))
        branch = atlas.classify(xi)
        if branch is None:
            raise NotInDualError(f"Generated point ({xi}) fails the {law.name} membership test")
        labels.append(RepLabel(law, xi, branch[0], branch[1]))
    labels.sort(key=lambda lab: lab.xi.key)
    logger.debug(f"Enumerated {len(labels)} labels of {law.name} at p={prime}, n={n}")
    return labels


def branch_counts(labels: Sequence[RepLabel]) -> Dict[str, int]:
    counts: Dict[str, int] = {}
    for label in labels:
        counts[label.branch] = counts.get(label.branch, 0) + 1
    return dict(sorted(counts.items()))


def peter_weyl_check(law: GroupLaw, prime: int, n: int, cap: int = DEFAULT_DUAL_CAP) -> PeterWeylReport:
    """
    Compare Σ_{ξ ∈ B(n)} d_ξ² with |G/G(p^n ℤ_p)| = p^{dn} exactly.
    """
    labels = enumerate_dual_ball(law, prime, n, cap)
    total = sum(label.dim ** 2 for label in labels)
    expected = prime ** (law.dimension * n)
    if total != expected:
        logger.debug(f"Peter-Weyl mismatch for {law.name}: {total} != {expected}")
    return PeterWeylReport(
        law=law.name,
        prime=prime,
        level=n,
        label_count=len(labels),
        sum_d_squared=total,
        expected=expected,
        branch_counts=branch_counts(labels),
    )


def provenance_notes(law: GroupLaw) -> Dict[str, str]:
    """Reading of the published indexing sets active for a law."""
    note = atlas_for(law).provenance
    return {law.name: note} if note else {}
