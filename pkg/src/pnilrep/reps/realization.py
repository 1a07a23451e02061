"""
Monomial realizations of the irreducible representations.

Every label is realized by inducing a character χ of a normal subgroup H
from a coordinate section w(u) of G/H, then twisting by the character
ξ_first·x_first of G:

    μ(u, x) = w(u) ⋆ x ⋆ w(u + q(x))⁻¹ ∈ H
    Φ(u, x) = Σ_{i in first stratum} ξ_i x_i + Σ_{i not in first stratum} ξ_i μ_i + R(μ)
    π(x)[h][h′] = e^{2πi Φ(−h, x)} · 1[h ≡ h′ + q(x) mod p^{e}]

The index h stands for the section parameter u = −h, so that x in the first
generator direction moves h to h′ + x₁. All arithmetic is on residues modulo
p^L with L the level of the label.

G^{5,4} labels with ξ₅ nontrivial and ξ₃ not dominating are indexed in
dilated coordinates: h = w·u with w the unit p^{e}ξ_dom, so that
q(x) = (ξ₄x₁ + ξ₅x₂)/p^{−e} exactly. The phase is still computed on the
tilted polarization, since the polynomial phase of the dilated model is not
constant on the cosets of p^{e}ℤ_p.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence, Tuple

from ..duals import CHARACTER_BRANCH, RepLabel
from ..groups import AbelianLaw, G53Law, G54Law, G56Law, HeisenbergLaw, unit_inverse
from ..groups.laws import Residues
from ..padic import DualElem

_TILT_NONE = "none"
_TILT_XI4 = "xi4"
_TILT_XI5 = "xi5"


@dataclass(frozen=True)
class Realization:
    """
    Data of the monomial model of one label.

    Attributes:
        label: The label
        sections: Coordinates carrying the index variables u
        tilt: Which tilted G^{5,4} polarization is used, if any
        slope: The tilt slope c (ξ₅/ξ₄ or ξ₄/ξ₅) as a residue mod p^L
        dilation: The unit w relating dilated and tilted indices, 1 if undilated
    """
    label: RepLabel
    sections: Tuple[int, ...]
    tilt: str = _TILT_NONE
    slope: int = 0
    dilation: int = 1

    @property
    def prime(self) -> int:
        return self.label.prime

    @property
    def level(self) -> int:
        return self.label.level

    @cached_property
    def modulus(self) -> int:
        return self.prime ** self.level

    @property
    def box(self) -> Tuple[int, ...]:
        return self.label.index_set

    @property
    def is_dilated(self) -> bool:
        return self.dilation != 1

    def shift(self, x: Residues) -> Tuple[int, ...]:
        """q(x): how π(x) moves the index variables."""
        if self.is_dilated:
            e = self.box[0]
            xi4, xi5 = self.label.xi[3], self.label.xi[4]
            return ((xi4.numer_at(e) * x[0] + xi5.numer_at(e) * x[1]) % self.prime ** e,)
        return self.polarized_shift(x)

    def polarized_shift(self, x: Residues) -> Tuple[int, ...]:
        """The shift of the section parameters before any dilation."""
        m = self.modulus
        if self.tilt == _TILT_XI4:
            return ((x[0] + self.slope * x[1]) % m,)
        if self.tilt == _TILT_XI5:
            return ((x[1] + self.slope * x[0]) % m,)
        return tuple(x[s] % m for s in self.sections)

    def section(self, u: Sequence[int]) -> Residues:
        """w(u) as a residue tuple."""
        coords = [0] * self.label.law.dimension
        for pos, value in zip(self.sections, u):
            coords[pos] = value % self.modulus
        return tuple(coords)

    def subgroup_element(self, u: Sequence[int], x: Residues) -> Residues:
        """μ(u, x) = w(u) ⋆ x ⋆ w(u + q(x))⁻¹."""
        law, m = self.label.law, self.modulus
        q = self.polarized_shift(x)
        target = [ui + qi for ui, qi in zip(u, q)]
        left = law.star_residues(self.section(u), x, m)
        return law.star_residues(left, law.inverse_residues(self.section(target), m), m)

    def phase_numerator(self, u: Sequence[int], x: Residues) -> int:
        """Φ(u, x) as an integer over p^L."""
        if self.level == 0:
            return 0
        law, xi, m, level = self.label.law, self.label.xi, self.modulus, self.level
        first = set(law.first_stratum)
        total = sum(xi[i].numer_at(level) * x[i] for i in first)
        if self.label.branch == CHARACTER_BRANCH:
            return total % m
        mu = self.subgroup_element(self.undilate(u), x)
        total += sum(xi[i].numer_at(level) * mu[i] for i in range(law.dimension) if i not in first)
        total += self._correction(mu)
        return total % m

    def undilate(self, u: Sequence[int]) -> Tuple[int, ...]:
        """Section parameters of a dilated index."""
        if not self.is_dilated:
            return tuple(u)
        size = self.prime ** self.box[0]
        inverse = pow(self.dilation, -1, size)
        return tuple(v * inverse % size for v in u)

    def _correction(self, mu: Residues) -> int:
        if self.tilt == _TILT_NONE:
            return 0
        xi, level, m, c = self.label.xi, self.level, self.modulus, self.slope
        half, sixth = unit_inverse(2, m), unit_inverse(6, m)
        x3, x4, x5 = (xi[i].numer_at(level) for i in (2, 3, 4))
        if self.tilt == _TILT_XI4:
            t = mu[1]
            return x3 * c * t * t * half + x4 * c * c * t ** 3 * sixth
        t = mu[0]
        return x3 * c * t * t * half - x5 * c * c * t ** 3 * sixth


def tilt_slope(numer: DualElem, denom: DualElem, modulus: int) -> int:
    """numer/denom ∈ ℤ_p as a residue, for |numer|_p ≤ |denom|_p."""
    p = denom.prime
    scale = p ** (denom.level - numer.level)
    return numer.numer * scale * pow(denom.numer, -1, modulus) % modulus


def realization_for(label: RepLabel) -> Realization:
    """
    Choose the realization of a label.

    Characters need no index variable; H_d induces from the (y, z) subgroup;
    G^{5,3} and G^{5,6} with ξ₅ nontrivial use the two sections x₁, x₂; the
    ξ₅-nontrivial labels of G^{5,4} use the tilted polarization spanned by
    X₂ − (ξ₅/ξ₄)X₁ or X₁ − (ξ₄/ξ₅)X₂, dilated unless ξ₃ dominates; every
    other label induces from {x₁ = 0}.
    """
    law, xi = label.law, label.xi
    if label.branch == CHARACTER_BRANCH or isinstance(law, AbelianLaw):
        return Realization(label, ())
    if isinstance(law, HeisenbergLaw):
        return Realization(label, tuple(range(law.degree)))
    if isinstance(law, (G53Law, G56Law)) and not xi[4].is_trivial:
        return Realization(label, (0, 1))
    if isinstance(law, G54Law) and not xi[4].is_trivial:
        m = label.prime ** label.level
        if xi[4].level > xi[3].level:
            sections, tilt, dominant, slope = (1,), _TILT_XI5, xi[4], tilt_slope(xi[3], xi[4], m)
        else:
            sections, tilt, dominant, slope = (0,), _TILT_XI4, xi[3], tilt_slope(xi[4], xi[3], m)
        dilation = dominant.numer if dominant.level == label.index_set[0] else 1
        return Realization(label, sections, tilt, slope, dilation)
    return Realization(label, (0,))


def realization_summary(real: Realization) -> Optional[str]:
    """Short description for reports."""
    if not real.sections:
        return None
    names = ",".join(f"x{s + 1}" for s in real.sections)
    if real.tilt == _TILT_NONE:
        return f"section {names}"
    text = f"section {names}, tilt {real.tilt} slope {real.slope}"
    if real.is_dilated:
        text += f", dilated by {real.dilation}"
    return text
