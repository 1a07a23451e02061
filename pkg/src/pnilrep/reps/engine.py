"""
Representation matrices and matrix coefficients.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Sequence, Tuple

import numpy as np

from ..duals import Index, RepLabel
from ..errors import InsufficientPrecisionError, ResourceCapError
from ..groups import GroupElement, quotient_positions, quotient_residues
from ..groups.laws import Residues
from ..padic import PhaseRational, phase_to_complex
from .realization import Realization, realization_for

logger = logging.getLogger(__name__)

DEFAULT_TABLE_CAP = 4 * 10 ** 6


@lru_cache(maxsize=4096)
def cached_realization(label: RepLabel) -> Realization:
    return realization_for(label)


@dataclass(frozen=True)
class MonomialMatrix:
    """
    π(x) as a generalized permutation matrix.

    Row r has its single nonzero entry e^{2πi phases[r]} in column columns[r].
    """
    label: RepLabel
    columns: Tuple[int, ...]
    phases: Tuple[PhaseRational, ...]

    def to_array(self) -> np.ndarray:
        d = len(self.columns)
        out = np.zeros((d, d), dtype=np.complex128)
        for row, (col, phase) in enumerate(zip(self.columns, self.phases)):
            out[row, col] = phase.to_complex()
        return out

    def cycles(self) -> List[List[int]]:
        """Cycles of the row → column permutation, each listed from its smallest row."""
        seen = [False] * len(self.columns)
        out = []
        for start in range(len(self.columns)):
            if seen[start]:
                continue
            cycle, row = [], start
            while not seen[row]:
                seen[row] = True
                cycle.append(row)
                row = self.columns[row]
            out.append(cycle)
        return out


@dataclass(frozen=True)
class RepMatrix:
    """
    π_ξ(x) with rows and columns in the canonical order of I_ξ.

    Attributes:
        label: The label
        entries: Complex d_ξ × d_ξ array
    """
    label: RepLabel
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def unitarity_residual(self) -> float:
        """‖π π* − I‖_F."""
        eye = np.eye(self.dim, dtype=np.complex128)
        return float(np.linalg.norm(self.entries @ self.entries.conj().T - eye))

    def trace(self) -> complex:
        return complex(np.trace(self.entries))


def element_residues(label: RepLabel, x: GroupElement) -> Residues:
    """Residues of x modulo p^L after checking law, prime and precision."""
    if x.law != label.law:
        raise ValueError(f"Element of {x.law} passed to a label of {label.law}")
    if x.prime != label.prime:
        raise ValueError(f"Element over {x.prime} passed to a label over {label.prime}")
    if x.precision < label.level:
        raise InsufficientPrecisionError(
            f"{label} has level {label.level}, element carries {x.precision} digits"
        )
    modulus = label.prime ** label.level
    return tuple(r % modulus for r in x.residues)


def _negated(h: Index, label: RepLabel) -> Tuple[int, ...]:
    p = label.prime
    return tuple(-v % p ** e for v, e in zip(h, label.index_set))


def _shift_index(h: Index, q: Sequence[int], label: RepLabel) -> Index:
    p = label.prime
    return tuple((v - s) % p ** e for v, s, e in zip(h, q, label.index_set))


def monomial_residues(label: RepLabel, x: Residues) -> MonomialMatrix:
    """π(x) for a residue tuple already reduced modulo p^L."""
    real = cached_realization(label)
    q = real.shift(x)
    columns, phases = [], []
    for h in label.iter_indices():
        numer = real.phase_numerator(_negated(h, label), x)
        columns.append(label.index_position(_shift_index(h, q, label)))
        phases.append(PhaseRational.of(label.prime, numer, label.level))
    return MonomialMatrix(label, tuple(columns), tuple(phases))


@dataclass(frozen=True, eq=False)
class MonomialTable:
    """
    π_ξ(x) for every coset x of G/G(p^L ℤ_p), L = level(ξ).

    Row i of both arrays belongs to the i-th coset in quotient enumeration
    order.

    Attributes:
        label: The label
        columns: Integer array (p^{dL}, d_ξ) of column positions
        phases: Complex array (p^{dL}, d_ξ) of the nonzero entries
    """
    label: RepLabel
    columns: np.ndarray
    phases: np.ndarray

    def positions(self, r: int) -> np.ndarray:
        """Table rows of the cosets of G/G(p^r ℤ_p), r ≥ L, in enumeration order."""
        return quotient_positions(self.label.law, self.label.prime, r, self.label.level)

    def coefficient(self, row: int, col: int) -> np.ndarray:
        """(π_ξ)_{row,col} over the level-L quotient."""
        return np.where(self.columns[:, row] == col, self.phases[:, row], 0j)


@lru_cache(maxsize=256)
def monomial_table(label: RepLabel, cap: int = DEFAULT_TABLE_CAP) -> MonomialTable:
    """
    Tabulate the monomial matrices of a label once.

    Raises:
        ResourceCapError: If p^{dL}·d_ξ entries exceed the cap
    """
    size = label.prime ** (label.law.dimension * label.level)
    if size * label.dim > cap:
        raise ResourceCapError(f"Monomial table of {label} has {size * label.dim} entries, cap is {cap}")
    logger.debug(f"Tabulating {size} monomial matrices of {label}")
    columns = np.empty((size, label.dim), dtype=np.int64)
    phases = np.empty((size, label.dim), dtype=np.complex128)
    for i, x in enumerate(quotient_residues(label.law, label.prime, label.level)):
        mono = monomial_residues(label, x)
        columns[i] = mono.columns
        phases[i] = [phase.to_complex() for phase in mono.phases]
    return MonomialTable(label, columns, phases)


def monomial_generator(label: RepLabel, x: GroupElement) -> MonomialMatrix:
    """
    The permutation and exact phases of π_ξ(x).

    Raises:
        InsufficientPrecisionError: If x carries fewer than level(ξ) digits
    """
    return monomial_residues(label, element_residues(label, x))


def rep_matrix_residues(label: RepLabel, x: Residues) -> np.ndarray:
    return monomial_residues(label, x).to_array()


def rep_matrix(label: RepLabel, x: GroupElement) -> RepMatrix:
    """
    Assemble π_ξ(x).

    Raises:
        InsufficientPrecisionError: If x carries fewer than level(ξ) digits
    """
    return RepMatrix(label, monomial_generator(label, x).to_array())


def matrix_coefficient(label: RepLabel, h: Index, h_prime: Index, x: GroupElement) -> complex:
    """
    (π_ξ)_{hh′}(x) = e^{2πi Φ(−h, x)}·1[h ≡ h′ + q(x)].

    Raises:
        IndexOutOfRangeError: If h or h′ is outside I_ξ
        InsufficientPrecisionError: If x carries fewer than level(ξ) digits
    """
    h, h_prime = label.check_index(h), label.check_index(h_prime)
    xr = element_residues(label, x)
    real = cached_realization(label)
    if _shift_index(h, real.shift(xr), label) != h_prime:
        return 0j
    return phase_to_complex(real.phase_numerator(_negated(h, label), xr), label.prime ** label.level)


def matrix_coefficient_function(label: RepLabel, h: Index, h_prime: Index) -> Callable[[GroupElement], complex]:
    """x ↦ (π_ξ)_{hh′}(x)."""
    h, h_prime = label.check_index(h), label.check_index(h_prime)

    def coefficient(x: GroupElement) -> complex:
        return matrix_coefficient(label, h, h_prime, x)

    return coefficient


def character_trace_residues(label: RepLabel, x: Residues) -> complex:
    """Tr π_ξ(x), summing only the diagonal of the monomial matrix."""
    real = cached_realization(label)
    q = real.shift(x)
    if any(s % label.prime ** e for s, e in zip(q, label.index_set)):
        return 0j
    modulus = label.prime ** label.level
    return sum(
        (phase_to_complex(real.phase_numerator(_negated(h, label), x), modulus) for h in label.iter_indices()),
        0j,
    )


def character_trace(label: RepLabel, x: GroupElement) -> complex:
    """Tr π_ξ(x) from the realization."""
    return character_trace_residues(label, element_residues(label, x))
