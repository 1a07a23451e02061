"""
Symbols and spectra of directional VT operators and the Vladimirov sub-Laplacian.

On the representation space of a label every directional operator ∂^α_w
acts through the unitary π(γ_w(1)), a generalized permutation matrix U. A
cycle of U of length ℓ whose phases multiply to e^{2πiθ} carries the
frequencies ω = (θ + j)/ℓ, and ∂^α_w acts on the matching eigenvector by
|ω|_p^α − (1 − p^{−1})/(1 − p^{−(α+1)}) (0 when |ω|_p ≤ 1).

The closed-form spectrum is exact when at most one direction moves the
basis and the diagonal ones are constant on its cycles. Otherwise
the label is in the Schrödinger regime: each basis vector gets the sum of
its per-direction frequencies, the multiset keeps the right trace, and
agreement is judged on traces.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..duals import Index, RepLabel
from ..errors import NonGeneratorDirectionError, UnsupportedLawError
from ..groups import G56Law, GroupElement, GroupLaw
from ..models import SpectralRegime
from ..models.reports import TOLERANCE, SpectrumReport, SpectrumRow
from ..padic import DualElem, int_valuation
from ..reps import MonomialMatrix, TestFunction, monomial_residues, monomial_table
from .vt import check_alpha, frequency_weight, p_power, vt_constant

logger = logging.getLogger(__name__)

Direction = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class SymbolMatrix:
    """
    σ(ξ) of an invariant operator at one label.

    Attributes:
        label: The label
        entries: Complex d_ξ × d_ξ array
    """
    label: RepLabel
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def hermitian_residual(self) -> float:
        return float(np.linalg.norm(self.entries - self.entries.conj().T))

    def eigenvalues(self) -> List[float]:
        """Sorted eigenvalues of the Hermitian part."""
        hermitian = (self.entries + self.entries.conj().T) / 2
        return sorted(float(v) for v in np.linalg.eigvalsh(hermitian))

    def eigenvectors(self) -> Tuple[np.ndarray, np.ndarray]:
        hermitian = (self.entries + self.entries.conj().T) / 2
        return np.linalg.eigh(hermitian)

    def inf_norm(self) -> float:
        """‖σ‖_inf = min |eigenvalue|."""
        return min(abs(v) for v in self.eigenvalues())


def canonical_directions(law: GroupLaw) -> List[Direction]:
    """The unit vectors e_1, …, e_κ of the generating stratum."""
    k = law.generator_count
    return [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]


def _rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    matrix = [[c % p for c in row] for row in rows]
    rank, cols = 0, len(matrix[0]) if matrix else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = pow(matrix[rank][col], -1, p)
        for r in range(len(matrix)):
            if r != rank and matrix[r][col]:
                factor = matrix[r][col] * inv % p
                matrix[r] = [(a - factor * b) % p for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank


def check_directions(law: GroupLaw, prime: int, directions: Optional[Sequence[Sequence[int]]]) -> List[Direction]:
    """
    Validate a direction collection for the sub-Laplacian.

    Raises:
        NonGeneratorDirectionError: If a direction leaves the generating
            stratum or the collection does not span it modulo p
    """
    if directions is None:
        return canonical_directions(law)
    out = []
    for w in directions:
        full = law.direction_residues(w, prime)
        out.append(tuple(full[i] for i in law.first_stratum))
    if _rank_mod_p(out, prime) < law.generator_count:
        raise NonGeneratorDirectionError(f"Directions {out} do not span the generating stratum of {law.name}")
    return out


def _label_step(label: RepLabel, w: Direction, t: int) -> Tuple[int, ...]:
    return label.law.one_param_residues(w, t, label.prime ** label.level)


def directional_symbol(label: RepLabel, w: Direction, alpha: float) -> np.ndarray:
    """σ of ∂^α_w at a label: C_{α,1} p^{−L} Σ_{t ≠ 0} |t|_p^{−(α+1)} (π(γ_w(−t)) − I)."""
    d, p, level = label.dim, label.prime, label.level
    out = np.zeros((d, d), dtype=np.complex128)
    if level == 0:
        return out
    modulus = p ** level
    weights = [p_power(p, k * (alpha + 1)) for k in range(level)]
    for t in range(1, modulus):
        weight = weights[int_valuation(t, p)]
        mono = monomial_residues(label, _label_step(label, w, -t))
        for row, (col, phase) in enumerate(zip(mono.columns, mono.phases)):
            out[row, col] += weight * phase.to_complex()
            out[row, row] -= weight
    return vt_constant(p, alpha, 1) * out / modulus


def sublaplacian_symbol(
    law: GroupLaw,
    directions: Optional[Sequence[Sequence[int]]],
    alpha: float,
    label: RepLabel,
) -> SymbolMatrix:
    """
    σ(ξ) of L = Σ_k ∂^α_{w_k}.

    The trivial label gives the 1×1 zero matrix.

    Raises:
        NonGeneratorDirectionError: If the directions do not span the generating stratum
    """
    alpha = check_alpha(alpha)
    if label.law != law:
        raise ValueError(f"Label {label} does not belong to {law.name}")
    dirs = check_directions(law, label.prime, directions)
    total = sum((directional_symbol(label, w, alpha) for w in dirs), np.zeros((label.dim, label.dim), dtype=np.complex128))
    return SymbolMatrix(label, total)


@dataclass(frozen=True)
class Cycle:
    """A cycle of U with its phase product e^{2πiθ}."""
    rows: Tuple[int, ...]
    theta: DualElem

    @property
    def length(self) -> int:
        return len(self.rows)

    def frequency(self, j: int) -> DualElem:
        """(θ + j)/ℓ as a dual element."""
        p = self.theta.prime
        extra = int_valuation(self.length, p) or 0
        k = self.theta.level
        return DualElem.of(p, self.theta.numer + j * p ** k, k + extra)


@dataclass
class DirectionAction:
    """
    How π(γ_w(1)) acts on the representation space of a label.

    Attributes:
        direction: The direction w
        generator: π(γ_w(1)) as a monomial matrix
        cycles: Its cycles
    """
    direction: Direction
    generator: MonomialMatrix
    cycles: List[Cycle] = field(default_factory=list)

    @property
    def is_diagonal(self) -> bool:
        return all(c.length == 1 for c in self.cycles)

    def cycle_of(self, row: int) -> Tuple[Cycle, int]:
        for cycle in self.cycles:
            if row in cycle.rows:
                return cycle, cycle.rows.index(row)
        raise IndexError(row)

    def frequency_at(self, row: int) -> DualElem:
        """Frequency paired with a basis vector: its position j in its cycle."""
        cycle, j = self.cycle_of(row)
        return cycle.frequency(j)

    def constant_on_cycles_of(self, other: "DirectionAction") -> bool:
        """Whether this diagonal action commutes with the other one."""
        phases = {c.rows[0]: c.theta for c in self.cycles}
        return all(len({phases[r] for r in c.rows}) == 1 for c in other.cycles)


def direction_action(label: RepLabel, w: Direction) -> DirectionAction:
    """Cycle structure of π(γ_w(1))."""
    mono = monomial_residues(label, _label_step(label, w, 1))
    cycles = []
    for rows in mono.cycles():
        theta = DualElem.trivial(label.prime)
        for r in rows:
            phase = mono.phases[r]
            theta = theta + DualElem.of(label.prime, phase.numer, phase.denom_exp)
        cycles.append(Cycle(tuple(rows), theta))
    return DirectionAction(w, mono, cycles)


@dataclass(frozen=True)
class SpectralEntry:
    """
    One closed-form eigenvalue.

    Attributes:
        value: The eigenvalue
        frequencies: Per-direction frequency ω_k paired with it
        h_prime: Index of the basis vector or cycle it belongs to
    """
    value: float
    frequencies: Tuple[DualElem, ...]
    h_prime: Index

    @property
    def tau(self) -> str:
        return ",".join(str(w) for w in self.frequencies)


@dataclass
class SpectralDecomposition:
    regime: SpectralRegime
    actions: List[DirectionAction]
    entries: List[SpectralEntry]
    lead: Optional[int] = None

    def values(self) -> List[float]:
        return sorted(e.value for e in self.entries)


def _entry(label: RepLabel, alpha: float, freqs: Sequence[DualElem], row: int) -> SpectralEntry:
    value = sum(frequency_weight(w.as_fraction(), label.prime, alpha) for w in freqs)
    return SpectralEntry(float(value), tuple(freqs), label.indices()[row])


def spectral_decomposition(
    label: RepLabel,
    directions: Optional[Sequence[Sequence[int]]],
    alpha: float,
) -> SpectralDecomposition:
    """Classify a label's regime and list its closed-form eigenvalues."""
    alpha = check_alpha(alpha)
    dirs = check_directions(label.law, label.prime, directions)
    if label.is_trivial:
        zero = DualElem.trivial(label.prime)
        entry = SpectralEntry(0.0, tuple(zero for _ in dirs), label.indices()[0])
        return SpectralDecomposition(SpectralRegime.TRIVIAL, [], [entry])
    actions = [direction_action(label, w) for w in dirs]
    moving = [i for i, a in enumerate(actions) if not a.is_diagonal]
    entries: List[SpectralEntry] = []
    lead = moving[0] if len(moving) == 1 else None
    if lead is not None and all(a.constant_on_cycles_of(actions[lead]) for i, a in enumerate(actions) if i != lead):
        for cycle in actions[lead].cycles:
            head = cycle.rows[0]
            for j in range(cycle.length):
                freqs = [cycle.frequency(j) if i == lead else a.frequency_at(head) for i, a in enumerate(actions)]
                entries.append(_entry(label, alpha, freqs, head))
        regime = SpectralRegime.CLOSED
    elif not moving:
        for row in range(label.dim):
            entries.append(_entry(label, alpha, [a.frequency_at(row) for a in actions], row))
        regime = SpectralRegime.CLOSED
    else:
        for row in range(label.dim):
            entries.append(_entry(label, alpha, [a.frequency_at(row) for a in actions], row))
        regime = SpectralRegime.SCHRODINGER
    logger.debug(f"{label}: {regime.value} regime, {len(moving)} moving directions")
    return SpectralDecomposition(regime, actions, entries, lead)


def closed_form_spectrum(
    law: GroupLaw,
    directions: Optional[Sequence[Sequence[int]]],
    alpha: float,
    label: RepLabel,
) -> List[float]:
    """
    Sorted closed-form eigenvalues of σ_L(ξ).

    Raises:
        UnsupportedLawError: For G^{5,6}, which only has a lower bound
    """
    if isinstance(law, G56Law):
        raise UnsupportedLawError("g56 has no closed-form sub-Laplacian spectrum")
    if label.law != law:
        raise ValueError(f"Label {label} does not belong to {law.name}")
    return spectral_decomposition(label, directions, alpha).values()


def generator_norm(label: RepLabel) -> int:
    """‖(ξ₁, …, ξ_κ)‖_p."""
    return label.prime ** label.generator_level


def spectrum_report(
    law: GroupLaw,
    directions: Optional[Sequence[Sequence[int]]],
    alpha: float,
    label: RepLabel,
    bound_constant: Optional[float] = None,
) -> SpectrumReport:
    """
    Compare the computed symbol with the closed form at one label.

    For G^{5,6} only the numeric eigenvalues are reported, with ``bound_ok``
    checking λ ≥ bound_constant·‖(ξ₁, ξ₂)‖_p^α (or positivity when no
    constant is given).
    """
    symbol = sublaplacian_symbol(law, directions, alpha, label)
    numeric = symbol.eigenvalues()
    text, branch = str(label.xi), label.branch
    rows: List[SpectrumRow] = []
    if isinstance(law, G56Law):
        floor = 0.0 if bound_constant is None else bound_constant * generator_norm(label) ** alpha
        for value in numeric:
            if label.is_trivial:
                ok = abs(value) < TOLERANCE
            elif bound_constant is None:
                ok = value > TOLERANCE
            else:
                ok = value >= floor - TOLERANCE
            rows.append(SpectrumRow(text, branch, "", "", None, value, ok))
        return SpectrumReport(
            text, branch, label.dim, SpectralRegime.NUMERIC.value, numeric, [], rows, symbol.hermitian_residual()
        )
    decomposition = spectral_decomposition(label, directions, alpha)
    entries = sorted(decomposition.entries, key=lambda e: (e.value, e.h_prime))
    for entry, value in zip(entries, numeric):
        h_text = ",".join(str(v) for v in entry.h_prime)
        rows.append(SpectrumRow(text, branch, entry.tau, h_text, entry.value, value))
    return SpectrumReport(
        text,
        branch,
        label.dim,
        decomposition.regime.value,
        numeric,
        [e.value for e in entries],
        rows,
        symbol.hermitian_residual(),
    )


def symbol_blocks(label: RepLabel, directions: Optional[Sequence[Sequence[int]]]) -> List[List[int]]:
    """Orbits of the basis under all π(γ_w(1)); σ_L(ξ) is block-diagonal over them."""
    dirs = check_directions(label.law, label.prime, directions)
    parent = list(range(label.dim))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for w in dirs:
        mono = monomial_residues(label, _label_step(label, w, 1))
        for row, col in enumerate(mono.columns):
            parent[find(row)] = find(col)
    blocks: dict = {}
    for i in range(label.dim):
        blocks.setdefault(find(i), []).append(i)
    return sorted(blocks.values())


def block_residual(symbol: SymbolMatrix, blocks: Sequence[Sequence[int]]) -> float:
    """Largest |σ_{ij}| with i and j in different blocks."""
    owner = {}
    for b, rows in enumerate(blocks):
        for r in rows:
            owner[r] = b
    worst = 0.0
    for i in range(symbol.dim):
        for j in range(symbol.dim):
            if owner[i] != owner[j]:
                worst = max(worst, abs(symbol.entries[i, j]))
    return worst


@dataclass(eq=False)
class Eigenfunction:
    """
    x ↦ √d_ξ·(π_ξ(x) v)_{h′} for an eigenvector v of σ_L(ξ).

    Attributes:
        label: The label
        vector: Unit eigenvector v
        row: Position of h′ in I_ξ
        eigenvalue: The eigenvalue of v
    """
    label: RepLabel
    vector: np.ndarray
    row: int
    eigenvalue: float

    def at_residues(self, x: Tuple[int, ...]) -> complex:
        modulus = self.label.prime ** self.label.level
        mono = monomial_residues(self.label, tuple(c % modulus for c in x))
        col = mono.columns[self.row]
        value = mono.phases[self.row].to_complex() * self.vector[col]
        return complex(np.sqrt(self.label.dim) * value)

    def __call__(self, x: GroupElement) -> complex:
        return self.at_residues(x.residues)

    def to_test_function(self) -> TestFunction:
        """Tabulate over G/G(p^L ℤ_p) from the label's monomial table."""
        label, table = self.label, monomial_table(self.label)
        values = table.phases[:, self.row] * self.vector[table.columns[:, self.row]]
        return TestFunction(label.law, label.prime, label.level, np.sqrt(label.dim) * values)


def eigenfunction(
    label: RepLabel,
    directions: Optional[Sequence[Sequence[int]]],
    alpha: float,
    h_prime: Index,
    tau: Optional[DualElem] = None,
) -> Eigenfunction:
    """
    The eigenfunction e_{ξ,h′,τ} of a closed-regime label.

    For a moving lead direction τ picks the frequency of the cycle through
    h′; when every direction is diagonal the basis vector of h′ is returned.

    Raises:
        ValueError: If the label is not in the closed regime or τ is not a
            frequency of the cycle through h′
    """
    decomposition = spectral_decomposition(label, directions, alpha)
    if decomposition.regime not in (SpectralRegime.CLOSED, SpectralRegime.TRIVIAL):
        raise ValueError(f"{label} is in the {decomposition.regime.value} regime")
    row = label.index_position(label.check_index(h_prime))
    d = label.dim
    vector = np.zeros(d, dtype=np.complex128)
    if decomposition.lead is None or decomposition.regime is SpectralRegime.TRIVIAL:
        vector[row] = 1.0
        freqs = [a.frequency_at(row) for a in decomposition.actions]
    else:
        lead = decomposition.actions[decomposition.lead]
        cycle, _ = lead.cycle_of(row)
        choices = [j for j in range(cycle.length) if tau is None or cycle.frequency(j) == tau]
        if not choices:
            raise ValueError(f"{tau} is not a frequency of the cycle through {h_prime}")
        j = choices[0]
        omega = cycle.frequency(j)
        eig = complex(np.exp(2j * np.pi * float(omega.as_fraction())))
        mono = lead.generator
        value = 1.0 + 0j
        r = cycle.rows[0]
        for _ in range(cycle.length):
            vector[r] = value
            value = eig * value / mono.phases[r].to_complex()
            r = mono.columns[r]
        vector /= np.linalg.norm(vector)
        head = cycle.rows[0]
        freqs = [omega if i == decomposition.lead else a.frequency_at(head) for i, a in enumerate(decomposition.actions)]
    eigenvalue = 0.0 if label.is_trivial else _entry(label, alpha, freqs, row).value
    return Eigenfunction(label, vector, row, eigenvalue)


def numeric_eigenfunctions(symbol: SymbolMatrix, h_prime: Index) -> List[Eigenfunction]:
    """Eigenfunctions built from an orthonormal eigenbasis of the Hermitian symbol."""
    label = symbol.label
    row = label.index_position(label.check_index(h_prime))
    values, vectors = symbol.eigenvectors()
    return [Eigenfunction(label, vectors[:, i].copy(), row, float(values[i])) for i in range(symbol.dim)]
