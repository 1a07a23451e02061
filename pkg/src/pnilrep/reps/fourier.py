"""
Group Fourier transform on finite quotients and Fourier synthesis.

f̂(ξ) = ∫_G f(x) π_ξ(x)* dx and f(x) = Σ_{ξ ∈ B(n)} d_ξ Tr[π_ξ(x) f̂(ξ)]
for f right-invariant under G(p^n ℤ_p). Both sides are exact coset sums.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from ..duals import RepLabel, enumerate_dual_ball
from ..errors import IncompleteCoefficientsError, PrecisionMismatchError, ResourceCapError
from ..groups import DEFAULT_QUOTIENT_CAP, GroupElement, GroupLaw, quotient_positions, quotient_residues
from ..groups.laws import Residues
from .engine import monomial_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TestFunction:
    """
    A function in 𝒟_m(G): a table of values over G/G(p^m ℤ_p).

    Attributes:
        law: Group law
        prime: The prime p
        m: Index of local constancy
        values: Complex values in quotient enumeration order
            (first coordinate outermost)
    """
    __test__ = False

    law: GroupLaw
    prime: int
    m: int
    values: np.ndarray

    def __post_init__(self) -> None:
        self.law.check_prime(self.prime)
        if self.m < 0:
            raise ValueError(f"Constancy index must be non-negative, got {self.m}")
        expected = self.prime ** (self.law.dimension * self.m)
        if self.values.shape != (expected,):
            raise ValueError(f"Expected {expected} values, got shape {self.values.shape}")

    @classmethod
    def constant(cls, law: GroupLaw, prime: int, m: int, value: complex = 1.0) -> "TestFunction":
        size = prime ** (law.dimension * m)
        return cls(law, prime, m, np.full(size, value, dtype=np.complex128))

    @classmethod
    def random(cls, law: GroupLaw, prime: int, m: int, rng: np.random.Generator) -> "TestFunction":
        """Independent standard complex Gaussian values."""
        size = prime ** (law.dimension * m)
        values = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        return cls(law, prime, m, values.astype(np.complex128))

    @classmethod
    def from_residue_callable(
        cls, law: GroupLaw, prime: int, m: int, fn: Callable[[Residues], complex]
    ) -> "TestFunction":
        values = [fn(x) for x in quotient_residues(law, prime, m)]
        return cls(law, prime, m, np.asarray(values, dtype=np.complex128))

    @classmethod
    def from_callable(
        cls, law: GroupLaw, prime: int, m: int, fn: Callable[[GroupElement], complex]
    ) -> "TestFunction":
        """Tabulate fn on the canonical coset representatives at precision max(m, 1)."""
        precision = max(m, 1)
        return cls.from_residue_callable(
            law,
            prime,
            m,
            lambda x: fn(GroupElement.from_residues(law, prime, precision, x)),
        )

    def index_of(self, x: Residues) -> int:
        modulus = self.prime ** self.m
        pos = 0
        for r in x:
            pos = pos * modulus + r % modulus
        return pos

    def at_residues(self, x: Residues) -> complex:
        return complex(self.values[self.index_of(x)])

    def __call__(self, x: GroupElement) -> complex:
        if x.law != self.law or x.prime != self.prime:
            raise ValueError(f"Element of {x.law} over {x.prime} passed to a function on {self.law}")
        if x.precision < self.m:
            raise PrecisionMismatchError(f"Function has index {self.m}, element carries {x.precision} digits")
        return self.at_residues(x.residues)

    def refine(self, m: int) -> "TestFunction":
        """The same function tabulated over a finer quotient."""
        if m < self.m:
            raise ValueError(f"Cannot coarsen from index {self.m} to {m}")
        if m == self.m:
            return self
        return TestFunction(self.law, self.prime, m, self.values[quotient_positions(self.law, self.prime, m, self.m)])

    def l2_norm_squared(self) -> float:
        return float(np.mean(np.abs(self.values) ** 2))


@dataclass(frozen=True, eq=False)
class FourierCoefficient:
    """
    f̂(ξ).

    Attributes:
        label: The label ξ
        matrix: Complex d_ξ × d_ξ array
    """
    label: RepLabel
    matrix: np.ndarray

    def hilbert_schmidt_squared(self) -> float:
        return float(np.sum(np.abs(self.matrix) ** 2))


def _check_cap(law: GroupLaw, prime: int, r: int, cap: int) -> None:
    size = prime ** (law.dimension * r)
    if size > cap:
        raise ResourceCapError(f"{law.name} quotient at level {r} has {size} elements, cap is {cap}")


def fourier_transform(f: TestFunction, label: RepLabel, cap: int = DEFAULT_QUOTIENT_CAP) -> FourierCoefficient:
    """
    f̂(ξ) = ∫_G f(x) π_ξ(x)* dx as a coset average at resolution max(m, level(ξ)).

    Raises:
        ResourceCapError: If the quotient exceeds the cap
    """
    if label.law != f.law or label.prime != f.prime:
        raise ValueError(f"Label {label} does not belong to the function's group")
    r = max(f.m, label.level)
    _check_cap(f.law, f.prime, r, cap)
    table = monomial_table(label)
    rows = table.positions(r)
    values = f.values[quotient_positions(f.law, f.prime, r, f.m)]
    columns, phases = table.columns[rows], table.phases[rows]
    d = label.dim
    out = np.zeros((d, d), dtype=np.complex128)
    np.add.at(out, (columns, np.broadcast_to(np.arange(d), columns.shape)), values[:, None] * phases.conj())
    return FourierCoefficient(label, out / len(rows))


def fourier_series(
    f: TestFunction, n: Optional[int] = None, cap: int = DEFAULT_QUOTIENT_CAP
) -> List[FourierCoefficient]:
    """f̂ over every label of B(n), n defaulting to the constancy index of f."""
    n = f.m if n is None else n
    return [fourier_transform(f, label, cap) for label in enumerate_dual_ball(f.law, f.prime, n)]


def synthesize(
    coefficients: Sequence[FourierCoefficient],
    law: GroupLaw,
    prime: int,
    n: int,
    cap: int = DEFAULT_QUOTIENT_CAP,
) -> TestFunction:
    """
    f(x) = Σ_{ξ ∈ B(n)} d_ξ Tr[π_ξ(x) f̂(ξ)] on G/G(p^n ℤ_p).

    Raises:
        IncompleteCoefficientsError: If the coefficients do not cover B(n)
            exactly
    """
    _check_cap(law, prime, n, cap)
    by_key: Dict[tuple, FourierCoefficient] = {c.label.xi.key: c for c in coefficients}
    expected = enumerate_dual_ball(law, prime, n)
    missing = [str(lab.xi) for lab in expected if lab.xi.key not in by_key]
    if missing or len(by_key) != len(expected):
        raise IncompleteCoefficientsError(
            f"Coefficients for {len(by_key)} labels, B({n}) has {len(expected)}; missing {missing[:3]}"
        )
    values = np.zeros(prime ** (law.dimension * n), dtype=np.complex128)
    for label in expected:
        coeff = by_key[label.xi.key].matrix
        table = monomial_table(label)
        traces = np.sum(table.phases * coeff[table.columns, np.arange(label.dim)], axis=1)
        values += label.dim * traces[table.positions(n)]
    return TestFunction(law, prime, n, values)


def plancherel_sum(coefficients: Sequence[FourierCoefficient]) -> float:
    """Σ d_ξ ‖f̂(ξ)‖²_HS."""
    return float(sum(c.label.dim * c.hilbert_schmidt_squared() for c in coefficients))


def schur_inner_product(
    label: RepLabel,
    first: Sequence[int],
    second: Sequence[int],
    other: Optional[RepLabel] = None,
    cap: int = DEFAULT_QUOTIENT_CAP,
) -> complex:
    """
    ⟨(π_ξ)_{hh′}, (π_ξ′)_{kk′}⟩_{L²(G)} for first = (h, h′), second = (k, k′).

    Both index pairs are given as concatenated tuples h + h′.
    """
    other = other or label
    arity_a, arity_b = len(label.index_set), len(other.index_set)
    h, hp = tuple(first[:arity_a]), tuple(first[arity_a:])
    k, kp = tuple(second[:arity_b]), tuple(second[arity_b:])
    label.check_index(h), label.check_index(hp), other.check_index(k), other.check_index(kp)
    row_a, col_a = label.index_position(h), label.index_position(hp)
    row_b, col_b = other.index_position(k), other.index_position(kp)
    r = max(label.level, other.level)
    _check_cap(label.law, label.prime, r, cap)
    table_a, table_b = monomial_table(label), monomial_table(other)
    a = table_a.coefficient(row_a, col_a)[table_a.positions(r)]
    b = table_b.coefficient(row_b, col_b)[table_b.positions(r)]
    return complex(np.mean(a * b.conj()))
