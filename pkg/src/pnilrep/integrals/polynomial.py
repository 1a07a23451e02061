"""
Phase polynomials with exact p-adic rational coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from ..padic import DualElem, PhaseRational, check_prime, rational_fractional_part, rational_valuation

Monomial = Tuple[int, ...]
Coefficient = Union[Fraction, DualElem, int]


def as_fraction(value: Coefficient) -> Fraction:
    """Exact rational value of a coefficient."""
    if isinstance(value, DualElem):
        return value.as_fraction()
    return Fraction(value)


def coefficient_level(value: Fraction, p: int) -> int:
    """Exponent k with |value|_p = p^k, clipped below at 0."""
    if value == 0:
        return 0
    return max(0, -rational_valuation(value, p))


def numerator_at(value: Fraction, p: int, level: int) -> int:
    """
    Integer N with value ≡ N/p^level modulo ℤ_p.

    Factors of the denominator prime to p are inverted modulo p^level.
    """
    modulus = p ** level
    scaled = value * modulus
    if scaled.denominator % p == 0:
        raise ValueError(f"{value} has level above {level}")
    return scaled.numerator * pow(scaled.denominator, -1, modulus) % modulus


@dataclass(frozen=True)
class PhasePolynomial:
    """
    A polynomial P(u₁, …, u_r) whose values are read in ℚ_p/ℤ_p.

    Attributes:
        prime: The prime p
        terms: Pairs (exponents, coefficient) with nonzero coefficients,
            sorted by exponents
    """
    prime: int
    terms: Tuple[Tuple[Monomial, Fraction], ...]

    def __post_init__(self) -> None:
        check_prime(self.prime)
        arities = {len(m) for m, _ in self.terms}
        if len(arities) > 1:
            raise ValueError(f"Monomials of mixed arity: {sorted(arities)}")
        if any(sum(m) > 3 for m, _ in self.terms):
            raise ValueError("Phase polynomials have degree at most 3")

    @classmethod
    def of(cls, prime: int, coefficients: Mapping[Monomial, Coefficient]) -> "PhasePolynomial":
        merged: Dict[Monomial, Fraction] = {}
        for monomial, value in coefficients.items():
            key = tuple(int(e) for e in monomial)
            merged[key] = merged.get(key, Fraction(0)) + as_fraction(value)
        terms = tuple(sorted((m, c) for m, c in merged.items() if c != 0))
        return cls(prime, terms)

    @classmethod
    def univariate(cls, prime: int, coefficients: Sequence[Coefficient]) -> "PhasePolynomial":
        """P(u) = Σ coefficients[k]·u^k."""
        return cls.of(prime, {(k,): c for k, c in enumerate(coefficients)})

    @classmethod
    def quadratic(cls, prime: int, a: Coefficient, b: Coefficient) -> "PhasePolynomial":
        """P(u) = a·u² + b·u."""
        return cls.univariate(prime, [0, b, a])

    @property
    def variables(self) -> int:
        return len(self.terms[0][0]) if self.terms else 1

    @property
    def degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=0)

    def coefficient(self, monomial: Iterable[int]) -> Fraction:
        key = tuple(monomial)
        for m, c in self.terms:
            if m == key:
                return c
        return Fraction(0)

    def constancy_index(self) -> int:
        """
        Smallest r such that u ↦ e(P(u)) is constant on cosets of p^r ℤ_p^vars.
        """
        return max(
            (coefficient_level(c, self.prime) for m, c in self.terms if any(m)),
            default=0,
        )

    def phase_level(self) -> int:
        """Level of the largest coefficient, constant term included."""
        return max((coefficient_level(c, self.prime) for _, c in self.terms), default=0)

    def rescale(self, gamma: int) -> "PhasePolynomial":
        """Substitute u = p^γ v."""
        factor = Fraction(self.prime) ** gamma
        return PhasePolynomial.of(
            self.prime, {m: c * factor ** sum(m) for m, c in self.terms}
        )

    def numerators(self, level: int) -> Tuple[Tuple[Monomial, int], ...]:
        """Coefficients as integers over p^level, for fast evaluation."""
        return tuple((m, numerator_at(c, self.prime, level)) for m, c in self.terms)

    def evaluate(self, point: Sequence[int]) -> PhaseRational:
        """Exact value {P(u)}_p at an integer point."""
        if len(point) != self.variables:
            raise ValueError(f"Expected {self.variables} coordinates, got {len(point)}")
        total = Fraction(0)
        for monomial, c in self.terms:
            term = c
            for u, e in zip(point, monomial):
                term *= u ** e
            total += term
        return rational_fractional_part(total, self.prime)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = "uvw"
        parts = []
        for monomial, c in self.terms:
            factors = []
            for i, e in enumerate(monomial):
                if e:
                    name = names[i] if self.variables <= 3 else f"u{i + 1}"
                    factors.append(name if e == 1 else f"{name}^{e}")
            parts.append("*".join([str(c)] + factors) if factors else str(c))
        return " + ".join(parts)
