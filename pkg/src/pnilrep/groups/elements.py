"""
Group elements and the operations of the group-law layer.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import PrecisionMismatchError, PrimeMismatchError, ResourceCapError
from ..padic import PadicInt, int_valuation
from .laws import GroupLaw, Residues

logger = logging.getLogger(__name__)

DEFAULT_QUOTIENT_CAP = 10 ** 7


@dataclass(frozen=True)
class GroupElement:
    """
    A point of ℤ_p^d together with its group law.

    Attributes:
        law: The group law
        coords: d truncated integers sharing prime and precision
    """
    law: GroupLaw
    coords: Tuple[PadicInt, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.law.dimension:
            raise ValueError(
                f"{self.law.name} needs {self.law.dimension} coordinates, got {len(self.coords)}"
            )
        primes = {c.prime for c in self.coords}
        precisions = {c.precision for c in self.coords}
        if len(primes) != 1:
            raise PrimeMismatchError(f"Coordinates over several primes: {sorted(primes)}")
        if len(precisions) != 1:
            raise PrecisionMismatchError(f"Coordinates at several precisions: {sorted(precisions)}")
        self.law.check_prime(self.prime)

    @classmethod
    def from_residues(cls, law: GroupLaw, prime: int, precision: int, values: Sequence[int]) -> "GroupElement":
        return cls(law, tuple(PadicInt.of(prime, precision, v) for v in values))

    @property
    def prime(self) -> int:
        return self.coords[0].prime

    @property
    def precision(self) -> int:
        return self.coords[0].precision

    @property
    def modulus(self) -> int:
        return self.prime ** self.precision

    @property
    def residues(self) -> Residues:
        return tuple(c.residue for c in self.coords)

    @property
    def is_identity(self) -> bool:
        return all(c.is_zero for c in self.coords)

    def reduce(self, n: int) -> "GroupElement":
        """Image in G/G(p^n ℤ_p), returned at precision n."""
        return GroupElement.from_residues(self.law, self.prime, n, [c.reduce(n) for c in self.coords])

    def with_precision(self, precision: int) -> "GroupElement":
        """Lift (by canonical representatives) or reduce to another precision."""
        if precision <= self.precision:
            return self.reduce(precision)
        return GroupElement.from_residues(self.law, self.prime, precision, self.residues)

    def norm_exponent(self) -> int:
        """Largest l ≤ N with the element in G(p^l ℤ_p)."""
        vals = [int_valuation(c.residue, self.prime) for c in self.coords if not c.is_zero]
        return min(vals) if vals else self.precision

    def __str__(self) -> str:
        inner = ",".join(str(c.residue) for c in self.coords)
        return f"({inner}) mod {self.prime}^{self.precision}"


def _check_compatible(x: GroupElement, y: GroupElement) -> None:
    if x.law != y.law:
        raise ValueError(f"Cannot multiply elements of {x.law} and {y.law}")
    if x.prime != y.prime:
        raise PrimeMismatchError(f"Cannot multiply elements over {x.prime} and {y.prime}")
    if x.precision != y.precision:
        raise PrecisionMismatchError(f"Cannot multiply elements at precisions {x.precision} and {y.precision}")


def identity(law: GroupLaw, prime: int, precision: int) -> GroupElement:
    """The neutral element at the given precision."""
    return GroupElement.from_residues(law, prime, precision, law.identity_residues())


def star(x: GroupElement, y: GroupElement) -> GroupElement:
    """
    The group product x ⋆ y.

    Raises:
        ValueError: If the laws, primes or precisions differ
    """
    _check_compatible(x, y)
    values = x.law.star_residues(x.residues, y.residues, x.modulus)
    return GroupElement.from_residues(x.law, x.prime, x.precision, values)


def inverse(x: GroupElement) -> GroupElement:
    """The inverse x⁻¹ from the law's closed form."""
    values = x.law.inverse_residues(x.residues, x.modulus)
    return GroupElement.from_residues(x.law, x.prime, x.precision, values)


def one_param(law: GroupLaw, w: Sequence[Union[PadicInt, int]], t: PadicInt) -> GroupElement:
    """
    The one-parameter subgroup γ_w evaluated at t.

    Args:
        law: Group law
        w: Direction in the generating stratum (κ-tuple or d-tuple)
        t: Parameter in ℤ_p

    Raises:
        NonGeneratorDirectionError: If w leaves the generating stratum
        UnsupportedLawError: If the law only has basis directions and w is not one
    """
    law.check_prime(t.prime)
    direction = [int(c) for c in w]
    values = law.one_param_residues(direction, t.residue, t.modulus)
    return GroupElement.from_residues(law, t.prime, t.precision, values)


def enumerate_quotient(
    law: GroupLaw,
    prime: int,
    n: int,
    precision: Optional[int] = None,
    cap: int = DEFAULT_QUOTIENT_CAP,
) -> List[GroupElement]:
    """
    Canonical representatives of G/G(p^n ℤ_p).

    Coordinates range over [0, p^n) and are listed with the first coordinate
    outermost.

    Args:
        law: Group law
        prime: The prime p
        n: Quotient level
        precision: Precision of the returned elements (default max(n, 1))
        cap: Maximum number of elements

    Returns:
        p^{dn} group elements

    Raises:
        ResourceCapError: If p^{dn} exceeds the cap
    """
    if n < 0:
        raise ValueError(f"Quotient level must be non-negative, got {n}")
    law.check_prime(prime)
    size = prime ** (law.dimension * n)
    if size > cap:
        raise ResourceCapError(f"{law.name} quotient at level {n} has {size} elements, cap is {cap}")
    precision = precision or max(n, 1)
    logger.debug(f"Enumerating {size} cosets of {law.name} mod {prime}^{n}")
    return [
        GroupElement.from_residues(law, prime, precision, values)
        for values in quotient_residues(law, prime, n)
    ]


def quotient_residues(law: GroupLaw, prime: int, n: int):
    """Iterate residue tuples of G/G(p^n ℤ_p) in enumeration order."""
    return itertools.product(range(prime ** n), repeat=law.dimension)


def quotient_positions(law: GroupLaw, prime: int, n: int, m: int) -> np.ndarray:
    """
    For each coset of G/G(p^n ℤ_p) in enumeration order, the position of its
    reduction in G/G(p^m ℤ_p). Requires m ≤ n.
    """
    if not 0 <= m <= n:
        raise ValueError(f"Cannot reduce level {n} cosets to level {m}")
    fine, coarse = prime ** n, prime ** m
    shape = (fine,) * law.dimension
    coords = np.unravel_index(np.arange(fine ** law.dimension), shape)
    return np.ravel_multi_index(tuple(c % coarse for c in coords), (coarse,) * law.dimension)
