"""
Polynomial group laws on ℤ_p^d.

Every law has the triangular shape x ⋆ y = x + y + Q(x, y) where the
correction of coordinate i only involves x and lower coordinates of y. Laws
operate on raw residues modulo p^N; ``GroupElement`` wraps them.
"""

from abc import ABC, abstractmethod
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from ..errors import (
    InvalidPrimeError,
    NonGeneratorDirectionError,
    UnsupportedLawError,
)
from ..padic import check_prime

Residues = Tuple[int, ...]


@lru_cache(maxsize=256)
def unit_inverse(k: int, modulus: int) -> int:
    """Inverse of a small integer k modulo p^N."""
    return pow(k, -1, modulus)


class GroupLaw(ABC):
    """
    Abstract base class for the supported nilpotent group laws.

    Subclasses fix the coordinates of the generating stratum, the nilpotency
    class and the explicit star and inverse polynomials.
    """

    law_id: str = ""
    nilpotency_class: int = 1
    general_directions: bool = False

    @property
    @abstractmethod
    def dimension(self) -> int:
        """Number of coordinates d."""

    @property
    @abstractmethod
    def first_stratum(self) -> Tuple[int, ...]:
        """0-based coordinates spanning 𝔤/[𝔤,𝔤]."""

    @abstractmethod
    def star_residues(self, x: Residues, y: Residues, modulus: int) -> Residues:
        """Evaluate x ⋆ y modulo ``modulus``."""

    @abstractmethod
    def inverse_residues(self, x: Residues, modulus: int) -> Residues:
        """Evaluate the closed-form inverse modulo ``modulus``."""

    @property
    def generator_count(self) -> int:
        return len(self.first_stratum)

    @property
    def min_prime(self) -> int:
        return 3 if self.nilpotency_class <= 2 else 5

    @property
    def name(self) -> str:
        return self.law_id

    def check_prime(self, p: int) -> int:
        """
        Validate p for this law.

        Raises:
            InvalidPrimeError: If p is not an odd prime or p <= class
        """
        check_prime(p)
        if p < self.min_prime:
            raise InvalidPrimeError(
                f"{self.name} has nilpotency class {self.nilpotency_class} and needs p >= {self.min_prime}, got {p}"
            )
        return p

    def identity_residues(self) -> Residues:
        return (0,) * self.dimension

    def solve_inverse(self, x: Residues, modulus: int) -> Residues:
        """
        Solve x ⋆ y = e coordinate by coordinate.

        Slow and law-agnostic: it only uses ``star_residues``, so it serves
        as the reference the closed-form ``inverse_residues`` of each law is
        checked against.
        """
        y = [0] * self.dimension
        for i in range(self.dimension):
            partial = self.star_residues(x, tuple(y), modulus)
            y[i] = -partial[i] % modulus
        return tuple(y)

    def direction_residues(self, w: Sequence[int], modulus: int) -> Residues:
        """
        Normalize a direction to a d-tuple supported on the first stratum.

        Accepts either a κ-tuple or a d-tuple.

        Raises:
            NonGeneratorDirectionError: If w has mass outside the first stratum
        """
        w = [int(c) % modulus for c in w]
        if len(w) == self.generator_count:
            full = [0] * self.dimension
            for pos, c in zip(self.first_stratum, w):
                full[pos] = c
            return tuple(full)
        if len(w) != self.dimension:
            raise NonGeneratorDirectionError(
                f"Direction for {self.name} needs {self.generator_count} or {self.dimension} entries, got {len(w)}"
            )
        stray = [i for i, c in enumerate(w) if c and i not in self.first_stratum]
        if stray:
            raise NonGeneratorDirectionError(
                f"Direction has components outside the generating stratum at positions {stray}"
            )
        return tuple(w)

    def one_param_residues(self, w: Sequence[int], t: int, modulus: int) -> Residues:
        """
        γ_w(t) for a direction in the generating stratum.

        Laws without ``general_directions`` only accept multiples of a basis
        vector, for which γ(t) = t·w.
        """
        full = self.direction_residues(w, modulus)
        support = [i for i, c in enumerate(full) if c]
        if len(support) <= 1:
            return tuple(t * c % modulus for c in full)
        if not self.general_directions:
            raise UnsupportedLawError(
                f"{self.name} only supports one-parameter subgroups along basis directions"
            )
        return self._general_one_param(full, t, modulus)

    def _general_one_param(self, w: Residues, t: int, modulus: int) -> Residues:
        raise UnsupportedLawError(f"{self.name} has no general one-parameter subgroups")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupLaw):
            return NotImplemented
        return (self.law_id, self.dimension) == (other.law_id, other.dimension)

    def __hash__(self) -> int:
        return hash((self.law_id, self.dimension))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"

    def __str__(self) -> str:
        return self.name


class AbelianLaw(GroupLaw):
    """ℤ_p^d with coordinatewise addition."""

    law_id = "zp"
    nilpotency_class = 1
    general_directions = True

    def __init__(self, d: int = 1) -> None:
        if d < 1:
            raise ValueError(f"Dimension must be positive, got {d}")
        self._d = d

    @property
    def dimension(self) -> int:
        return self._d

    @property
    def first_stratum(self) -> Tuple[int, ...]:
        return tuple(range(self._d))

    @property
    def name(self) -> str:
        return "zp" if self._d == 1 else f"zp{self._d}"

    def star_residues(self, x: Residues, y: Residues, modulus: int) -> Residues:
        return tuple((a + b) % modulus for a, b in zip(x, y))

    def inverse_residues(self, x: Residues, modulus: int) -> Residues:
        return tuple(-a % modulus for a in x)

    def _general_one_param(self, w: Residues, t: int, modulus: int) -> Residues:
        return tuple(t * c % modulus for c in w)


class HeisenbergLaw(GroupLaw):
    """H_d on (x, y, z) with z ↦ z + z' + x·y'."""

    nilpotency_class = 2
    general_directions = True

    def __init__(self, d: int = 1) -> None:
        if d < 1:
            raise ValueError(f"Heisenberg dimension must be positive, got {d}")
        self._d = d
        self.law_id = f"h{d}"

    @property
    def dimension(self) -> int:
        return 2 * self._d + 1

    @property
    def degree(self) -> int:
        return self._d

    @property
    def first_stratum(self) -> Tuple[int, ...]:
        return tuple(range(2 * self._d))

    def star_residues(self, x: Residues, y: Residues, modulus: int) -> Residues:
        d = self._d
        head = [(a + b) % modulus for a, b in zip(x[:2 * d], y[:2 * d])]
        cross = sum(x[j] * y[d + j] for j in range(d))
        head.append((x[2 * d] + y[2 * d] + cross) % modulus)
        return tuple(head)

    def inverse_residues(self, x: Residues, modulus: int) -> Residues:
        d = self._d
        head = [-a % modulus for a in x[:2 * d]]
        cross = sum(x[j] * x[d + j] for j in range(d))
        head.append((-x[2 * d] + cross) % modulus)
        return tuple(head)

    def _general_one_param(self, w: Residues, t: int, modulus: int) -> Residues:
        d = self._d
        dot = sum(w[j] * w[d + j] for j in range(d))
        half = unit_inverse(2, modulus)
        coords = [t * c % modulus for c in w[:2 * d]]
        coords.append(t * t * dot * half % modulus)
        return tuple(coords)


class EngelLaw(GroupLaw):
    """B₄: [X₁,X₂]=X₃, [X₁,X₃]=X₄."""

    law_id = "b4"
    nilpotency_class = 3

    @property
    def min_prime(self) -> int:
        # only ½ appears in the law, its inverse and its realizations
        return 3

    @property
    def dimension(self) -> int:
        return 4

    @property
    def first_stratum(self) -> Tuple[int, ...]:
        return (0, 1)

    def star_residues(self, x: Residues, y: Residues, modulus: int) -> Residues:
        x1, x2, x3, x4 = x
        y1, y2, y3, y4 = y
        half = unit_inverse(2, modulus)
        return (
            (x1 + y1) % modulus,
            (x2 + y2) % modulus,
            (x3 + y3 + x1 * y2) % modulus,
            (x4 + y4 + half * x1 * x1 * y2 + x1 * y3) % modulus,
        )

    def inverse_residues(self, x: Residues, modulus: int) -> Residues:
        x1, x2, x3, x4 = x
        half = unit_inverse(2, modulus)
        return (
            -x1 % modulus,
            -x2 % modulus,
            (-x3 + x1 * x2) % modulus,
            (-x4 + x1 * x3 - half * x1 * x1 * x2) % modulus,
        )


class G52Law(GroupLaw):
    """G^{5,2}: [X₁,X₂]=X₄, [X₁,X₃]=X₅."""

    law_id = "g52"
    nilpotency_class = 2
    general_directions = True

    @property
    def dimension(self) -> int:
        return 5

    @property
    def first_stratum(self) -> Tuple[int, ...]:
        return (0, 1, 2)

    def star_residues(self, x: Residues, y: Residues, modulus: int) -> Residues:
        x1, x2, x3, x4, x5 = x
        y1, y2, y3, y4, y5 = y
        return (
            (x1 + y1) % modulus,
            (x2 + y2) % modulus,
            (x3 + y3) % modulus,
            (x4 + y4 + x1 * y2) % modulus,
            (x5 + y5 + x1 * y3) % modulus,
        )

    def inverse_residues(self, x: Residues, modulus: int) -> Residues:
        x1, x2, x3, x4, x5 = x
        return (
            -x1 % modulus,
            -x2 % modulus,
            -x3 % modulus,
            (-x4 + x1 * x2) % modulus,
            (-x5 + x1 * x3) % modulus,
        )

    def _general_one_param(self, w: Residues, t: int, modulus: int) -> Residues:
        w1, w2, w3 = w[:3]
        half = unit_inverse(2, modulus)
        return (
            t * w1 % modulus,
            t * w2 % modulus,
            t * w3 % modulus,
            half * t * t * w1 * w2 % modulus,
            half * t * t * w1 * w3 % modulus,
        )


class G53Law(GroupLaw):
    """G^{5,3}: [X₁,X₂]=X₄, [X₁,X₄]=X₅, [X₂,X₃]=X₅."""

    law_id = "g53"
    nilpotency_class = 3
    general_directions = True

    @property
    def dimension(self) -> int:
        return 5

    @property
    def first_stratum(self) -> Tuple[int, ...]:
        return (0, 1, 2)

    def star_residues(self, x: Residues, y: Residues, modulus: int) -> Residues:
        x1, x2, x3, x4, x5 = x
        y1, y2, y3, y4, y5 = y
        half = unit_inverse(2, modulus)
        return (
            (x1 + y1) % modulus,
            (x2 + y2) % modulus,
            (x3 + y3) % modulus,
            (x4 + y4 + x1 * y2) % modulus,
            (x5 + y5 + x2 * y3 + x1 * y4 + half * x1 * x1 * y2) % modulus,
        )

    def inverse_residues(self, x: Residues, modulus: int) -> Residues:
        x1, x2, x3, x4, x5 = x
        half = unit_inverse(2, modulus)
        return (
            -x1 % modulus,
            -x2 % modulus,
            -x3 % modulus,
            (-x4 + x1 * x2) % modulus,
            (-x5 + x1 * x4 + x2 * x3 - half * x1 * x1 * x2) % modulus,
        )

    def _general_one_param(self, w: Residues, t: int, modulus: int) -> Residues:
        w1, w2, w3 = w[:3]
        half = unit_inverse(2, modulus)
        sixth = unit_inverse(6, modulus)
        return (
            t * w1 % modulus,
            t * w2 % modulus,
            t * w3 % modulus,
            half * t * t * w1 * w2 % modulus,
            (half * t * t * w2 * w3 + sixth * t ** 3 * w1 * w1 * w2) % modulus,
        )


class G54Law(GroupLaw):
    """G^{5,4}: [X₁,X₂]=X₃, [X₁,X₃]=X₄, [X₂,X₃]=X₅."""

    law_id = "g54"
    nilpotency_class = 3

    @property
    def dimension(self) -> int:
        return 5

    @property
    def first_stratum(self) -> Tuple[int, ...]:
        return (0, 1)

    def star_residues(self, x: Residues, y: Residues, modulus: int) -> Residues:
        x1, x2, x3, x4, x5 = x
        y1, y2, y3, y4, y5 = y
        half = unit_inverse(2, modulus)
        return (
            (x1 + y1) % modulus,
            (x2 + y2) % modulus,
            (x3 + y3 + x1 * y2) % modulus,
            (x4 + y4 + half * x1 * x1 * y2 + x1 * y3) % modulus,
            (x5 + y5 + half * x1 * y2 * y2 + x2 * y3 + x1 * x2 * y2) % modulus,
        )

    def inverse_residues(self, x: Residues, modulus: int) -> Residues:
        x1, x2, x3, x4, x5 = x
        half = unit_inverse(2, modulus)
        return (
            -x1 % modulus,
            -x2 % modulus,
            (-x3 + x1 * x2) % modulus,
            (-x4 + x1 * x3 - half * x1 * x1 * x2) % modulus,
            (-x5 + x2 * x3 - half * x1 * x2 * x2) % modulus,
        )


class G55Law(GroupLaw):
    """G^{5,5}: the filiform law [X₁,X_j]=X_{j+1} for j = 2, 3, 4."""

    law_id = "g55"
    nilpotency_class = 4

    @property
    def dimension(self) -> int:
        return 5

    @property
    def first_stratum(self) -> Tuple[int, ...]:
        return (0, 1)

    def star_residues(self, x: Residues, y: Residues, modulus: int) -> Residues:
        x1, x2, x3, x4, x5 = x
        y1, y2, y3, y4, y5 = y
        half = unit_inverse(2, modulus)
        sixth = unit_inverse(6, modulus)
        return (
            (x1 + y1) % modulus,
            (x2 + y2) % modulus,
            (x3 + y3 + x1 * y2) % modulus,
            (x4 + y4 + half * x1 * x1 * y2 + x1 * y3) % modulus,
            (x5 + y5 + sixth * x1 ** 3 * y2 + half * x1 * x1 * y3 + x1 * y4) % modulus,
        )

    def inverse_residues(self, x: Residues, modulus: int) -> Residues:
        x1, x2, x3, x4, x5 = x
        half = unit_inverse(2, modulus)
        sixth = unit_inverse(6, modulus)
        return (
            -x1 % modulus,
            -x2 % modulus,
            (-x3 + x1 * x2) % modulus,
            (-x4 + x1 * x3 - half * x1 * x1 * x2) % modulus,
            (-x5 + x1 * x4 - half * x1 * x1 * x3 + sixth * x1 ** 3 * x2) % modulus,
        )


class G56Law(GroupLaw):
    """G^{5,6}: [X₁,X₂]=X₃, [X₁,X₃]=X₄, [X₁,X₄]=X₅, [X₂,X₃]=X₅."""

    law_id = "g56"
    nilpotency_class = 4

    @property
    def dimension(self) -> int:
        return 5

    @property
    def first_stratum(self) -> Tuple[int, ...]:
        return (0, 1)

    def star_residues(self, x: Residues, y: Residues, modulus: int) -> Residues:
        x1, x2, x3, x4, x5 = x
        y1, y2, y3, y4, y5 = y
        half = unit_inverse(2, modulus)
        sixth = unit_inverse(6, modulus)
        fifth = (
            sixth * x1 ** 3 * y2
            + half * x1 * x1 * y3
            + x1 * y4
            + half * x1 * y2 * y2
            + x2 * y3
            + x1 * x2 * y2
        )
        return (
            (x1 + y1) % modulus,
            (x2 + y2) % modulus,
            (x3 + y3 + x1 * y2) % modulus,
            (x4 + y4 + half * x1 * x1 * y2 + x1 * y3) % modulus,
            (x5 + y5 + fifth) % modulus,
        )

    def inverse_residues(self, x: Residues, modulus: int) -> Residues:
        x1, x2, x3, x4, x5 = x
        half = unit_inverse(2, modulus)
        sixth = unit_inverse(6, modulus)
        fifth = (
            -x5
            + x1 * x4
            + x2 * x3
            - half * x1 * x1 * x3
            - half * x1 * x2 * x2
            + sixth * x1 ** 3 * x2
        )
        return (
            -x1 % modulus,
            -x2 % modulus,
            (-x3 + x1 * x2) % modulus,
            (-x4 + x1 * x3 - half * x1 * x1 * x2) % modulus,
            fifth % modulus,
        )


LAW_IDS: List[str] = ["zp", "h1", "h2", "b4", "g52", "g53", "g54", "g55", "g56"]

_FIXED_LAWS: Dict[str, GroupLaw] = {
    "b4": EngelLaw(),
    "g52": G52Law(),
    "g53": G53Law(),
    "g54": G54Law(),
    "g55": G55Law(),
    "g56": G56Law(),
}


def law_for(law_id: str, dim: int = 1) -> GroupLaw:
    """
    Look up a group law by its CLI id.

    Args:
        law_id: One of zp, zpN, hN, b4, g52 … g56
        dim: Dimension for zp (ignored otherwise)

    Returns:
        The group law

    Raises:
        UnsupportedLawError: If the id is unknown
    """
    key = law_id.strip().lower()
    if key in _FIXED_LAWS:
        return _FIXED_LAWS[key]
    if key == "zp":
        return AbelianLaw(dim)
    if key.startswith("zp") and key[2:].isdigit():
        return AbelianLaw(int(key[2:]))
    if key.startswith("h") and key[1:].isdigit():
        return HeisenbergLaw(int(key[1:]))
    raise UnsupportedLawError(f"Unknown group law {law_id!r}; expected one of {', '.join(LAW_IDS)}")


def available_laws() -> List[GroupLaw]:
    """The laws reachable from the CLI ids, in CLI order."""
    return [law_for(i) for i in LAW_IDS]
