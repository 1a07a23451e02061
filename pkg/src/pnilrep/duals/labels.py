"""
RepLabel model: one point of a unitary dual together with its index set.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Tuple

from ..errors import IndexOutOfRangeError
from ..groups import GroupLaw
from ..padic import DualPoint

Index = Tuple[int, ...]

CHARACTER_BRANCH = "chars"


@dataclass(frozen=True)
class RepLabel:
    """
    An irreducible representation π_ξ of a group law.

    Attributes:
        law: The group law
        xi: The canonical dual point ξ (d components)
        branch: Tag of the indexing set containing ξ ("chars", "A1", ...)
        index_set: Exponents e_j of the index set I_ξ = Π ℤ/p^{e_j}ℤ
    """
    law: GroupLaw
    xi: DualPoint
    branch: str
    index_set: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.xi.dimension != self.law.dimension:
            raise ValueError(
                f"{self.law.name} labels need {self.law.dimension} components, got {self.xi.dimension}"
            )
        if any(e < 0 for e in self.index_set):
            raise ValueError(f"Index set exponents must be non-negative: {self.index_set}")

    @property
    def prime(self) -> int:
        return self.xi.prime

    @cached_property
    def dim(self) -> int:
        """d_ξ = Π p^{e_j}."""
        return self.prime ** sum(self.index_set)

    @cached_property
    def level(self) -> int:
        """Smallest l with π_ξ trivial on G(p^l ℤ_p)."""
        return self.xi.level

    @property
    def is_trivial(self) -> bool:
        return self.xi.is_trivial

    @property
    def is_character(self) -> bool:
        return self.dim == 1

    @property
    def generator_level(self) -> int:
        """Level of the generating-stratum components (ξ₁, …, ξ_κ)."""
        return self.xi.sub_level(self.law.first_stratum)

    def indices(self) -> List[Index]:
        """I_ξ in canonical order, first factor outermost."""
        return list(self.iter_indices())

    def iter_indices(self) -> Iterator[Index]:
        return itertools.product(*(range(self.prime ** e) for e in self.index_set))

    def index_position(self, h: Index) -> int:
        """Row of h in the canonical enumeration of I_ξ."""
        pos = 0
        for value, e in zip(h, self.index_set):
            pos = pos * self.prime ** e + value
        return pos

    def check_index(self, h: Index) -> Index:
        """
        Validate an index tuple.

        Raises:
            IndexOutOfRangeError: If h has the wrong arity or a coordinate
                outside [0, p^{e_j})
        """
        h = tuple(int(v) for v in h)
        if len(h) != len(self.index_set):
            raise IndexOutOfRangeError(
                f"Index {h} has {len(h)} coordinates, {self} needs {len(self.index_set)}"
            )
        for value, e in zip(h, self.index_set):
            if not 0 <= value < self.prime ** e:
                raise IndexOutOfRangeError(f"Index {h} outside I_ξ of {self}")
        return h

    def __str__(self) -> str:
        return f"{self.law.name}[{self.xi}]"
