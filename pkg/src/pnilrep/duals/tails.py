"""
Generators of dual elements used to build the dual balls.

A tail constrained to ℚ_p/p^{-m}ℤ_p is represented by its canonical
representative: trivial, or c/p^k with k > m and c < p^{k-m}.
"""

from functools import lru_cache
from typing import Tuple

from ..padic import DualElem


@lru_cache(maxsize=1024)
def tails_of_level(p: int, k: int) -> Tuple[DualElem, ...]:
    """All dual elements with denominator exactly p^k."""
    if k == 0:
        return (DualElem.trivial(p),)
    return tuple(DualElem(p, k, c) for c in range(1, p ** k) if c % p)


@lru_cache(maxsize=1024)
def tails(p: int, n: int) -> Tuple[DualElem, ...]:
    """All dual elements of norm at most p^n."""
    out = []
    for k in range(0, n + 1):
        out.extend(tails_of_level(p, k))
    return tuple(out)


@lru_cache(maxsize=1024)
def canonical_tails(p: int, n: int, m: int) -> Tuple[DualElem, ...]:
    """Canonical representatives of ℚ_p/p^{-m}ℤ_p with norm at most p^n."""
    if m <= 0:
        return tails(p, n)
    out = [DualElem.trivial(p)]
    for k in range(m + 1, n + 1):
        out.extend(DualElem(p, k, c) for c in range(1, p ** (k - m)) if c % p)
    return tuple(out)
