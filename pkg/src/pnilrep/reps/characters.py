"""
Closed-form characters.

Each nontrivial character is d_ξ times a support indicator times a constant
phase times a one-variable oscillatory integral over ℤ_p, evaluated through
the integrals package. None of this goes through the representation
matrices, so the trace of ``rep_matrix`` is an independent check.
"""

import logging
from fractions import Fraction
from typing import Callable, Optional, Sequence

from ..duals import CHARACTER_BRANCH, RepLabel
from ..errors import ResourceCapError
from ..groups import (
    DEFAULT_QUOTIENT_CAP,
    AbelianLaw,
    G52Law,
    G53Law,
    G54Law,
    G55Law,
    G56Law,
    GroupElement,
    GroupLaw,
    HeisenbergLaw,
    quotient_residues,
)
from ..groups.laws import Residues
from ..integrals import PhasePolynomial, disk_integral, gaussian_disk_integral
from ..padic import rational_fractional_part
from .engine import cached_realization, element_residues

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)

Kernel = Callable[[RepLabel, Sequence[Fraction], Residues], complex]


def _e(value: Fraction, p: int) -> complex:
    return rational_fractional_part(value, p).to_complex()


def _gauss(a: Fraction, b: Fraction, p: int) -> complex:
    return gaussian_disk_integral(a, b, 0, p)


def _divisible(value: int, p: int, k: int) -> bool:
    return value % p ** k == 0


def _linear(f: Sequence[Fraction], x: Residues) -> Fraction:
    return sum((fi * xi for fi, xi in zip(f, x)), Fraction(0))


def _heisenberg(label: RepLabel, f: Sequence[Fraction], x: Residues) -> complex:
    p, d, k = label.prime, label.law.degree, label.index_set[0]
    if any(not _divisible(x[j], p, k) for j in range(d)):
        return 0j
    lam = f[2 * d]
    value = _e(_linear(f, x), p)
    for j in range(d):
        value *= _gauss(Fraction(0), lam * x[d + j], p)
    return value


def _engel_type(label: RepLabel, f: Sequence[Fraction], x: Residues) -> complex:
    p, k = label.prime, label.index_set[0]
    if not _divisible(x[0], p, k):
        return 0j
    return _e(_linear(f, x), p) * _gauss(HALF * f[3] * x[1], f[2] * x[1] + f[3] * x[2], p)


def _g52(label: RepLabel, f: Sequence[Fraction], x: Residues) -> complex:
    p, k = label.prime, label.index_set[0]
    if not _divisible(x[0], p, k):
        return 0j
    return _e(_linear(f, x), p) * _gauss(Fraction(0), f[3] * x[1] + f[4] * x[2], p)


def _g53_single(label: RepLabel, f: Sequence[Fraction], x: Residues) -> complex:
    p, k = label.prime, label.index_set[0]
    if not _divisible(x[0], p, k):
        return 0j
    return _e(_linear(f, x), p) * _gauss(Fraction(0), f[3] * x[1], p)


def _g53_double(label: RepLabel, f: Sequence[Fraction], x: Residues) -> complex:
    p, (e1, e2) = label.prime, label.index_set
    if not (_divisible(x[0], p, e1) and _divisible(x[1], p, e2)):
        return 0j
    first = _gauss(HALF * f[4] * x[1], f[3] * x[1] + f[4] * x[3], p)
    second = _gauss(Fraction(0), f[4] * x[2], p)
    return _e(_linear(f, x), p) * first * second


def _g54_supported(label: RepLabel, x: Residues) -> bool:
    return _divisible(cached_realization(label).shift(x)[0], label.prime, label.index_set[0])


def _g54_xi4(label: RepLabel, f: Sequence[Fraction], x: Residues) -> complex:
    if not _g54_supported(label, x):
        return 0j
    c = cached_realization(label).slope
    x2 = x[1]
    const = _linear(f, x) + f[2] * c * x2 * x2 * HALF + f[3] * c * c * x2 ** 3 * SIXTH
    a = HALF * f[3] * x2
    b = f[2] * x2 + f[3] * x[2] + HALF * f[4] * x2 * x2
    return _e(const, label.prime) * _gauss(a, b, label.prime)


def _g54_xi5(label: RepLabel, f: Sequence[Fraction], x: Residues) -> complex:
    if not _g54_supported(label, x):
        return 0j
    c = cached_realization(label).slope
    x1 = x[0]
    const = _linear(f, x) + f[2] * c * x1 * x1 * HALF - f[4] * c * c * x1 ** 3 * SIXTH
    a = -HALF * f[4] * x1
    b = -f[2] * x1 - HALF * f[3] * x1 * x1 + f[4] * x[2] - f[4] * x1 * x[1]
    return _e(const, label.prime) * _gauss(a, b, label.prime)


def _g55(label: RepLabel, f: Sequence[Fraction], x: Residues) -> complex:
    p, k = label.prime, label.index_set[0]
    if not _divisible(x[0], p, k):
        return 0j
    _, x2, x3, x4, _ = x
    poly = PhasePolynomial.univariate(p, [
        0,
        f[2] * x2 + f[3] * x3 + f[4] * x4,
        HALF * f[3] * x2 + HALF * f[4] * x3,
        SIXTH * f[4] * x2,
    ])
    return _e(_linear(f, x), p) * disk_integral(poly)


def _g56(label: RepLabel, f: Sequence[Fraction], x: Residues) -> complex:
    p, (e1, e2) = label.prime, label.index_set
    if not (_divisible(x[0], p, e1) and _divisible(x[1], p, e2)):
        return 0j
    if (f[4] * x[2]).denominator % p == 0:
        return 0j
    a = HALF * f[3] * x[1]
    b = f[2] * x[1] + f[3] * x[2] + f[4] * x[3]
    return _e(_linear(f, x), p) * _gauss(a, b, p)


def _kernel(label: RepLabel) -> Kernel:
    law, xi = label.law, label.xi
    if isinstance(law, HeisenbergLaw):
        return _heisenberg
    if isinstance(law, G52Law):
        return _g52
    if isinstance(law, G53Law):
        return _g53_double if not xi[4].is_trivial else _g53_single
    if isinstance(law, G54Law) and not xi[4].is_trivial:
        return _g54_xi5 if xi[4].level > xi[3].level else _g54_xi4
    if isinstance(law, G55Law) and not xi[4].is_trivial:
        return _g55
    if isinstance(law, G56Law) and not xi[4].is_trivial:
        return _g56
    return _engel_type


def character_closed_form_residues(label: RepLabel, x: Residues) -> complex:
    """χ_ξ(x) for residues reduced modulo p^L."""
    f = [c.as_fraction() for c in label.xi]
    if label.branch == CHARACTER_BRANCH or isinstance(label.law, AbelianLaw):
        return _e(_linear(f, x), label.prime)
    return label.dim * _kernel(label)(label, f, x)


def character_closed_form(label: RepLabel, x: GroupElement) -> complex:
    """
    Closed-form character χ_ξ(x).

    Raises:
        InsufficientPrecisionError: If x carries fewer than level(ξ) digits
    """
    return character_closed_form_residues(label, element_residues(label, x))


def class_function_l2_norm(
    law: GroupLaw,
    prime: int,
    m: int,
    fn: Callable[[Residues], complex],
    cap: int = DEFAULT_QUOTIENT_CAP,
) -> float:
    """
    ∫_G |fn|² as the exact average over G/G(p^m ℤ_p).

    Raises:
        ResourceCapError: If the quotient exceeds the cap
    """
    size = prime ** (law.dimension * m)
    if size > cap:
        raise ResourceCapError(f"{law.name} quotient at level {m} has {size} elements, cap is {cap}")
    total = 0.0
    for x in quotient_residues(law, prime, m):
        total += abs(fn(x)) ** 2
    return total / size


def character_l2_norm(label: RepLabel, cap: int = DEFAULT_QUOTIENT_CAP) -> float:
    """
    ∫_G |χ_ξ|², equal to 1 exactly when π_ξ is irreducible.

    Raises:
        ResourceCapError: If G/G(p^L ℤ_p) exceeds the cap
    """
    value = class_function_l2_norm(
        label.law,
        label.prime,
        label.level,
        lambda x: character_closed_form_residues(label, x),
        cap,
    )
    logger.debug(f"∫|χ|² for {label} = {value:.12g}")
    return value


def expected_l2_norm(label: RepLabel) -> Optional[int]:
    """
    ∫_G |χ_ξ|² predicted for a label.

    1 for irreducible labels. The |ξ₄| > |ξ₅| > 1 family of G^{5,3} is
    realized with dimension |ξ₄||ξ₅| and splits into p^{min(k₅, k₄−k₅)}
    summands; the G^{5,6} family with ‖(ξ₃, ξ₄)‖_p > |ξ₅|_p > 1 splits as
    well, by an amount with no closed form here (None).
    """
    law, xi = label.law, label.xi
    if isinstance(law, G53Law) and label.branch == "A2":
        k4, k5 = xi[3].level, xi[4].level
        return label.prime ** min(k5, k4 - k5)
    if isinstance(law, G56Law) and label.branch == "A2" and max(xi[2].level, xi[3].level) > xi[4].level:
        return None
    return 1
