"""
The p-adic Gaussian integral on a disk and its Riemann-sum oracle.

∫_{p^γℤ_p} e^{2πi{au² + bu}_p} du equals p^{-γ}·1[|b|_p ≤ p^γ] when
|a|_p ≤ p^{2γ}, and Λ(a, b)·1[b/a ∈ p^γℤ_p] otherwise, with
Λ(a, b) = λ_p(a)|a|_p^{-1/2} e^{2πi{-b²/4a}_p}.
"""

import itertools
import logging
import math
from fractions import Fraction
from typing import Optional

import numpy as np

from ..errors import ResourceCapError
from ..padic import check_prime, lambda_p, rational_fractional_part, rational_valuation
from .polynomial import Coefficient, PhasePolynomial, as_fraction

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 10 ** 6
DOUBLING_TOLERANCE = 1e-12


def p_norm(value: Fraction, p: int) -> float:
    """|value|_p as a float (0 for 0)."""
    if value == 0:
        return 0.0
    return float(p) ** (-rational_valuation(value, p))


def gaussian_lambda(a: Coefficient, b: Coefficient, prime: int) -> complex:
    """
    Λ(a, b) = λ_p(a)|a|_p^{-1/2} e^{2πi{-b²/4a}_p}.

    Raises:
        ZeroArgumentError: If a is zero
    """
    a, b = as_fraction(a), as_fraction(b)
    factor = lambda_p(a, prime)
    modulus = p_norm(a, prime) ** -0.5
    phase = rational_fractional_part(-b * b / (4 * a), prime)
    return factor * modulus * phase.to_complex()


def gaussian_disk_integral(a: Coefficient, b: Coefficient, gamma: int, prime: int) -> complex:
    """
    Closed form of ∫_{p^γℤ_p} e^{2πi{au² + bu}_p} du.

    Args:
        a: Quadratic coefficient (a p-adic rational)
        b: Linear coefficient
        gamma: Disk exponent γ (any integer)
        prime: Odd prime p

    Returns:
        The exact value as a complex number
    """
    check_prime(prime)
    a, b = as_fraction(a), as_fraction(b)
    disk = float(prime) ** -gamma
    if a == 0 or rational_valuation(a, prime) >= -2 * gamma:
        if b == 0 or rational_valuation(b, prime) >= -gamma:
            return complex(disk, 0.0)
        return 0j
    if b != 0 and rational_valuation(b / a, prime) < gamma:
        return 0j
    return gaussian_lambda(a, b, prime)


def _oracle_sum(poly: PhasePolynomial, resolution: int, cap: int) -> complex:
    p = poly.prime
    count = p ** (resolution * poly.variables)
    if count > cap:
        raise ResourceCapError(f"Oracle needs {count} evaluations, cap is {cap}")
    level = max(poly.phase_level(), 1)
    modulus = p ** level
    coeffs = poly.numerators(level)
    numers = []
    for point in itertools.product(range(p ** resolution), repeat=poly.variables):
        total = 0
        for monomial, c in coeffs:
            term = c
            for u, e in zip(point, monomial):
                if e:
                    term *= u ** e
            total += term
        numers.append(total % modulus)
    phases = np.asarray(numers, dtype=np.float64) / modulus
    return complex(np.exp(2j * np.pi * phases).mean())


def riemann_oscillatory_oracle(
    poly: PhasePolynomial,
    gamma: int = 0,
    resolution: Optional[int] = None,
    cap: int = DEFAULT_ORACLE_CAP,
    check_doubling: bool = True,
) -> complex:
    """
    Brute-force ∫_{(p^γℤ_p)^r} e^{2πi P(u)} du by a Riemann sum.

    The integral equals p^{-γr} times the average of e(P(p^γ v)) over
    v ∈ (ℤ/p^{res}ℤ)^r, which is exact once res reaches the constancy index.

    Args:
        poly: Phase polynomial in r variables
        gamma: Disk exponent
        resolution: Digits per variable (default: constancy index + 1)
        cap: Maximum number of evaluations
        check_doubling: Recompute one digit finer and log a mismatch

    Raises:
        ResourceCapError: If the sum exceeds the cap
    """
    scaled = poly.rescale(gamma) if gamma else poly
    index = scaled.constancy_index()
    if resolution is None:
        resolution = index + 1
    elif resolution < index:
        logger.debug(f"Resolution {resolution} below constancy index {index} for {poly}")
    weight = float(poly.prime) ** (-gamma * scaled.variables)
    value = weight * _oracle_sum(scaled, resolution, cap)
    if check_doubling and poly.prime ** ((resolution + 1) * scaled.variables) <= cap:
        finer = weight * _oracle_sum(scaled, resolution + 1, cap)
        if abs(finer - value) > DOUBLING_TOLERANCE * max(1.0, abs(weight)):
            logger.warning(f"Oracle for {poly} moved by {abs(finer - value):.3g} at resolution {resolution + 1}")
    return value


def disk_integral(poly: PhasePolynomial, cap: int = DEFAULT_ORACLE_CAP) -> complex:
    """
    ∫_{ℤ_p} e(P(u)) du for a univariate polynomial.

    Degree ≤ 2 goes through the closed Gaussian form; cubic phases are
    summed at their constancy index.
    """
    if poly.variables != 1:
        raise ValueError("disk_integral handles one variable")
    if poly.degree <= 2:
        const = rational_fractional_part(poly.coefficient((0,)), poly.prime).to_complex()
        return const * gaussian_disk_integral(poly.coefficient((2,)), poly.coefficient((1,)), 0, poly.prime)
    return _oracle_sum(poly, max(poly.constancy_index(), 0), cap)


def gaussian_modulus(a: Coefficient, prime: int) -> float:
    """|a|_p^{-1/2}, the modulus |Λ(a, b)| must equal."""
    return 1.0 / math.sqrt(p_norm(as_fraction(a), prime))
