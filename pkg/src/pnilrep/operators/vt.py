"""
Vladimirov–Taibleson operators evaluated as exact sphere sums.

For f in 𝒟_m(G) the hypersingular integral

    D^α f(x) = C_{α,d} ∫_G (f(x ⋆ y⁻¹) − f(x)) ‖y‖_p^{−(α+d)} dy

only sees y modulo G(p^m ℤ_p): the spheres ‖y‖_p = p^{−k} with k ≥ m
contribute nothing, and the remaining ones are finite coset sums.
"""

import itertools
import logging
import math
from fractions import Fraction
from typing import Callable, Sequence, Union

from ..errors import PrecisionMismatchError, ResourceCapError
from ..groups import DEFAULT_QUOTIENT_CAP, GroupElement, GroupLaw, quotient_residues
from ..groups.laws import Residues
from ..padic import check_prime, int_valuation
from ..reps import TestFunction

logger = logging.getLogger(__name__)

DOUBLING_TOLERANCE = 1e-12


def p_power(prime: int, exponent: float) -> float:
    """p^exponent, exact for integral exponents."""
    if float(exponent).is_integer():
        e = int(exponent)
        return float(prime ** e) if e >= 0 else float(Fraction(1, prime ** -e))
    return math.exp(exponent * math.log(prime))


def vt_constant(prime: int, alpha: float, d: int) -> float:
    """C_{α,d} = (1 − p^α)/(1 − p^{−(α+d)})."""
    return (1.0 - p_power(prime, alpha)) / (1.0 - p_power(prime, -(alpha + d)))


def vt_offset(prime: int, alpha: float, d: int) -> float:
    """(1 − p^{−d})/(1 − p^{−(α+d)}), subtracted from ‖ξ‖^α in every symbol."""
    return (1.0 - p_power(prime, -d)) / (1.0 - p_power(prime, -(alpha + d)))


def check_alpha(alpha: float) -> float:
    if not alpha > 0:
        raise ValueError(f"Operator order must be positive, got {alpha}")
    return float(alpha)


def frequency_level(omega: Union[Fraction, int], prime: int) -> int:
    """k with |ω|_p = p^k for ω read modulo ℤ_p (0 when ω ∈ ℤ_p)."""
    return int_valuation(Fraction(omega).denominator, prime) or 0


def frequency_weight(omega: Union[Fraction, int], prime: int, alpha: float) -> float:
    """
    Symbol of the one-variable VT operator on t ↦ e^{2πi{ωt}_p}.

    |ω|_p^α − (1 − p^{−1})/(1 − p^{−(α+1)}) when |ω|_p > 1, and 0 otherwise.
    """
    k = frequency_level(omega, prime)
    if k == 0:
        return 0.0
    return p_power(prime, k * alpha) - vt_offset(prime, alpha, 1)


def _vector_valuation(y: Sequence[int], prime: int, cap: int) -> int:
    values = [int_valuation(c, prime) for c in y if c]
    return min((v for v in values if v is not None), default=cap)


def integrate_locally_constant(
    fn: Callable[[Residues], complex],
    prime: int,
    dimension: int,
    r: int,
    cap: int = DEFAULT_QUOTIENT_CAP,
    check_doubling: bool = False,
) -> complex:
    """
    ∫_{ℤ_p^d} fn as the exact average over (ℤ/p^r ℤ)^d.

    Args:
        fn: Function of a residue tuple, constant on cosets of p^r ℤ_p^d
        prime: The prime p
        dimension: Number of variables d
        r: Resolution, at least the constancy index of fn
        cap: Maximum number of evaluations
        check_doubling: Recompute one digit finer and log a mismatch

    Raises:
        ResourceCapError: If p^{rd} exceeds the cap
    """
    check_prime(prime)
    if r < 0:
        raise ValueError(f"Resolution must be non-negative, got {r}")
    count = prime ** (r * dimension)
    if count > cap:
        raise ResourceCapError(f"Integration needs {count} evaluations, cap is {cap}")
    total = 0j
    for point in itertools.product(range(prime ** r), repeat=dimension):
        total += fn(point)
    value = total / count
    if check_doubling and prime ** ((r + 1) * dimension) <= cap:
        finer = integrate_locally_constant(fn, prime, dimension, r + 1, cap)
        if abs(finer - value) > DOUBLING_TOLERANCE:
            logger.warning(f"Integral moved by {abs(finer - value):.3g} at resolution {r + 1}")
    return value


def _check_function(law: GroupLaw, f: TestFunction, x: GroupElement) -> Residues:
    if f.law != law or x.law != law:
        raise ValueError(f"Function and point must live on {law.name}")
    if x.prime != f.prime:
        raise ValueError(f"Point over {x.prime} passed to a function over {f.prime}")
    if x.precision < f.m:
        raise PrecisionMismatchError(f"Function has index {f.m}, point carries {x.precision} digits")
    modulus = f.prime ** f.m
    return tuple(c % modulus for c in x.residues)


def vt_apply(
    law: GroupLaw,
    alpha: float,
    f: TestFunction,
    x: GroupElement,
    cap: int = DEFAULT_QUOTIENT_CAP,
) -> complex:
    """
    D^α f(x) by summing the spheres ‖y‖_p = p^{−k}, k < m.

    Raises:
        ResourceCapError: If G/G(p^m ℤ_p) exceeds the cap
    """
    alpha = check_alpha(alpha)
    xr = _check_function(law, f, x)
    m, p, d = f.m, f.prime, law.dimension
    if m == 0:
        return 0j
    size = p ** (d * m)
    if size > cap:
        raise ResourceCapError(f"{law.name} quotient at level {m} has {size} elements, cap is {cap}")
    modulus = p ** m
    base = f.at_residues(xr)
    weights = [p_power(p, k * (alpha + d)) for k in range(m)]
    total = 0j
    for y in quotient_residues(law, p, m):
        k = _vector_valuation(y, p, m)
        if k >= m:
            continue
        shifted = law.star_residues(xr, law.inverse_residues(y, modulus), modulus)
        total += weights[k] * (f.at_residues(shifted) - base)
    value = vt_constant(p, alpha, d) * total / size
    logger.debug(f"D^{alpha} on {law.name} index {m}: {value:.12g}")
    return value


def directional_vt_apply(
    law: GroupLaw,
    w: Sequence[int],
    alpha: float,
    f: TestFunction,
    x: GroupElement,
) -> complex:
    """
    ∂^α_w f(x) = C_{α,1} ∫_{ℤ_p} (f(x ⋆ γ_w(t)⁻¹) − f(x)) |t|_p^{−(α+1)} dt.

    Raises:
        NonGeneratorDirectionError: If w leaves the generating stratum
    """
    alpha = check_alpha(alpha)
    xr = _check_function(law, f, x)
    m, p = f.m, f.prime
    modulus = p ** m
    law.direction_residues(w, max(modulus, p))
    if m == 0:
        return 0j
    base = f.at_residues(xr)
    weights = [p_power(p, k * (alpha + 1)) for k in range(m)]
    total = 0j
    for t in range(1, modulus):
        k = int_valuation(t, p)
        step = law.one_param_residues(w, -t, modulus)
        shifted = law.star_residues(xr, step, modulus)
        total += weights[k] * (f.at_residues(shifted) - base)
    return vt_constant(p, alpha, 1) * total / modulus
