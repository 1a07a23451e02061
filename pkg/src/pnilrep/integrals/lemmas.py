"""
L²-norm identities for the one-variable integrals that appear in the
character formulas.

Each identity states ∫_{ℤ_p^m} |∫_{ℤ_p} e(P_x(u)) du|² dx = ‖params‖_p^{-1}.
The left side is computed by nested exact sums: x runs over ℤ/p^kℤ with k
the level of the parameters and the inner integral is a Riemann sum at its
constancy index.
"""

import itertools
import logging
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from ..errors import ResourceCapError
from ..models import LemmaReport
from ..padic import DualPoint
from .gaussian import DEFAULT_ORACLE_CAP, riemann_oscillatory_oracle
from .polynomial import PhasePolynomial

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

PolynomialBuilder = Callable[[Sequence[Fraction], Sequence[int], int], PhasePolynomial]


def _lemaaux(params: Sequence[Fraction], x: Sequence[int], p: int) -> PhasePolynomial:
    xi3, xi4 = params
    x2, x3 = x
    return PhasePolynomial.quadratic(p, HALF * xi4 * x2, xi3 * x2 + xi4 * x3)


def _lemaaux_g53(params: Sequence[Fraction], x: Sequence[int], p: int) -> PhasePolynomial:
    xi4, xi5 = params
    x2, x4 = x
    return PhasePolynomial.quadratic(p, 0, xi4 * x2 + xi5 * x4)


def _lemaaux_g54(params: Sequence[Fraction], x: Sequence[int], p: int) -> PhasePolynomial:
    xi1, xi2, xi3 = params
    x1, x2 = x
    return PhasePolynomial.quadratic(p, x1 * xi1, x1 * xi2 + xi3 * x2)


def _lemaaux_g56(params: Sequence[Fraction], x: Sequence[int], p: int) -> PhasePolynomial:
    xi3, xi4, xi5 = params
    x2, x3, x4 = x
    return PhasePolynomial.quadratic(p, HALF * xi4 * x2, xi3 * x2 + xi4 * x3 + xi5 * x4)


# lemma id -> (parameter count, outer dimension, integrand)
AUX_LEMMAS: Dict[str, Tuple[int, int, PolynomialBuilder]] = {
    "lemaaux": (2, 2, _lemaaux),
    "lemaauxG53": (2, 2, _lemaaux_g53),
    "lemaauxG54": (3, 2, _lemaaux_g54),
    "lemaauxG56": (3, 3, _lemaaux_g56),
}


def aux_lemma_ids() -> List[str]:
    return list(AUX_LEMMAS)


def lemma_regime_ok(which: str, xi: DualPoint) -> bool:
    """
    Whether the closed form is expected to hold for these parameters.

    The G^{5,4} identity needs |ξ₃|_p ≥ ‖(ξ₁, ξ₂)‖_p: for ξ = (1/p, 0, 0) the
    left side is (2p − 1)/p² instead of 1/p.
    """
    if which == "lemaauxG54":
        return xi[2].level >= max(xi[0].level, xi[1].level)
    return True


def verify_aux_lemma(which: str, xi: DualPoint, cap: int = DEFAULT_ORACLE_CAP) -> LemmaReport:
    """
    Check one auxiliary L² identity.

    Args:
        which: One of lemaaux, lemaauxG53, lemaauxG54, lemaauxG56
        xi: The lemma's parameters as canonical dual elements
        cap: Maximum number of outer points times inner evaluations

    Returns:
        LemmaReport with lhs, rhs = ‖xi‖_p^{-1} and the regime flag

    Raises:
        ValueError: For an unknown lemma or a wrong parameter count
        ResourceCapError: If the nested sums exceed the cap
    """
    if which not in AUX_LEMMAS:
        raise ValueError(f"Unknown lemma {which!r}; expected one of {', '.join(AUX_LEMMAS)}")
    count, outer, builder = AUX_LEMMAS[which]
    if xi.dimension != count:
        raise ValueError(f"{which} takes {count} parameters, got {xi.dimension}")
    p, k = xi.prime, xi.level
    work = p ** (k * outer) * p ** max(k, 1)
    if work > cap:
        raise ResourceCapError(f"{which} at level {k} needs {work} evaluations, cap is {cap}")
    params = [c.as_fraction() for c in xi]
    total = 0.0
    for x in itertools.product(range(p ** k), repeat=outer):
        poly = builder(params, x, p)
        inner = riemann_oscillatory_oracle(
            poly, resolution=poly.constancy_index(), cap=cap, check_doubling=False
        )
        total += abs(inner) ** 2
    lhs = total / p ** (k * outer)
    rhs = 1.0 / xi.norm
    logger.debug(f"{which}({xi}): lhs={lhs:.12g} rhs={rhs:.12g}")
    return LemmaReport(
        lemma=which,
        xi=str(xi),
        lhs=lhs,
        rhs=rhs,
        regime_ok=lemma_regime_ok(which, xi),
    )

