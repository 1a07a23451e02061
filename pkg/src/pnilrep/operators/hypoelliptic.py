"""
Global hypoellipticity margin of the Vladimirov sub-Laplacian.
"""

import logging
from typing import Optional, Sequence

from ..duals import DEFAULT_DUAL_CAP, enumerate_dual_ball
from ..groups import GroupLaw
from ..models.reports import HypoellipticReport
from ..padic import DualPoint
from .sublaplacian import generator_norm, sublaplacian_symbol
from .vt import check_alpha, p_power

logger = logging.getLogger(__name__)


def japanese_bracket(xi: DualPoint, alpha: float) -> float:
    """⟨ξ⟩ = (1 + ‖ξ‖_p^α)^{1/α}."""
    alpha = check_alpha(alpha)
    return (1.0 + p_power(xi.prime, xi.level * alpha)) ** (1.0 / alpha)


def hypoellipticity_margin(
    law: GroupLaw,
    prime: int,
    alpha: float,
    n: int,
    directions: Optional[Sequence[Sequence[int]]] = None,
    cap: int = DEFAULT_DUAL_CAP,
) -> HypoellipticReport:
    """
    c* = min over nontrivial ξ ∈ B(n) of ‖σ_L(ξ)‖_inf / ‖(ξ₁, …, ξ_κ)‖_p^α.

    Args:
        law: Group law
        prime: The prime p
        alpha: Operator order
        n: Ball level, at least 1
        directions: Sub-Laplacian directions (default: e_1, …, e_κ)
        cap: Resource cap of the dual ball

    Returns:
        Report with one entry per nontrivial label and the minimizing label
    """
    alpha = check_alpha(alpha)
    if n < 1:
        raise ValueError(f"Hypoellipticity needs a ball of level >= 1, got {n}")
    report = HypoellipticReport(law.name, prime, n, alpha)
    for label in enumerate_dual_ball(law, prime, n, cap):
        if label.is_trivial:
            continue
        inf_norm = sublaplacian_symbol(law, directions, alpha, label).inf_norm()
        norm = generator_norm(label)
        ratio = inf_norm / p_power(prime, label.generator_level * alpha)
        report.entries.append((str(label.xi), inf_norm, norm, ratio))
        if ratio < report.c_star:
            report.c_star, report.argmin = ratio, str(label.xi)
    logger.debug(f"{law.name} p={prime} n={n} α={alpha}: c* = {report.c_star:.6g} at {report.argmin}")
    return report
