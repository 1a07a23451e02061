"""
Report records produced by the verification operations.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

logger = logging.getLogger(__name__)

TOLERANCE = 1e-9


@dataclass
class PeterWeylReport:
    """
    Outcome of the Peter–Weyl counting identity Σ d_ξ² = p^{dn}.

    Attributes:
        law: Law id
        prime: The prime p
        level: Ball level n
        label_count: Number of labels in B(n)
        sum_d_squared: Σ d_ξ² over B(n)
        expected: p^{dn}
        branch_counts: Labels per branch tag
    """
    law: str
    prime: int
    level: int
    label_count: int
    sum_d_squared: int
    expected: int
    branch_counts: Dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.sum_d_squared == self.expected


@dataclass
class PropertyResult:
    """
    One checked property of a verification suite.

    Attributes:
        name: Property name, e.g. "homomorphism"
        cases: Number of checked instances
        failures: Number of failing instances
        max_residual: Largest observed residual (0.0 for exact checks)
        details: Descriptions of the first failures
        skipped: Draws that could not be evaluated within a resource cap
    """
    name: str
    cases: int = 0
    failures: int = 0
    max_residual: float = 0.0
    details: List[str] = field(default_factory=list)
    skipped: int = 0

    max_details = 5

    @property
    def passed(self) -> bool:
        """No failures, and at least one case unless every draw was skipped."""
        return self.failures == 0 and not (self.skipped and not self.cases)

    def record(self, ok: bool, residual: float = 0.0, detail: str = "") -> None:
        """Count one case."""
        self.cases += 1
        if not math.isnan(residual):
            self.max_residual = max(self.max_residual, residual)
        if not ok:
            self.failures += 1
            if detail and len(self.details) < self.max_details:
                self.details.append(detail)

    def skip(self, detail: str = "") -> None:
        """Count a draw that was not evaluated."""
        self.skipped += 1
        if detail:
            logger.debug(f"{self.name}: skipped {detail}")

    def merge(self, other: "PropertyResult") -> None:
        """Fold the counts of another result for the same property."""
        self.cases += other.cases
        self.failures += other.failures
        self.skipped += other.skipped
        self.max_residual = max(self.max_residual, other.max_residual)
        room = self.max_details - len(self.details)
        if room > 0:
            self.details.extend(other.details[:room])


@dataclass
class SuiteReport:
    """
    Aggregate of one ``verify`` run.

    Attributes:
        suite: Suite name
        law: Law id
        prime: The prime p
        level: Ball level n
        alpha: Operator order α
        seed: Seed of the property sampler
        properties: Checked properties in run order
        provenance: Active readings of the published indexing sets
        notes: Suite-specific results such as the hypoellipticity margin
    """
    suite: str
    law: str
    prime: int
    level: int
    alpha: float
    seed: int
    properties: List[PropertyResult] = field(default_factory=list)
    provenance: Dict[str, str] = field(default_factory=dict)
    notes: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def add(self, result: PropertyResult) -> None:
        """Add a property result, merging with an existing one of the same name."""
        for existing in self.properties:
            if existing.name == result.name:
                existing.merge(result)
                return
        self.properties.append(result)


@dataclass
class SpectrumRow:
    """
    One eigenvalue row of a spectrum table.

    Attributes:
        label: The label's dual point as text
        branch: Branch tag of the label
        tau: Frequency tuple attached to the eigenvalue, as text
        h_prime: Column index h′ of the invariant subspace, as text
        closed_form: Closed-form eigenvalue (None when only numeric)
        numeric: Eigenvalue of the computed symbol
        bound_ok: Result of the lower-bound inequality, when checked
    """
    label: str
    branch: str
    tau: str
    h_prime: str
    closed_form: Optional[float]
    numeric: float
    bound_ok: Optional[bool] = None

    @property
    def diff(self) -> Optional[float]:
        if self.closed_form is None:
            return None
        return abs(self.closed_form - self.numeric)


@dataclass
class SpectrumReport:
    """
    Numeric against closed-form spectrum of the sub-Laplacian symbol at a label.

    Attributes:
        label: Label text
        branch: Branch tag
        dim: d_ξ
        regime: Comparison regime (a SpectralRegime value)
        eigenvalues_numeric: Sorted eigenvalues of the symbol
        eigenvalues_closed_form: Sorted closed-form eigenvalues
        rows: The table rows
        hermitian_residual: ‖σ − σ*‖_F
    """
    label: str
    branch: str
    dim: int
    regime: str
    eigenvalues_numeric: List[float]
    eigenvalues_closed_form: List[float]
    rows: List[SpectrumRow] = field(default_factory=list)
    hermitian_residual: float = 0.0

    @property
    def max_abs_diff(self) -> float:
        if not self.eigenvalues_closed_form:
            return 0.0
        return max(
            (abs(a - b) for a, b in zip(self.eigenvalues_numeric, self.eigenvalues_closed_form)),
            default=0.0,
        )

    @property
    def trace_diff(self) -> float:
        if not self.eigenvalues_closed_form:
            return 0.0
        return abs(sum(self.eigenvalues_numeric) - sum(self.eigenvalues_closed_form))

    @property
    def passed(self) -> bool:
        if self.hermitian_residual >= TOLERANCE:
            return False
        if self.regime == "numeric":
            return all(row.bound_ok is not False for row in self.rows)
        if self.regime == "schrodinger":
            return self.trace_diff < TOLERANCE * max(1, self.dim)
        return self.max_abs_diff < TOLERANCE


@dataclass
class LemmaReport:
    """
    Auxiliary lemma check: nested Riemann sums against ‖·‖_p^{-1}.

    Attributes:
        lemma: Lemma id
        xi: Parameters as text
        lhs: Computed integral
        rhs: Closed form
        regime_ok: Whether the parameters are in the range where the closed
            form is claimed
    """
    lemma: str
    xi: str
    lhs: float
    rhs: float
    regime_ok: bool = True

    @property
    def abs_diff(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def passed(self) -> bool:
        return self.abs_diff < TOLERANCE


@dataclass
class GaussianReport:
    """
    Closed-form Gaussian disk integral with its optional Riemann-sum oracle.
    """
    a: str
    b: str
    gamma: int
    prime: int
    closed_form: complex
    oracle: Optional[complex] = None
    resolution: Optional[int] = None

    @property
    def abs_diff(self) -> Optional[float]:
        if self.oracle is None:
            return None
        return abs(self.closed_form - self.oracle)

    @property
    def passed(self) -> bool:
        diff = self.abs_diff
        return diff is None or diff < TOLERANCE


@dataclass
class HypoellipticReport:
    """
    Margin c* = min ‖σ(ξ)‖_inf / ‖(ξ₁, …, ξ_κ)‖_p^α over the nontrivial labels of a ball.

    Attributes:
        law: Law id
        prime: The prime p
        level: Ball level n
        alpha: Operator order α
        entries: (label, ‖σ(ξ)‖_inf, ‖(ξ₁, …, ξ_κ)‖_p, ratio) per nontrivial label
        c_star: Minimal ratio (inf when the ball has no nontrivial label)
        argmin: Label attaining c*
    """
    law: str
    prime: int
    level: int
    alpha: float
    entries: List[Tuple[str, float, int, float]] = field(default_factory=list)
    c_star: float = math.inf
    argmin: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.c_star > TOLERANCE


@dataclass
class LabelRow:
    """One label of a dual ball as listed by ``pnilrep dual``."""
    xi: str
    branch: str
    dim: int
    level: int


@dataclass
class DualReport:
    """
    Label table of B(n) with its counting verdict.

    Attributes:
        peter_weyl: The counting check
        labels: Labels in canonical order
        provenance: Active readings of the published indexing sets
    """
    peter_weyl: PeterWeylReport
    labels: List[LabelRow] = field(default_factory=list)
    provenance: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.peter_weyl.passed


@dataclass
class SpectrumTable:
    """
    Spectrum reports of every label of a ball.

    Attributes:
        law: Law id
        prime: The prime p
        level: Ball level n
        alpha: Operator order α
        reports: One report per label, in label order
        bound_constant: Constant used by the lower-bound column, if any
        provenance: Active readings of the published indexing sets
    """
    law: str
    prime: int
    level: int
    alpha: float
    reports: List[SpectrumReport] = field(default_factory=list)
    bound_constant: Optional[float] = None
    provenance: Dict[str, str] = field(default_factory=dict)

    @property
    def rows(self) -> List[SpectrumRow]:
        return [row for report in self.reports for row in report.rows]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


@dataclass
class PlancherelReport:
    """
    ‖f‖²_{L²} against Σ d_ξ ‖f̂(ξ)‖²_HS for a random f ∈ 𝒟_n, with the
    synthesis round trip.
    """
    law: str
    prime: int
    level: int
    seed: int
    label_count: int
    l2_norm_squared: float
    plancherel_sum: float
    roundtrip_residual: float

    @property
    def abs_diff(self) -> float:
        return abs(self.l2_norm_squared - self.plancherel_sum)

    @property
    def passed(self) -> bool:
        scale = max(1.0, self.l2_norm_squared)
        return self.abs_diff < TOLERANCE * scale and self.roundtrip_residual < TOLERANCE * scale


@dataclass
class RepReport:
    """
    One representation matrix π_ξ(x).

    Attributes:
        label: Label text
        branch: Branch tag
        element: Group element text
        matrix: Rows of complex entries
        unitarity_residual: ‖ππ* − I‖_F
    """
    label: str
    branch: str
    element: str
    matrix: List[List[complex]]
    unitarity_residual: float

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def passed(self) -> bool:
        return self.unitarity_residual < TOLERANCE
