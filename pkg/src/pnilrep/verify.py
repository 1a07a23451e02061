"""
Property suites behind ``pnilrep verify``.

Every suite draws from numpy Generators spawned off the run seed, one per
label, so the report does not depend on how the worker processes schedule
work. Per-label checks run in a process pool when more than one worker is
configured; each worker keeps its own realization and monomial-table caches.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

import numpy as np

from .config import RunConfig
from .duals import RepLabel, enumerate_dual_ball, provenance_notes
from .errors import ResourceCapError
from .groups import G56Law, GroupElement, GroupLaw
from .groups.laws import Residues
from .integrals import (
    PhasePolynomial,
    aux_lemma_ids,
    gaussian_disk_integral,
    gaussian_lambda,
    gaussian_modulus,
    lemma_regime_ok,
    p_norm,
    riemann_oscillatory_oracle,
    verify_aux_lemma,
)
from .integrals.lemmas import AUX_LEMMAS
from .models import SpectralRegime, Suite
from .models.reports import TOLERANCE, PropertyResult, SuiteReport
from .operators import (
    block_residual,
    canonical_directions,
    directional_vt_apply,
    eigenfunction,
    hypoellipticity_margin,
    numeric_eigenfunctions,
    p_power,
    spectral_decomposition,
    spectrum_report,
    sublaplacian_symbol,
    symbol_blocks,
    vt_apply,
    vt_offset,
)
from .padic import DualElem, DualPoint
from .reps import (
    TestFunction,
    character_closed_form_residues,
    character_l2_norm,
    character_trace_residues,
    expected_l2_norm,
    fourier_series,
    monomial_residues,
    monomial_table,
    plancherel_sum,
    rep_matrix_residues,
    schur_inner_product,
    synthesize,
)

logger = logging.getLogger(__name__)

CHARACTER_CAP = 10 ** 5
SCHUR_CAP = 10 ** 5
FUNCTION_CAP = 20000
EIGENFUNCTIONS_PER_LABEL = 3
EIGEN_POINTS = 20

LabelCheck = Callable[[RunConfig, RepLabel, np.random.Generator], List[PropertyResult]]


def random_residues(law: GroupLaw, prime: int, level: int, rng: np.random.Generator) -> Residues:
    modulus = prime ** level
    return tuple(int(v) for v in rng.integers(0, modulus, size=law.dimension))


def random_index(label: RepLabel, rng: np.random.Generator) -> Tuple[int, ...]:
    return tuple(int(rng.integers(0, label.prime ** e)) for e in label.index_set)


def random_dual_elem(prime: int, max_level: int, rng: np.random.Generator) -> DualElem:
    k = int(rng.integers(0, max_level + 1))
    if k == 0:
        return DualElem.trivial(prime)
    numer = int(rng.integers(0, prime ** (k - 1))) * prime + int(rng.integers(1, prime))
    return DualElem.of(prime, numer, k)


def random_rational(prime: int, rng: np.random.Generator, allow_zero: bool = True) -> Fraction:
    """A p-adic rational u·p^e with e in [−3, 2] and u a unit below p²."""
    if allow_zero and rng.random() < 0.15:
        return Fraction(0)
    unit = int(rng.integers(1, prime * prime))
    while unit % prime == 0:
        unit = int(rng.integers(1, prime * prime))
    e = int(rng.integers(-3, 3))
    return Fraction(unit) * Fraction(prime) ** e


def sample_labels(config: RunConfig, rng: np.random.Generator) -> List[RepLabel]:
    """All of B(n) for n ≤ 1; otherwise config.labels labels drawn without replacement."""
    labels = enumerate_dual_ball(config.law, config.prime, config.level, config.dual_cap)
    if config.level <= 1 or len(labels) <= config.labels:
        return labels
    chosen = sorted(int(i) for i in rng.choice(len(labels), size=config.labels, replace=False))
    return [labels[i] for i in chosen]


def _is_identity(label: RepLabel, x: Residues) -> bool:
    mono = monomial_residues(label, x)
    return mono.columns == tuple(range(label.dim)) and all(ph.is_zero for ph in mono.phases)


def check_reps(config: RunConfig, label: RepLabel, rng: np.random.Generator) -> List[PropertyResult]:
    """Homomorphism, unitarity, exact level and Schur orthogonality."""
    law, p, level = label.law, label.prime, label.level
    modulus = p ** level
    hom, uni = PropertyResult("homomorphism"), PropertyResult("unitarity")
    kernel, schur = PropertyResult("kernel"), PropertyResult("schur_orthogonality")
    eye = np.eye(label.dim, dtype=np.complex128)
    for _ in range(config.samples):
        x, y = random_residues(law, p, level, rng), random_residues(law, p, level, rng)
        a, b = rep_matrix_residues(label, x), rep_matrix_residues(label, y)
        c = rep_matrix_residues(label, law.star_residues(x, y, modulus))
        residual = float(np.linalg.norm(c - a @ b))
        hom.record(residual < TOLERANCE, residual, f"{label} at {x}, {y}")
        residual = float(np.linalg.norm(a @ a.conj().T - eye))
        uni.record(residual < TOLERANCE, residual, f"{label} at {x}")
    if not label.is_trivial:
        step = p ** (level - 1)
        moved = any(
            not _is_identity(label, tuple(step if j == i else 0 for j in range(law.dimension)))
            for i in range(law.dimension)
        )
        kernel.record(moved, detail=f"{label} is trivial on G(p^{level - 1})")
    if expected_l2_norm(label) == 1 and p ** (law.dimension * level) <= SCHUR_CAP:
        d = label.dim
        for trial in range(min(config.samples, 3)):
            h, hp = random_index(label, rng), random_index(label, rng)
            k, kp = (h, hp) if trial == 0 else (random_index(label, rng), random_index(label, rng))
            value = schur_inner_product(label, h + hp, k + kp, cap=config.quotient_cap)
            expected = 1.0 / d if (h, hp) == (k, kp) else 0.0
            residual = abs(value - expected)
            schur.record(residual < TOLERANCE, residual, f"{label} at {h},{hp} / {k},{kp}")
    return [hom, uni, kernel, schur]


def check_characters(config: RunConfig, label: RepLabel, rng: np.random.Generator) -> List[PropertyResult]:
    """Closed-form characters against traces, and ∫|χ|² against the prediction."""
    law, p, level = label.law, label.prime, label.level
    trace = PropertyResult("character_trace")
    irreducible, split = PropertyResult("irreducibility"), PropertyResult("reducible_families")
    for _ in range(config.samples):
        x = random_residues(law, p, level, rng)
        residual = abs(character_closed_form_residues(label, x) - character_trace_residues(label, x))
        trace.record(residual < TOLERANCE, residual, f"{label} at {x}")
    if p ** (law.dimension * level) <= CHARACTER_CAP:
        norm = character_l2_norm(label, config.quotient_cap)
        expected = expected_l2_norm(label)
        if expected == 1:
            residual = abs(norm - 1.0)
            irreducible.record(residual < TOLERANCE, residual, f"{label}: ∫|χ|² = {norm:.12g}")
        elif expected is None:
            split.record(norm >= 1.0 - TOLERANCE, 0.0, f"{label}: ∫|χ|² = {norm:.12g}")
        else:
            residual = abs(norm - expected)
            split.record(residual < TOLERANCE * expected, residual, f"{label}: ∫|χ|² = {norm:.12g}")
    return [trace, irreducible] + ([split] if split.cases else [])


def _coefficient_function(label: RepLabel, row: int, col: int) -> TestFunction:
    values = monomial_table(label).coefficient(row, col)
    return TestFunction(label.law, label.prime, label.level, values)


def _point(label: RepLabel, x: Residues) -> GroupElement:
    return GroupElement.from_residues(label.law, label.prime, max(label.level, 1), x)


def check_spectrum(config: RunConfig, label: RepLabel, rng: np.random.Generator) -> List[PropertyResult]:
    """Symbol against closed form, block structure, eigenfunctions and the D^α eigen-relation."""
    law, p, level, alpha = label.law, label.prime, label.level, config.alpha
    hermitian, agreement = PropertyResult("hermitian_symbol"), PropertyResult("spectrum_agreement")
    blocks, eigen = PropertyResult("block_diagonal"), PropertyResult("eigen_relation")
    ortho, vt = PropertyResult("orthonormality"), PropertyResult("vt_eigen_relation")
    directions = canonical_directions(law)
    symbol = sublaplacian_symbol(law, directions, alpha, label)
    residual = symbol.hermitian_residual()
    hermitian.record(residual < TOLERANCE, residual, str(label))
    report = spectrum_report(law, directions, alpha, label)
    residual = report.trace_diff if report.regime == SpectralRegime.SCHRODINGER.value else report.max_abs_diff
    agreement.record(report.passed, residual, f"{label} [{report.regime}]")
    residual = block_residual(symbol, symbol_blocks(label, directions))
    blocks.record(residual < TOLERANCE, residual, str(label))
    if label.is_trivial or p ** (law.dimension * level) > FUNCTION_CAP:
        return [hermitian, agreement, blocks, eigen, ortho, vt]
    first = label.indices()[0]
    if isinstance(law, G56Law) or report.regime == SpectralRegime.SCHRODINGER.value:
        functions = numeric_eigenfunctions(symbol, first)[:EIGENFUNCTIONS_PER_LABEL]
    else:
        decomposition = spectral_decomposition(label, directions, alpha)
        functions = []
        for entry in decomposition.entries[:EIGENFUNCTIONS_PER_LABEL]:
            tau = entry.frequencies[decomposition.lead] if decomposition.lead is not None else None
            functions.append(eigenfunction(label, directions, alpha, entry.h_prime, tau))
    for ef in functions:
        tf = ef.to_test_function()
        for _ in range(min(config.samples, EIGEN_POINTS)):
            x = random_residues(law, p, level, rng)
            xe = _point(label, x)
            lhs = sum(directional_vt_apply(law, w, alpha, tf, xe) for w in directions)
            residual = abs(lhs - ef.eigenvalue * tf.at_residues(x))
            eigen.record(residual < TOLERANCE * max(1.0, abs(ef.eigenvalue)), residual, f"{label} at {x}")
    if expected_l2_norm(label) != 1:
        return [hermitian, agreement, blocks, eigen, ortho, vt]
    basis = [ef.to_test_function().values for ef in numeric_eigenfunctions(symbol, first)]
    gram = np.array([[np.mean(u * v.conj()) for v in basis] for u in basis])
    residual = float(np.max(np.abs(gram - np.eye(len(basis)))))
    ortho.record(residual < TOLERANCE, residual, str(label))
    row, col = label.index_position(random_index(label, rng)), label.index_position(random_index(label, rng))
    f = _coefficient_function(label, row, col)
    scale = p_power(p, level * alpha) - vt_offset(p, alpha, law.dimension)
    for _ in range(min(config.samples, 5)):
        x = random_residues(law, p, level, rng)
        residual = abs(vt_apply(law, alpha, f, _point(label, x), config.quotient_cap) - scale * f.at_residues(x))
        vt.record(residual < TOLERANCE * max(1.0, scale), residual, f"{label} at {x}")
    return [hermitian, agreement, blocks, eigen, ortho, vt]


def check_plancherel(config: RunConfig, rng: np.random.Generator) -> List[PropertyResult]:
    """‖f‖² = Σ d‖f̂‖²_HS and f = Σ d Tr[π f̂] for random f ∈ 𝒟_n."""
    law, p, n = config.law, config.prime, config.level
    plancherel, inversion = PropertyResult("plancherel"), PropertyResult("fourier_inversion")
    for _ in range(min(config.samples, 2)):
        f = TestFunction.random(law, p, n, rng)
        coefficients = fourier_series(f, n, config.quotient_cap)
        norm = f.l2_norm_squared()
        residual = abs(norm - plancherel_sum(coefficients))
        plancherel.record(residual < TOLERANCE * max(1.0, norm), residual, f"‖f‖² = {norm:.12g}")
        back = synthesize(coefficients, law, p, n, config.quotient_cap)
        residual = float(np.max(np.abs(back.values - f.values)))
        inversion.record(residual < TOLERANCE * max(1.0, norm), residual)
    return [plancherel, inversion]


def _lemma_point(which: str, prime: int, max_level: int, rng: np.random.Generator) -> DualPoint:
    count = AUX_LEMMAS[which][0]
    xi = DualPoint.of([random_dual_elem(prime, max_level, rng) for _ in range(count)])
    if lemma_regime_ok(which, xi):
        return xi
    parts = list(xi.components)
    top = max(max(c.level for c in parts), 1)
    parts[2] = DualElem.of(prime, int(rng.integers(1, prime)), top)
    return DualPoint.of(parts)


def check_gaussians(config: RunConfig, rng: np.random.Generator) -> List[PropertyResult]:
    """Gaussian lemma and |Λ| against the oracle; auxiliary lemmas in their valid regime."""
    p = config.prime
    gauss, modulus, lemmas = PropertyResult("gaussian_lemma"), PropertyResult("lambda_modulus"), PropertyResult("aux_lemmas")
    for _ in range(config.samples):
        a, b = random_rational(p, rng), random_rational(p, rng)
        gamma = int(rng.integers(-1, 2))
        unit = random_rational(p, rng, allow_zero=False)
        if p_norm(unit, p) > 1:
            residual = abs(abs(gaussian_lambda(unit, b, p)) - gaussian_modulus(unit, p))
            modulus.record(residual < TOLERANCE, residual, f"a={unit}")
        closed = gaussian_disk_integral(a, b, gamma, p)
        try:
            oracle = riemann_oscillatory_oracle(PhasePolynomial.quadratic(p, a, b), gamma, cap=config.oracle_cap)
        except ResourceCapError as e:
            gauss.skip(f"a={a} b={b}: {e}")
            continue
        residual = abs(closed - oracle)
        gauss.record(residual < TOLERANCE, residual, f"a={a} b={b} γ={gamma}")
    max_level = 2 if p == 3 else 1
    for which in aux_lemma_ids():
        for _ in range(min(config.samples, 10)):
            xi = _lemma_point(which, p, max_level, rng)
            try:
                report = verify_aux_lemma(which, xi, config.oracle_cap)
            except ResourceCapError as e:
                lemmas.skip(f"{which}({xi}): {e}")
                continue
            lemmas.record(report.passed, report.abs_diff, f"{which}({xi}): lhs={report.lhs:.12g}")
    return [gauss, modulus, lemmas]


def check_hypoelliptic(config: RunConfig, report: SuiteReport) -> List[PropertyResult]:
    """Positivity of c* over the nontrivial labels of B(n); needs n ≥ 1."""
    positive = PropertyResult("hypoelliptic_margin")
    if config.level < 1:
        return [positive]
    margin = hypoellipticity_margin(config.law, config.prime, config.alpha, config.level, cap=config.dual_cap)
    positive.record(margin.passed, 0.0, f"c* = {margin.c_star:.6g} at {margin.argmin}")
    report.notes["c_star"] = f"{margin.c_star:.12g}"
    report.notes["argmin"] = str(margin.argmin)
    report.notes["hypoelliptic_labels"] = str(len(margin.entries))
    return [positive]


LABEL_CHECKS = {
    Suite.REPS: check_reps,
    Suite.CHARACTERS: check_characters,
    Suite.SPECTRUM: check_spectrum,
}


def _label_task(item: Tuple[LabelCheck, RunConfig, RepLabel, np.random.SeedSequence]) -> List[PropertyResult]:
    check, config, label, seed = item
    return check(config, label, np.random.default_rng(seed))


def _run_label_checks(
    config: RunConfig,
    check: LabelCheck,
    labels: Sequence[RepLabel],
    seeds: Sequence[np.random.SeedSequence],
) -> List[List[PropertyResult]]:
    items = [(check, config, label, seed) for label, seed in zip(labels, seeds)]
    if config.threads == 1 or len(items) < 2:
        return [_label_task(item) for item in items]
    chunksize = max(1, len(items) // (4 * config.threads))
    with ProcessPoolExecutor(max_workers=config.threads) as pool:
        return list(pool.map(_label_task, items, chunksize=chunksize))


def run_suite(config: RunConfig, suite: Suite) -> SuiteReport:
    """
    Run one property suite, or all of them for Suite.ALL.

    Results are merged by property name in label order.
    """
    report = SuiteReport(
        suite=suite.value,
        law=config.law.name,
        prime=config.prime,
        level=config.level,
        alpha=config.alpha,
        seed=config.seed,
        provenance=provenance_notes(config.law),
    )
    suites = Suite.concrete() if suite is Suite.ALL else [suite]
    root = np.random.SeedSequence(config.seed)
    streams = dict(zip(Suite.concrete(), root.spawn(len(Suite.concrete()))))
    for current in suites:
        stream = streams[current]
        logger.debug(f"Running suite {current.value} on {config.law.name} p={config.prime} n={config.level}")
        if current in LABEL_CHECKS:
            label_seed, *_ = stream.spawn(1)
            labels = sample_labels(config, np.random.default_rng(label_seed))
            report.notes[f"{current.value}_labels"] = str(len(labels))
            results = _run_label_checks(config, LABEL_CHECKS[current], labels, stream.spawn(len(labels)))
            for label_results in results:
                for result in label_results:
                    report.add(result)
        elif current is Suite.PLANCHEREL:
            for result in check_plancherel(config, np.random.default_rng(stream)):
                report.add(result)
        elif current is Suite.GAUSSIANS:
            for result in check_gaussians(config, np.random.default_rng(stream)):
                report.add(result)
        elif current is Suite.HYPOELLIPTIC:
            for result in check_hypoelliptic(config, report):
                report.add(result)
    return report
