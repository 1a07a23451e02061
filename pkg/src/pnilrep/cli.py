"""
Command-line interface for pnilrep.
"""

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from .config import RunConfig, build_config, load_config
from .duals import enumerate_dual_ball, label_for, peter_weyl_check, provenance_notes
from .errors import PnilrepError
from .groups import GroupElement
from .integrals import PhasePolynomial, gaussian_disk_integral, riemann_oscillatory_oracle
from .models import (
    DualReport,
    GaussianReport,
    LabelRow,
    OutputFormat,
    PlancherelReport,
    RepReport,
    SpectrumTable,
    Suite,
    SuiteReport,
)
from .operators import check_directions, spectrum_report
from .output import ConsoleOutput, CsvOutput, JsonOutput
from .padic import DualPoint
from .reps import TestFunction, fourier_series, plancherel_sum, rep_matrix, synthesize
from .verify import run_suite

# Exit codes
EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_ERROR = 2

Report = Any

LOG_HANDLER_NAME = "pnilrep"


def setup_logging(verbose: bool = False) -> None:
    """Configure logging based on verbosity level, replacing the handler of an earlier call."""
    level = logging.DEBUG if verbose else logging.WARNING

    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(LOG_HANDLER_NAME)
    handler.setLevel(level)
    if verbose:
        formatter = logging.Formatter("[%(levelname)s] %(message)s")
    else:
        formatter = logging.Formatter("%(message)s")
    handler.setFormatter(formatter)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    for old in [h for h in root_logger.handlers if h.get_name() == LOG_HANDLER_NAME]:
        root_logger.removeHandler(old)
        old.close()
    root_logger.addHandler(handler)


def _common_options() -> argparse.ArgumentParser:
    """Flags shared by every subcommand; None means "not given"."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-g", "--group", type=str, default=None, help="Group law: zp, h1, h2, b4, g52 … g56")
    common.add_argument("--dim", type=int, default=None, help="Dimension d of ℤ_p^d (zp only)")
    common.add_argument("-p", "--prime", type=int, default=None, help="Odd prime p")
    common.add_argument("-n", "--level", type=int, default=None, help="Ball level n")
    common.add_argument("--alpha", type=float, default=None, help="Operator order α > 0")
    common.add_argument("-s", "--seed", type=int, default=None, help="Seed of the random samples")
    common.add_argument("--samples", type=int, default=None, help="Random draws per property")
    common.add_argument("--labels", type=int, default=None, help="Labels sampled per check at level ≥ 2")
    common.add_argument("-t", "--threads", type=int, default=None, help="Worker processes (PNILREP_THREADS overrides)")
    common.add_argument(
        "-f", "--format",
        type=str,
        choices=[f.value for f in OutputFormat],
        default=None,
        help="Output format: console (default), json or csv",
    )
    common.add_argument("-o", "--output", type=str, default=None, help="Output file path (writes results to file)")
    common.add_argument("-c", "--config", type=str, default=None, help="YAML file of run settings")
    common.add_argument("-v", "--verbose", action="store_true", help="Enable verbose/debug logging")
    return common


def create_parser() -> argparse.ArgumentParser:
    """Create and configure the argument parser."""
    parser = argparse.ArgumentParser(
        prog="pnilrep",
        description="Unitary duals, Fourier analysis and sub-Laplacian spectra of p-adic nilpotent groups",
        epilog="Exit codes: 0 = all checks pass, 1 = a check failed, 2 = error",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _common_options()
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    commands.add_parser("dual", parents=[common], help="List B(n) and check Σ d² = p^{dn}")

    verify = commands.add_parser("verify", parents=[common], help="Run a property suite")
    verify.add_argument(
        "--suite",
        type=str,
        choices=[s.value for s in Suite],
        default=Suite.ALL.value,
        help="Suite to run (default: all)",
    )

    spectrum = commands.add_parser("spectrum", parents=[common], help="Sub-Laplacian eigenvalue table of B(n)")
    spectrum.add_argument(
        "--directions",
        type=str,
        default=None,
        help='Direction vectors, e.g. "1,0,0;0,1,0" (default: e_1, …, e_κ)',
    )
    spectrum.add_argument(
        "--bound-constant",
        type=float,
        default=None,
        help="Constant c of the G56 check λ ≥ c·‖(ξ₁, ξ₂)‖^α (default: positivity)",
    )

    gaussian = commands.add_parser("gaussian", parents=[common], help="Gaussian integral over p^γℤ_p")
    gaussian.add_argument("--a", dest="coef_a", type=str, required=True, help='Quadratic coefficient, e.g. "1/25"')
    gaussian.add_argument("--b", dest="coef_b", type=str, default="0", help="Linear coefficient")
    gaussian.add_argument("--gamma", type=int, default=0, help="Disk exponent γ")
    gaussian.add_argument("--oracle", action="store_true", help="Also compute the Riemann-sum oracle")

    commands.add_parser("plancherel", parents=[common], help="Plancherel identity and Fourier inversion")

    rep = commands.add_parser("rep", parents=[common], help="Print one matrix π_ξ(x)")
    rep.add_argument("--xi", type=str, required=True, help='Label components, e.g. "1,1,1/3"')
    rep.add_argument("--x", dest="element", type=str, required=True, help='Element residues, e.g. "1,0,0"')

    return parser


def parse_rational(text: str, prime: int) -> Fraction:
    """
    Parse a p-adic rational such as "3", "-1/9", "2/3^2" or "0.5".

    Raises:
        ValueError: If the text is not a rational number
    """
    text = text.strip()
    try:
        if "/" in text and "^" in text:
            numer_text, denom_text = text.split("/")
            base_text, exp_text = denom_text.split("^")
            base, exp = int(base_text), int(exp_text)
            if base != prime:
                raise ValueError(f"base {base} differs from prime {prime}")
            return Fraction(int(numer_text), base ** exp)
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Invalid rational {text!r}: {e}") from None


def parse_vectors(text: str) -> List[Tuple[int, ...]]:
    """Parse semicolon-separated integer vectors: "1,0,0;0,1,0"."""
    try:
        return [tuple(int(v) for v in part.split(",")) for part in text.split(";") if part.strip()]
    except ValueError:
        raise ValueError(f"Invalid direction list {text!r}") from None


def config_from_args(parsed_args: argparse.Namespace) -> RunConfig:
    """Merge --config, flags and environment into a RunConfig."""
    file_values = load_config(Path(parsed_args.config)) if parsed_args.config else None
    overrides: Dict[str, Any] = {
        "group": parsed_args.group,
        "dim": parsed_args.dim,
        "prime": parsed_args.prime,
        "level": parsed_args.level,
        "alpha": parsed_args.alpha,
        "seed": parsed_args.seed,
        "samples": parsed_args.samples,
        "labels": parsed_args.labels,
        "threads": parsed_args.threads,
        "output_format": parsed_args.format,
    }
    return build_config(overrides, file_values)


def cmd_dual(config: RunConfig) -> Tuple[int, DualReport]:
    """Label table of B(n) with the Peter–Weyl verdict."""
    law = config.law
    labels = enumerate_dual_ball(law, config.prime, config.level, config.dual_cap)
    report = DualReport(
        peter_weyl=peter_weyl_check(law, config.prime, config.level, config.dual_cap),
        labels=[LabelRow(str(lab.xi), lab.branch, lab.dim, lab.level) for lab in labels],
        provenance=provenance_notes(law),
    )
    return (EXIT_SUCCESS if report.passed else EXIT_FAILURE), report


def cmd_verify(config: RunConfig, suite: Suite) -> Tuple[int, SuiteReport]:
    """Run a property suite; failures still return the full report."""
    report = run_suite(config, suite)
    return (EXIT_SUCCESS if report.passed else EXIT_FAILURE), report


def cmd_spectrum(
    config: RunConfig,
    directions: Optional[Sequence[Sequence[int]]] = None,
    bound_constant: Optional[float] = None,
) -> Tuple[int, SpectrumTable]:
    """Closed-form against numeric eigenvalues of σ_L(ξ) for every ξ ∈ B(n)."""
    law = config.law
    chosen = check_directions(law, config.prime, directions)
    table = SpectrumTable(
        law=law.name,
        prime=config.prime,
        level=config.level,
        alpha=config.alpha,
        bound_constant=bound_constant,
        provenance=provenance_notes(law),
    )
    for label in enumerate_dual_ball(law, config.prime, config.level, config.dual_cap):
        table.reports.append(spectrum_report(law, chosen, config.alpha, label, bound_constant))
    return (EXIT_SUCCESS if table.passed else EXIT_FAILURE), table


def cmd_gaussian(
    config: RunConfig, a: Fraction, b: Fraction, gamma: int, oracle: bool = False
) -> Tuple[int, GaussianReport]:
    """Closed-form Gaussian integral, optionally against the Riemann-sum oracle."""
    closed = gaussian_disk_integral(a, b, gamma, config.prime)
    report = GaussianReport(str(a), str(b), gamma, config.prime, closed)
    if oracle:
        poly = PhasePolynomial.quadratic(config.prime, a, b)
        scaled = poly.rescale(gamma) if gamma else poly
        report.resolution = scaled.constancy_index() + 1
        report.oracle = riemann_oscillatory_oracle(poly, gamma, cap=config.oracle_cap)
    return (EXIT_SUCCESS if report.passed else EXIT_FAILURE), report


def cmd_plancherel(config: RunConfig) -> Tuple[int, PlancherelReport]:
    """Plancherel identity and synthesis round trip for one seeded f ∈ 𝒟_n."""
    law = config.law
    rng = np.random.default_rng(config.seed)
    f = TestFunction.random(law, config.prime, config.level, rng)
    coefficients = fourier_series(f, config.level, config.quotient_cap)
    back = synthesize(coefficients, law, config.prime, config.level, config.quotient_cap)
    report = PlancherelReport(
        law=law.name,
        prime=config.prime,
        level=config.level,
        seed=config.seed,
        label_count=len(coefficients),
        l2_norm_squared=f.l2_norm_squared(),
        plancherel_sum=plancherel_sum(coefficients),
        roundtrip_residual=float(np.max(np.abs(back.values - f.values))),
    )
    return (EXIT_SUCCESS if report.passed else EXIT_FAILURE), report


def cmd_rep(config: RunConfig, xi_text: str, element_text: str) -> Tuple[int, RepReport]:
    """π_ξ(x) for a label given as text and an element given by residues."""
    law = config.law
    label = label_for(law, DualPoint.parse(xi_text, config.prime))
    try:
        values = [int(v) for v in element_text.split(",")]
    except ValueError:
        raise ValueError(f"Invalid element {element_text!r}") from None
    if len(values) != law.dimension:
        raise ValueError(f"{law.name} elements have {law.dimension} coordinates, got {len(values)}")
    element = GroupElement.from_residues(law, config.prime, max(label.level, 1), values)
    matrix = rep_matrix(label, element)
    report = RepReport(
        label=str(label.xi),
        branch=label.branch,
        element=str(element),
        matrix=[[complex(v) for v in row] for row in matrix.entries],
        unitarity_residual=matrix.unitarity_residual(),
    )
    return (EXIT_SUCCESS if report.passed else EXIT_FAILURE), report


def dispatch(parsed_args: argparse.Namespace, config: RunConfig) -> Tuple[int, Report]:
    command = parsed_args.command
    if command == "dual":
        return cmd_dual(config)
    if command == "verify":
        return cmd_verify(config, Suite(parsed_args.suite))
    if command == "spectrum":
        directions = parse_vectors(parsed_args.directions) if parsed_args.directions else None
        return cmd_spectrum(config, directions, parsed_args.bound_constant)
    if command == "gaussian":
        a = parse_rational(parsed_args.coef_a, config.prime)
        b = parse_rational(parsed_args.coef_b, config.prime)
        return cmd_gaussian(config, a, b, parsed_args.gamma, parsed_args.oracle)
    if command == "plancherel":
        return cmd_plancherel(config)
    if command == "rep":
        return cmd_rep(config, parsed_args.xi, parsed_args.element)
    raise ValueError(f"Unknown command {command!r}")


def write_report(report: Report, output_format: OutputFormat, output: Optional[str]) -> None:
    """
    Render a report to stdout or to a file.

    Raises:
        IOError: If the output file cannot be written
    """
    logger = logging.getLogger(__name__)
    if output_format == OutputFormat.CONSOLE:
        if output:
            with open(output, "w", encoding="utf-8") as f:
                ConsoleOutput(stream=f).format(report)
            logger.debug(f"Results written to: {output}")
        else:
            ConsoleOutput().format(report)
        return

    formatter = JsonOutput() if output_format == OutputFormat.JSON else CsvOutput()
    text = formatter.format(report)
    if output:
        with open(output, "w", encoding="utf-8", newline="") as f:
            f.write(text)
            if not text.endswith("\n"):
                f.write("\n")
        logger.debug(f"Results written to: {output}")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def main(args: Optional[list] = None) -> int:
    """
    Main entry point for the CLI.

    Args:
        args: Command-line arguments (defaults to sys.argv)

    Returns:
        Exit code
    """
    parser = create_parser()
    parsed_args = parser.parse_args(args)

    setup_logging(parsed_args.verbose)
    logger = logging.getLogger(__name__)

    try:
        config = config_from_args(parsed_args)
    except (FileNotFoundError, PnilrepError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR
    logger.debug(f"Running {parsed_args.command} with {config}")

    try:
        code, report = dispatch(parsed_args, config)
    except (PnilrepError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR

    try:
        write_report(report, config.output_format, parsed_args.output)
    except IOError as e:
        print(f"Error writing to output file: {e}", file=sys.stderr)
        return EXIT_ERROR

    return code


if __name__ == "__main__":
    sys.exit(main())
