"""
Console output formatter for human-readable reports.
"""

import sys
from typing import Any, TextIO

from ..models import (
    DualReport,
    GaussianReport,
    PlancherelReport,
    RepReport,
    SpectrumTable,
    SuiteReport,
)


def _verdict(passed: bool) -> str:
    return "✅ PASS" if passed else "❌ FAIL"


class ConsoleOutput:
    """
    Formatter for human-readable console output.
    """

    def __init__(self, stream: TextIO = None) -> None:
        """
        Initialize console output formatter.

        Args:
            stream: Output stream (defaults to stdout)
        """
        self.stream = stream or sys.stdout

    def format(self, report: Any) -> None:
        """
        Print a report to the stream.

        Args:
            report: Any report produced by the command handlers
        """
        if isinstance(report, DualReport):
            self._print_dual(report)
        elif isinstance(report, SuiteReport):
            self._print_suite(report)
        elif isinstance(report, SpectrumTable):
            self._print_spectrum(report)
        elif isinstance(report, GaussianReport):
            self._print_gaussian(report)
        elif isinstance(report, PlancherelReport):
            self._print_plancherel(report)
        elif isinstance(report, RepReport):
            self._print_rep(report)
        else:
            raise TypeError(f"No console layout for {type(report).__name__}")

    def _print_dual(self, report: DualReport) -> None:
        pw = report.peter_weyl
        self._print(f"\n🔍 Dual ball B({pw.level}) of {pw.law} at p={pw.prime}\n")
        for row in report.labels:
            self._print(f"  {row.xi:<40} {row.branch:<6} d={row.dim}")
        self._print("")
        branches = ", ".join(f"{tag}: {count}" for tag, count in sorted(pw.branch_counts.items()))
        self._summary([
            f"Labels: {pw.label_count} ({branches})",
            f"Σ d² = {pw.sum_d_squared}, expected {pw.expected}",
            _verdict(report.passed),
        ])
        self._print_provenance(report.provenance)

    def _print_suite(self, report: SuiteReport) -> None:
        self._print(f"\n🔍 Suite {report.suite} on {report.law} at p={report.prime}, n={report.level}\n")
        for prop in report.properties:
            mark = "✅" if prop.passed else "❌"
            self._print(f"  {mark} {prop.name:<28} cases={prop.cases:<6} max residual={prop.max_residual:.3g}")
            if prop.skipped:
                self._print(f"     └── {prop.skipped} draws skipped at the resource cap")
            for detail in prop.details:
                self._print(f"     └── {detail}")
        for key, value in sorted(report.notes.items()):
            self._print(f"  {key}: {value}")
        self._print("")
        failed = sum(1 for p in report.properties if not p.passed)
        self._summary([f"Properties: {len(report.properties)}, failed: {failed}", _verdict(report.passed)])
        self._print_provenance(report.provenance)

    def _print_spectrum(self, table: SpectrumTable) -> None:
        self._print(f"\n🔍 Sub-Laplacian spectrum of {table.law} at p={table.prime}, n={table.level}, α={table.alpha}\n")
        for report in table.reports:
            self._print(f"  📦 {report.label} [{report.branch}] d={report.dim} regime={report.regime}")
            for row in report.rows:
                closed = "-" if row.closed_form is None else f"{row.closed_form:.9g}"
                extra = "" if row.bound_ok is None else f" bound_ok={row.bound_ok}"
                self._print(f"     └── τ={row.tau or '-'} h′={row.h_prime or '-'} closed={closed} numeric={row.numeric:.9g}{extra}")
        self._print("")
        self._summary([f"Labels: {len(table.reports)}", _verdict(table.passed)])

    def _print_gaussian(self, report: GaussianReport) -> None:
        self._print(f"\n🔍 Gaussian integral a={report.a}, b={report.b}, γ={report.gamma}, p={report.prime}\n")
        self._print(f"  closed form: {report.closed_form:.12g}")
        if report.oracle is not None:
            self._print(f"  oracle:      {report.oracle:.12g} (resolution {report.resolution})")
        self._print("")
        self._summary([_verdict(report.passed)])

    def _print_plancherel(self, report: PlancherelReport) -> None:
        self._print(f"\n🔍 Plancherel on {report.law} at p={report.prime}, n={report.level}, seed={report.seed}\n")
        self._print(f"  ‖f‖²            = {report.l2_norm_squared:.12g}")
        self._print(f"  Σ d ‖f̂‖²_HS     = {report.plancherel_sum:.12g}")
        self._print(f"  round trip error = {report.roundtrip_residual:.3g}")
        self._print("")
        self._summary([f"Labels: {report.label_count}", _verdict(report.passed)])

    def _print_rep(self, report: RepReport) -> None:
        self._print(f"\n🔍 π_{report.label}({report.element}) [{report.branch}] d={report.dim}\n")
        for row in report.matrix:
            self._print("  " + "  ".join(f"{v.real:+.4f}{v.imag:+.4f}i" for v in row))
        self._print("")
        self._summary([f"Unitarity residual: {report.unitarity_residual:.3g}"])

    def _print_provenance(self, provenance: dict) -> None:
        if provenance:
            self._print("\nProvenance:")
            for key, note in sorted(provenance.items()):
                self._print(f"  {key}: {note}")

    def _summary(self, lines: list) -> None:
        separator = "─" * 40
        self._print(separator)
        for line in lines:
            self._print(line)
        self._print(separator)

    def _print(self, message: str) -> None:
        """Print a message to the output stream."""
        print(message, file=self.stream)
