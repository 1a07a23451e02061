"""
JSON output formatter for machine-readable reports.
"""

import json
import math
from typing import Any, Dict, List, Optional

from ..models import (
    DualReport,
    GaussianReport,
    HypoellipticReport,
    LemmaReport,
    PlancherelReport,
    PropertyResult,
    RepReport,
    SpectrumReport,
    SpectrumRow,
    SpectrumTable,
    SuiteReport,
)

SCHEMA = "pnilrep/1"


def _number(value: Optional[float]) -> Optional[float]:
    if value is None or not math.isfinite(value):
        return None
    return value


def _complex(value: Optional[complex]) -> Optional[List[float]]:
    if value is None:
        return None
    return [value.real, value.imag]


class JsonOutput:
    """
    Formatter for JSON output.

    Every document carries ``"schema": "pnilrep/1"`` and keys are sorted, so
    identical reports serialize to identical bytes.
    """

    def format(self, report: Any) -> str:
        """
        Format a report as JSON.

        Args:
            report: Any report produced by the command handlers

        Returns:
            JSON string
        """
        data = self._to_dict(report)
        data["schema"] = SCHEMA
        return json.dumps(data, indent=2, sort_keys=True)

    def _to_dict(self, report: Any) -> Dict[str, Any]:
        if isinstance(report, DualReport):
            return self._dual(report)
        if isinstance(report, SuiteReport):
            return self._suite(report)
        if isinstance(report, SpectrumTable):
            return self._spectrum_table(report)
        if isinstance(report, GaussianReport):
            return self._gaussian(report)
        if isinstance(report, PlancherelReport):
            return self._plancherel(report)
        if isinstance(report, RepReport):
            return self._rep(report)
        if isinstance(report, HypoellipticReport):
            return self._hypoelliptic(report)
        if isinstance(report, LemmaReport):
            return self._lemma(report)
        raise TypeError(f"No JSON layout for {type(report).__name__}")

    def _dual(self, report: DualReport) -> Dict[str, Any]:
        pw = report.peter_weyl
        return {
            "command": "dual",
            "group": pw.law,
            "prime": pw.prime,
            "level": pw.level,
            "label_count": pw.label_count,
            "sum_d_squared": pw.sum_d_squared,
            "expected": pw.expected,
            "branch_counts": pw.branch_counts,
            "pass": report.passed,
            "labels": [
                {"xi": row.xi, "branch": row.branch, "dim": row.dim, "level": row.level}
                for row in report.labels
            ],
            "provenance": report.provenance,
        }

    def _property(self, result: PropertyResult) -> Dict[str, Any]:
        return {
            "name": result.name,
            "cases": result.cases,
            "failures": result.failures,
            "max_residual": _number(result.max_residual),
            "skipped": result.skipped,
            "details": result.details,
            "pass": result.passed,
        }

    def _suite(self, report: SuiteReport) -> Dict[str, Any]:
        return {
            "command": "verify",
            "suite": report.suite,
            "group": report.law,
            "prime": report.prime,
            "level": report.level,
            "alpha": report.alpha,
            "seed": report.seed,
            "properties": [self._property(p) for p in report.properties],
            "notes": report.notes,
            "pass": report.passed,
            "provenance": report.provenance,
        }

    def _row(self, row: SpectrumRow) -> Dict[str, Any]:
        data = {
            "label": row.label,
            "branch": row.branch,
            "tau": row.tau,
            "h_prime": row.h_prime,
            "closed_form": _number(row.closed_form),
            "numeric": row.numeric,
            "diff": _number(row.diff),
        }
        if row.bound_ok is not None:
            data["bound_ok"] = row.bound_ok
        return data

    def _spectrum(self, report: SpectrumReport) -> Dict[str, Any]:
        return {
            "label": report.label,
            "branch": report.branch,
            "dim": report.dim,
            "regime": report.regime,
            "eigenvalues_numeric": report.eigenvalues_numeric,
            "eigenvalues_closed_form": report.eigenvalues_closed_form,
            "max_abs_diff": report.max_abs_diff,
            "trace_diff": report.trace_diff,
            "hermitian_residual": report.hermitian_residual,
            "rows": [self._row(r) for r in report.rows],
            "pass": report.passed,
        }

    def _spectrum_table(self, table: SpectrumTable) -> Dict[str, Any]:
        return {
            "command": "spectrum",
            "group": table.law,
            "prime": table.prime,
            "level": table.level,
            "alpha": table.alpha,
            "bound_constant": table.bound_constant,
            "labels": [self._spectrum(r) for r in table.reports],
            "pass": table.passed,
            "provenance": table.provenance,
        }

    def _gaussian(self, report: GaussianReport) -> Dict[str, Any]:
        return {
            "command": "gaussian",
            "a": report.a,
            "b": report.b,
            "gamma": report.gamma,
            "prime": report.prime,
            "closed_form": _complex(report.closed_form),
            "oracle": _complex(report.oracle),
            "resolution": report.resolution,
            "abs_diff": report.abs_diff,
            "pass": report.passed,
        }

    def _plancherel(self, report: PlancherelReport) -> Dict[str, Any]:
        return {
            "command": "plancherel",
            "group": report.law,
            "prime": report.prime,
            "level": report.level,
            "seed": report.seed,
            "label_count": report.label_count,
            "l2_norm_squared": report.l2_norm_squared,
            "plancherel_sum": report.plancherel_sum,
            "abs_diff": report.abs_diff,
            "roundtrip_residual": report.roundtrip_residual,
            "pass": report.passed,
        }

    def _rep(self, report: RepReport) -> Dict[str, Any]:
        return {
            "command": "rep",
            "label": report.label,
            "branch": report.branch,
            "dim": report.dim,
            "element": report.element,
            "matrix": [[_complex(v) for v in row] for row in report.matrix],
            "unitarity_residual": report.unitarity_residual,
            "pass": report.passed,
        }

    def _hypoelliptic(self, report: HypoellipticReport) -> Dict[str, Any]:
        return {
            "group": report.law,
            "prime": report.prime,
            "level": report.level,
            "alpha": report.alpha,
            "c_star": _number(report.c_star),
            "argmin": report.argmin,
            "entries": [
                {"label": label, "inf_norm": inf_norm, "generator_norm": norm, "ratio": ratio}
                for label, inf_norm, norm, ratio in report.entries
            ],
            "pass": report.passed,
        }

    def _lemma(self, report: LemmaReport) -> Dict[str, Any]:
        return {
            "lemma": report.lemma,
            "xi": report.xi,
            "lhs": report.lhs,
            "rhs": report.rhs,
            "abs_diff": report.abs_diff,
            "regime_ok": report.regime_ok,
            "pass": report.passed,
        }
