"""
CSV output formatter for tabular reports.
"""

import csv
import io
from typing import Any, List, Optional

from ..models import (
    DualReport,
    GaussianReport,
    PlancherelReport,
    RepReport,
    SpectrumTable,
    SuiteReport,
)

SPECTRUM_COLUMNS = ["label", "tau", "h_prime", "closed_form", "numeric", "diff", "bound_ok"]


def _cell(value: Optional[Any]) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


class CsvOutput:
    """
    Formatter for CSV output.

    Spectrum tables use the columns label, tau, h_prime, closed_form,
    numeric, diff and bound_ok; other reports get one row per record.
    """

    def format(self, report: Any) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        header, rows = self._table(report)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(v) for v in row])
        return buffer.getvalue()

    def _table(self, report: Any) -> tuple:
        if isinstance(report, SpectrumTable):
            rows: List[list] = [
                [r.label, r.tau, r.h_prime, r.closed_form, r.numeric, r.diff, r.bound_ok]
                for r in report.rows
            ]
            return SPECTRUM_COLUMNS, rows
        if isinstance(report, DualReport):
            return ["xi", "branch", "dim", "level"], [
                [r.xi, r.branch, r.dim, r.level] for r in report.labels
            ]
        if isinstance(report, SuiteReport):
            return ["property", "cases", "failures", "skipped", "max_residual", "pass"], [
                [p.name, p.cases, p.failures, p.skipped, p.max_residual, p.passed] for p in report.properties
            ]
        if isinstance(report, GaussianReport):
            oracle = report.oracle
            return ["a", "b", "gamma", "prime", "closed_re", "closed_im", "oracle_re", "oracle_im", "diff"], [[
                report.a,
                report.b,
                report.gamma,
                report.prime,
                report.closed_form.real,
                report.closed_form.imag,
                None if oracle is None else oracle.real,
                None if oracle is None else oracle.imag,
                report.abs_diff,
            ]]
        if isinstance(report, PlancherelReport):
            return ["group", "prime", "level", "seed", "l2_norm_squared", "plancherel_sum", "diff", "roundtrip"], [[
                report.law,
                report.prime,
                report.level,
                report.seed,
                report.l2_norm_squared,
                report.plancherel_sum,
                report.abs_diff,
                report.roundtrip_residual,
            ]]
        if isinstance(report, RepReport):
            return ["row", "col", "re", "im"], [
                [i, j, v.real, v.imag]
                for i, row in enumerate(report.matrix)
                for j, v in enumerate(row)
                if v != 0
            ]
        raise TypeError(f"No CSV layout for {type(report).__name__}")
