"""Render reports as deterministic JSON or aligned text tables."""
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union
import pandas as pd
from loguru import logger
from pydantic import BaseModel
from src.configurations.config import Config
from src.models.reports import LemmaScanReport, PartitionReport, SweepReport, VerificationReport

Report = Union[BaseModel, Sequence[BaseModel]]

# timing varies between runs and is kept out of the serialized body
EXCLUDED_FIELDS = frozenset({"elapsed_seconds"})


def format_number(value: float, digits: int = Config.SIGNIFICANT_DIGITS) -> str:
    """Fixed significant-digit rendering used for every real in a report."""
    return f"{value:.{digits}g}"


class ReportExporter:
    def __init__(self, digits: int = Config.SIGNIFICANT_DIGITS):
        self.digits = digits

    def _normalize(self, obj: Any) -> Any:
        if isinstance(obj, BaseModel):
            return self._normalize(obj.model_dump())
        if isinstance(obj, dict):
            return {str(k): self._normalize(v) for k, v in obj.items() if k not in EXCLUDED_FIELDS}
        if isinstance(obj, (list, tuple)):
            return [self._normalize(v) for v in obj]
        if isinstance(obj, bool) or obj is None:
            return obj
        if isinstance(obj, float):
            return format_number(obj, self.digits)
        return obj

    def to_json(self, report: Report) -> str:
        """Sorted keys, numbers as fixed-precision strings, no timing."""
        return json.dumps(self._normalize(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def _number(self, value: Optional[float]) -> str:
        return "" if value is None else format_number(value, self.digits)

    def _verification_row(self, report: VerificationReport) -> Dict[str, Any]:
        return {
            "theorem": report.theorem,
            "params": " ".join(f"{k}={v}" for k, v in report.params.items()),
            "status": report.status + (" (informative)" if report.informative else ""),
            "count": report.enumerated_count,
            "max": self._number(report.max_value),
            "bound": self._number(report.bound_value),
            "unique": report.argmax_unique,
            "extremal": report.argmax_is_extremal,
            "error": report.error.message if report.error else "",
        }

    def _partition_rows(self, report: PartitionReport) -> List[Dict[str, Any]]:
        params = " ".join(f"{k}={v}" for k, v in report.params.items())
        if not report.cases:
            return [{"family": report.family, "params": params, "case": "", "status": report.status,
                     "count": 0, "max": "", "bound": self._number(report.bound_value),
                     "violations": 0, "error": report.error.message if report.error else ""}]
        return [
            {"family": report.family, "params": params, "case": case.name, "status": report.status,
             "count": case.count, "max": self._number(case.max_value), "bound": self._number(report.bound_value),
             "violations": len(case.violations), "error": ""}
            for case in report.cases
        ]

    def _rows(self, report: Report) -> List[Dict[str, Any]]:
        if isinstance(report, SweepReport):
            rows: List[Dict[str, Any]] = []
            for cell in report.cells:
                rows.extend(self._rows(cell))
            return rows
        if isinstance(report, VerificationReport):
            return [self._verification_row(report)]
        if isinstance(report, PartitionReport):
            return self._partition_rows(report)
        if isinstance(report, LemmaScanReport):
            return [{
                "function": report.function_id,
                "claimed": report.claimed_direction,
                "observed": report.observed_direction,
                "scans": len(report.scans),
                "documented": report.documented_discrepancy,
                "passed": report.passed,
            }]
        if isinstance(report, (list, tuple)):
            rows = []
            for item in report:
                rows.extend(self._rows(item))
            return rows
        return [self._normalize(report)]

    def to_table(self, report: Report) -> str:
        """One row per cell or case, rendered with pandas."""
        rows = self._rows(report)
        if not rows:
            return "(no cells)\n"
        table = pd.DataFrame(rows).to_string(index=False)
        if isinstance(report, SweepReport):
            table += (f"\n\n{report.passed} passed, {report.failed} failed, {report.vacuous} vacuous, "
                      f"{report.errors} errors, {report.informative} informative")
        return table + "\n"

    def render(self, report: Report, output_format: str) -> str:
        """Render as "json" or "table"."""
        if output_format == "table":
            return self.to_table(report)
        return self.to_json(report)

    def export(self, report: Report, output_format: str, path: Union[str, Path]) -> Path:
        """Write the rendered report, creating parent directories."""
        output_path = Path(path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(self.render(report, output_format), encoding="utf-8")
        logger.info(f"Report written to {output_path}")
        return output_path
