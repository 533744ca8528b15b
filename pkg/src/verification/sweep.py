"""Run a verifier over a parameter grid and aggregate the cells."""
from functools import lru_cache
from multiprocessing import Pool
from typing import List, Optional, Sequence, Tuple, Union
from loguru import logger
from src.configurations.config import Config
from src.enumeration.cactus_generator import CactusEnumerator, get_enumerator
from src.models.errors import InvalidArgumentError
from src.models.reports import PartitionReport, Provenance, SweepReport, VerificationReport
from src.verification.case_partitions import PartitionVerifier
from src.verification.theorem_checks import ExtremalVerifier

SWEEP_MODES = ("cacti", "pm-cacti", "pm-partitions", "cacti-partitions")

# modes whose first parameter is β rather than n
BETA_MODES = ("pm-cacti", "pm-partitions")

Cell = Tuple[str, int, int, float, int]
CellReport = Union[VerificationReport, PartitionReport]


@lru_cache(maxsize=None)
def _enumerator_for(cap: int) -> CactusEnumerator:
    if cap == Config.ENUMERATION_CAP:
        return get_enumerator()
    return CactusEnumerator(cap)


def run_cell(cell: Cell, enumerator: Optional[CactusEnumerator] = None) -> CellReport:
    """Run one sweep cell and return its report."""
    mode, first, t, tolerance, cap = cell
    enumerator = enumerator or _enumerator_for(cap)
    if mode == "cacti":
        return ExtremalVerifier(enumerator, tolerance).verify_max_cacti(first, t)
    if mode == "pm-cacti":
        return ExtremalVerifier(enumerator, tolerance).verify_max_pm_cacti(first, t)
    if mode == "pm-partitions":
        return PartitionVerifier(enumerator, tolerance).verify_lemma_partitions(first, t)
    return PartitionVerifier(enumerator, tolerance).verify_pendant_partitions(first, t)


def _cycle_counts(mode: str, first: int, t_rule: Union[str, Sequence[int]]) -> List[int]:
    if t_rule != "all":
        return sorted(set(t_rule))
    if mode in BETA_MODES:
        return list(range(0, first))
    return list(range(0, (first - 1) // 2 + 1))


def build_cells(mode: str, values: Sequence[int], t_rule: Union[str, Sequence[int]] = "all",
                tolerance: float = Config.TOLERANCE, cap: int = Config.ENUMERATION_CAP) -> List[Cell]:
    """Grid cells in ascending (first parameter, t) order."""
    if mode not in SWEEP_MODES:
        raise InvalidArgumentError(f"unknown sweep mode '{mode}', expected one of {', '.join(SWEEP_MODES)}")
    return [
        (mode, first, t, tolerance, cap)
        for first in sorted(set(values))
        for t in _cycle_counts(mode, first, t_rule)
    ]


def sweep(mode: str, values: Sequence[int], t_rule: Union[str, Sequence[int]] = "all",
          workers: int = Config.SWEEP_WORKERS, tolerance: float = Config.TOLERANCE,
          enumerator: Optional[CactusEnumerator] = None) -> SweepReport:
    """Run every cell of the grid, in a process pool when workers > 1."""
    enumerator = enumerator or get_enumerator()
    cells = build_cells(mode, values, t_rule, tolerance, enumerator.max_vertices)
    first_name = "beta" if mode in BETA_MODES else "n"
    report = SweepReport(
        mode=mode,
        grid={first_name: sorted(set(values)), "t": sorted({cell[2] for cell in cells})},
        provenance=Provenance(tolerance=tolerance, enumeration_cap=enumerator.max_vertices),
    )
    logger.info(f"Sweep {mode}: {len(cells)} cells with {workers} worker(s)")

    if workers > 1 and len(cells) > 1:
        with Pool(processes=min(workers, len(cells))) as pool:
            results = pool.map(run_cell, cells)
    else:
        results = [run_cell(cell, enumerator) for cell in cells]

    for cell_report in results:
        report.cells.append(cell_report)
        informative = getattr(cell_report, "informative", False)
        if informative:
            report.informative += 1
        if cell_report.status == "pass":
            report.passed += 1
        elif cell_report.status == "vacuous":
            report.vacuous += 1
        elif cell_report.status == "error":
            report.errors += 1
        elif not informative:
            report.failed += 1

    report.all_passed = report.failed == 0 and report.errors == 0
    log = logger.success if report.all_passed else logger.warning
    log(f"Sweep {mode}: {report.passed} passed, {report.failed} failed, {report.vacuous} vacuous, "
        f"{report.errors} errors, {report.informative} informative")
    return report
