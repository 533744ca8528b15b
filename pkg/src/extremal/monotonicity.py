"""Empirical monotonicity and convexity scans of the auxiliary functions."""
from typing import Dict, List, Optional, Tuple
import numpy as np
from loguru import logger
from src.configurations.config import Config
from src.extremal.lemma_functions import evaluate, get_lemma_function
from src.models.errors import InvalidArgumentError
from src.models.reports import Direction, LemmaScanReport, ScanReport

Grid = Tuple[float, float, float]

# printed direction of g disagrees with its own second-derivative argument
DOCUMENTED_OBSERVATIONS: Dict[str, str] = {"g": "strictly-decreasing"}


def grid_points(grid: Grid) -> np.ndarray:
    """Evenly spaced points from an inclusive (start, stop, step) grid."""
    start, stop, step = grid
    if step <= 0:
        raise InvalidArgumentError(f"grid step must be positive, got {step}")
    if stop < start:
        raise InvalidArgumentError(f"grid stop {stop} is below start {start}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


def _check_domain(function_id: str, xs: np.ndarray, bindings: Dict[str, float]) -> None:
    lemma_fn = get_lemma_function(function_id)
    lower = lemma_fn.domain_min(bindings)
    bad = xs <= lower if lemma_fn.open_at_min else xs < lower
    if np.any(bad):
        point = float(xs[np.argmax(bad)])
        raise InvalidArgumentError(f"grid point x={point} lies outside the domain of {function_id}")


def classify(values: np.ndarray, xs: np.ndarray, claimed: Optional[str] = None) -> Tuple[Direction, Optional[Tuple[float, float]], Optional[float]]:
    """Direction of a sequence from its consecutive differences.

    Differences smaller than the noise guard make the result inconclusive.
    The witness is the first adjacent pair (x_i, x_{i+1}) against the claimed
    direction, or against the first difference's sign when nothing is claimed.
    """
    diffs = np.diff(values)
    scale = max(1.0, float(np.max(np.abs(values))))
    tiny = np.abs(diffs) < Config.SCAN_NOISE_GUARD * scale
    if np.any(tiny):
        return "inconclusive", None, float(xs[np.argmax(tiny)])

    if np.all(diffs > 0):
        direction: Direction = "strictly-increasing"
    elif np.all(diffs < 0):
        direction = "strictly-decreasing"
    else:
        direction = "non-monotone"

    witness = None
    if claimed in ("strictly-increasing", "strictly-decreasing") and direction != claimed:
        against = diffs < 0 if claimed == "strictly-increasing" else diffs > 0
        i = int(np.argmax(against))
        witness = (float(xs[i]), float(xs[i + 1]))
    elif claimed is None and direction == "non-monotone":
        against = np.sign(diffs) != np.sign(diffs[0])
        i = int(np.argmax(against))
        witness = (float(xs[i]), float(xs[i + 1]))
    return direction, witness, None


def monotonicity_scan(function_id: str, bindings: Dict[str, float], grid: Grid,
                      claimed: Optional[str] = None) -> ScanReport:
    """Classify the direction of a lemma function over a grid."""
    xs = grid_points(grid)
    if len(xs) < 3:
        raise InvalidArgumentError(f"grid {grid} has {len(xs)} points; at least 3 are needed")
    _check_domain(function_id, xs, bindings)
    values = np.asarray(evaluate(function_id, xs, bindings), dtype=float)
    direction, witness, inconclusive_at = classify(values, xs, claimed)
    logger.debug(f"Scan {function_id} {bindings} on {grid}: {direction}")
    return ScanReport(function_id=function_id, bindings=dict(bindings), grid=grid, points=len(xs),
                      direction=direction, witness=witness, inconclusive_at=inconclusive_at)


def convexity_scan(function_id: str, bindings: Dict[str, float], grid: Grid,
                   claimed: Optional[str] = None) -> ScanReport:
    """Direction of the slope sequence; strictly-increasing means positive second differences."""
    xs = grid_points(grid)
    if len(xs) < 4:
        raise InvalidArgumentError(f"grid {grid} has {len(xs)} points; convexity needs at least 4")
    _check_domain(function_id, xs, bindings)
    values = np.asarray(evaluate(function_id, xs, bindings), dtype=float)
    slopes = np.diff(values) / np.diff(xs)
    direction, witness, inconclusive_at = classify(slopes, xs[:-1], claimed)
    return ScanReport(function_id=function_id, kind="convexity", bindings=dict(bindings), grid=grid,
                      points=len(xs), direction=direction, witness=witness, inconclusive_at=inconclusive_at)


def default_scans() -> Dict[str, List[Tuple[Dict[str, float], Grid]]]:
    """Parameter bindings and grids covering degrees up to the scan ceiling."""
    x_max, step = Config.SCAN_X_MAX, Config.SCAN_STEP
    plans: Dict[str, List[Tuple[Dict[str, float], Grid]]] = {
        "f1": [
            ({"d": float(d), "r": float(r)}, (step, x_max, step))
            for d in range(Config.SCAN_D_MIN, Config.SCAN_D_MAX + 1)
            for r in range(1, d + 1)
        ],
        "f2": [({"r": float(r)}, (float(r), x_max, step)) for r in range(0, Config.SCAN_F2_R_MAX + 1)],
        "f3": [({}, (2.0, x_max, step))],
        "f": [({}, (2.0, x_max, step))],
        "g": [({}, (2.0, x_max, step))],
    }
    return plans


def scan_lemma_claims() -> List[LemmaScanReport]:
    """Run every default scan and compare with the printed claims."""
    reports = []
    for function_id, plan in default_scans().items():
        lemma_fn = get_lemma_function(function_id)
        scanner = convexity_scan if function_id == "f" else monotonicity_scan
        scans = [scanner(function_id, bindings, grid, lemma_fn.claimed_direction) for bindings, grid in plan]

        observed = {scan.direction for scan in scans}
        observed_direction = observed.pop() if len(observed) == 1 else "non-monotone"
        documented = DOCUMENTED_OBSERVATIONS.get(function_id)
        if documented is not None:
            passed = observed_direction == documented
        else:
            passed = observed_direction == lemma_fn.claimed_direction

        if documented is not None and observed_direction != lemma_fn.claimed_direction:
            logger.warning(f"{function_id}: printed claim says {lemma_fn.claimed_direction}, observed {observed_direction}")
        reports.append(LemmaScanReport(
            function_id=function_id,
            claim=lemma_fn.claim,
            claimed_direction=lemma_fn.claimed_direction,
            observed_direction=observed_direction,
            documented_discrepancy=documented is not None,
            passed=passed,
            scans=scans,
        ))
    logger.info(f"Scanned {len(reports)} lemma claims; {sum(r.passed for r in reports)} passed")
    return reports
