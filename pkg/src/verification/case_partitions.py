"""Split an enumerated class into proof cases and check each case against its bound."""
import time
from typing import Callable, Dict, List, Optional, Tuple
from loguru import logger
from src.configurations.config import Config
from src.core.canonical import are_isomorphic, canonical_form
from src.core.graph_structure import cycle_lengths, degree, min_degree, pendant_vertices, support_vertices
from src.enumeration.cactus_generator import CactusEnumerator, EnumerationQuery, get_enumerator
from src.extremal.bounds import bound_Phi, bound_Q
from src.extremal.constructions import build_H, build_Hstar
from src.invariants.sombor import sombor_index
from src.models.errors import InvalidArgumentError, SomborError, UnsupportedSizeError
from src.models.graph import Graph
from src.models.reports import CellError, PartitionCase, PartitionReport

# (name, hypothesis, strict)
PM_CASES: List[Tuple[str, str, bool]] = [
    ("min-degree-at-least-2", "δ(G) >= 2", True),
    ("degree-2-support", "δ(G) = 1 and some support vertex has degree 2", False),
    ("high-degree-supports", "δ(G) = 1 and every support vertex has degree >= 3", False),
]

CACTUS_CASES: List[Tuple[str, str, bool]] = [
    ("has-pendant", "G has a pendant vertex", False),
    ("pendant-free-long-cycle", "G has no pendant vertex and some cycle has length >= 4", True),
    ("pendant-free-triangles", "G has no pendant vertex and every cycle is a triangle", False),
]


def classify_pm_case(g: Graph) -> Optional[str]:
    """Name of the perfect-matching case g falls into, or None."""
    delta = min_degree(g)
    if delta >= 2:
        return "min-degree-at-least-2"
    if delta != 1:
        return None
    supports = support_vertices(g)
    if not supports:
        return None
    if any(degree(g, u) == 2 for u in supports):
        return "degree-2-support"
    if all(degree(g, u) >= 3 for u in supports):
        return "high-degree-supports"
    return None


def classify_cactus_case(g: Graph) -> Optional[str]:
    """Name of the pendant case g falls into, or None."""
    if pendant_vertices(g):
        return "has-pendant"
    lengths = cycle_lengths(g)
    if not lengths:
        return None
    if max(lengths) >= 4:
        return "pendant-free-long-cycle"
    return "pendant-free-triangles"


class PartitionVerifier:
    def __init__(self, enumerator: Optional[CactusEnumerator] = None, tolerance: float = Config.TOLERANCE):
        self.enumerator = enumerator or get_enumerator()
        self.tolerance = tolerance

    def verify_lemma_partitions(self, beta: int, t: int) -> PartitionReport:
        """Perfect-matching cacti on 2β vertices split by minimum degree and support degrees."""
        report = PartitionReport(family="pm-cacti", params={"beta": beta, "t": t}, status="pass")
        started = time.perf_counter()
        try:
            if beta < 2:
                raise InvalidArgumentError(f"pm-cacti partitions need β >= 2, got β={beta}")
            if 2 * beta > self.enumerator.max_vertices:
                raise UnsupportedSizeError("pm-cacti partition cell", 2 * beta, self.enumerator.max_vertices)
            if t < 0 or beta < t + 1:
                report.status = "vacuous"
                return report
            query = EnumerationQuery(2 * beta, t, require_perfect_matching=True)
            self._partition(report, query, bound_Phi(beta, t).value, build_Hstar(beta, t),
                            PM_CASES, classify_pm_case)
        except SomborError as e:
            logger.error(f"pm-cacti partition β={beta}, t={t} failed: {e}")
            report.status = "error"
            report.error = CellError(kind=e.kind, message=str(e))
        finally:
            report.elapsed_seconds = time.perf_counter() - started
        return report

    def verify_pendant_partitions(self, n: int, t: int) -> PartitionReport:
        """Cacti in H(n,t) split by pendant vertices and cycle lengths."""
        report = PartitionReport(family="cacti", params={"n": n, "t": t}, status="pass")
        started = time.perf_counter()
        try:
            if n < 3:
                raise InvalidArgumentError(f"cacti partitions need n >= 3, got n={n}")
            if n > self.enumerator.max_vertices:
                raise UnsupportedSizeError("cacti partition cell", n, self.enumerator.max_vertices)
            if t < 0 or n < 2 * t + 1:
                report.status = "vacuous"
                return report
            self._partition(report, EnumerationQuery(n, t), bound_Q(n, t).value, build_H(n, t),
                            CACTUS_CASES, classify_cactus_case)
        except SomborError as e:
            logger.error(f"cacti partition n={n}, t={t} failed: {e}")
            report.status = "error"
            report.error = CellError(kind=e.kind, message=str(e))
        finally:
            report.elapsed_seconds = time.perf_counter() - started
        return report

    def _partition(self, report: PartitionReport, query: EnumerationQuery, bound: float, extremal: Graph,
                   case_table: List[Tuple[str, str, bool]], classify: Callable[[Graph], Optional[str]]) -> None:
        report.bound_value = bound
        cases: Dict[str, PartitionCase] = {
            name: PartitionCase(name=name, hypothesis=hypothesis, strict=strict)
            for name, hypothesis, strict in case_table
        }
        slack = self.tolerance * max(1.0, abs(bound))

        for g in self.enumerator.enumerate(query):
            report.enumerated_count += 1
            form = canonical_form(g).text()
            name = classify(g)
            if name is None:
                report.uncovered.append(form)
                continue

            case = cases[name]
            value = sombor_index(g).value
            case.count += 1
            case.max_value = value if case.max_value is None else max(case.max_value, value)

            if case.strict:
                if value >= bound - slack:
                    case.violations.append(form)
            elif value > bound + slack:
                case.violations.append(form)
            elif abs(value - bound) <= slack:
                report.equality_graphs.append(form)
                if not are_isomorphic(g, extremal):
                    case.violations.append(form)

        report.cases = list(cases.values())
        if report.enumerated_count == 0:
            report.status = "vacuous"
            return
        violations = sum(len(case.violations) for case in report.cases)
        if report.uncovered:
            logger.warning(f"{len(report.uncovered)} graphs match no case for {report.family} {report.params}")
        report.status = "fail" if violations or report.uncovered else "pass"
        log = logger.success if report.status == "pass" else logger.warning
        log(f"{report.family} partition {report.params}: "
            + ", ".join(f"{case.name}={case.count}" for case in report.cases)
            + f" -> {report.status}")


def verify_lemma_partitions(beta: int, t: int, enumerator: Optional[CactusEnumerator] = None,
                            tolerance: float = Config.TOLERANCE) -> PartitionReport:
    return PartitionVerifier(enumerator, tolerance).verify_lemma_partitions(beta, t)


def verify_pendant_partitions(n: int, t: int, enumerator: Optional[CactusEnumerator] = None,
                              tolerance: float = Config.TOLERANCE) -> PartitionReport:
    return PartitionVerifier(enumerator, tolerance).verify_pendant_partitions(n, t)
