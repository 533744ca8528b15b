"""Compare enumerated Sombor maxima with the closed-form extremal bounds."""
import time
from typing import List, Optional, Tuple
from loguru import logger
from src.configurations.config import Config
from src.core.canonical import are_isomorphic, canonical_form
from src.enumeration.cactus_generator import CactusEnumerator, EnumerationQuery, get_enumerator
from src.extremal.bounds import bound_Phi, bound_Q, published_tree_pm_bound, published_unicyclic_pm_bound
from src.extremal.constructions import build_H, build_Hstar
from src.invariants.sombor import sombor_index, values_close
from src.models.errors import InvalidArgumentError, SomborError, UnsupportedSizeError
from src.models.graph import Graph
from src.models.invariants import IndexValue
from src.models.reports import CellError, VerificationReport


class ExtremalVerifier:
    def __init__(self, enumerator: Optional[CactusEnumerator] = None, tolerance: float = Config.TOLERANCE):
        self.enumerator = enumerator or get_enumerator()
        self.tolerance = tolerance

    def verify_max_cacti(self, n: int, t: int) -> VerificationReport:
        """Maximum over H(n,t) against Q(n,t) and the graph H(n,t)."""
        report = VerificationReport(theorem="max-cacti", params={"n": n, "t": t}, status="pass",
                                    informative=n < Config.THEOREM_MIN_N)
        started = time.perf_counter()
        try:
            if n < 3:
                raise InvalidArgumentError(f"max-cacti cells need n >= 3, got n={n}")
            if n > self.enumerator.max_vertices:
                raise UnsupportedSizeError("max-cacti cell", n, self.enumerator.max_vertices)
            if t < 0 or n < 2 * t + 1:
                report.status = "vacuous"
                return report
            query = EnumerationQuery(n, t)
            self._evaluate(report, query, bound_Q(n, t).value, build_H(n, t))
        except SomborError as e:
            logger.error(f"max-cacti cell n={n}, t={t} failed: {e}")
            report.status = "error"
            report.error = CellError(kind=e.kind, message=str(e))
        finally:
            report.elapsed_seconds = time.perf_counter() - started
        return report

    def verify_max_pm_cacti(self, beta: int, t: int) -> VerificationReport:
        """Maximum over perfect-matching cacti on 2β vertices against Φ(β,t) and H*(2β,t)."""
        report = VerificationReport(theorem="max-pm-cacti", params={"beta": beta, "t": t}, status="pass")
        started = time.perf_counter()
        try:
            if beta < 2:
                raise InvalidArgumentError(f"max-pm-cacti cells need β >= 2, got β={beta}")
            if 2 * beta > self.enumerator.max_vertices:
                raise UnsupportedSizeError("max-pm-cacti cell", 2 * beta, self.enumerator.max_vertices)
            if t < 0 or beta < t + 1:
                report.status = "vacuous"
                return report
            query = EnumerationQuery(2 * beta, t, require_perfect_matching=True)
            self._evaluate(report, query, bound_Phi(beta, t).value, build_Hstar(beta, t))

            published = {0: published_tree_pm_bound, 1: published_unicyclic_pm_bound}.get(t)
            if published is not None and report.max_value is not None:
                report.published_bound = published(beta)
                report.published_bound_matches = values_close(report.max_value, report.published_bound, self.tolerance)
                if not report.published_bound_matches:
                    logger.info(f"Published t={t} bound {report.published_bound:.6f} differs from "
                                f"enumerated maximum {report.max_value:.6f} at β={beta}")
        except SomborError as e:
            logger.error(f"max-pm-cacti cell β={beta}, t={t} failed: {e}")
            report.status = "error"
            report.error = CellError(kind=e.kind, message=str(e))
        finally:
            report.elapsed_seconds = time.perf_counter() - started
        return report

    def _evaluate(self, report: VerificationReport, query: EnumerationQuery, bound: float, extremal: Graph) -> None:
        scored: List[Tuple[Graph, IndexValue]] = [(g, sombor_index(g)) for g in self.enumerator.enumerate(query)]
        report.enumerated_count = len(scored)
        report.bound_value = bound
        report.extremal_graph = canonical_form(extremal).text()
        if not scored:
            report.status = "vacuous"
            return

        best = max(value.value for _, value in scored)
        scale = max(1.0, abs(bound))
        shortlist = [(g, value) for g, value in scored if values_close(value.value, best, self.tolerance)]
        extremal_pairs = sombor_index(extremal).degree_pairs

        report.max_value = best
        report.argmax = [canonical_form(g).text() for g, _ in shortlist]
        report.matches_bound = abs(best - bound) <= self.tolerance * scale
        report.bound_respected = all(value.value <= bound + self.tolerance * scale for _, value in scored)
        report.argmax_unique = len(shortlist) == 1
        # equal sums of square roots are confirmed through identical degree-pair multisets
        report.argmax_is_extremal = bool(shortlist) and all(
            value.degree_pairs == extremal_pairs and are_isomorphic(g, extremal) for g, value in shortlist
        )
        passed = report.matches_bound and report.bound_respected and report.argmax_unique and report.argmax_is_extremal
        report.status = "pass" if passed else "fail"
        log = logger.success if passed else logger.warning
        log(f"{report.theorem} {report.params}: {report.enumerated_count} graphs, max {best:.9f}, "
            f"bound {bound:.9f} -> {report.status}")


def verify_max_cacti(n: int, t: int, enumerator: Optional[CactusEnumerator] = None,
                     tolerance: float = Config.TOLERANCE) -> VerificationReport:
    return ExtremalVerifier(enumerator, tolerance).verify_max_cacti(n, t)


def verify_max_pm_cacti(beta: int, t: int, enumerator: Optional[CactusEnumerator] = None,
                        tolerance: float = Config.TOLERANCE) -> VerificationReport:
    return ExtremalVerifier(enumerator, tolerance).verify_max_pm_cacti(beta, t)

