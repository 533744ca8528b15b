"""Exhaustive generation of non-isomorphic cacti by end-block augmentation."""
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple
from loguru import logger
from src.configurations.config import Config
from src.core.canonical import canonical_form, canonical_pair
from src.invariants.matching import has_perfect_matching
from src.models.errors import InvalidArgumentError, UnsupportedSizeError
from src.models.graph import CanonicalForm, Graph


@dataclass(frozen=True)
class EnumerationQuery:
    n: int
    t: int
    require_perfect_matching: bool = False

    def __post_init__(self):
        if self.n < 1 or self.t < 0:
            raise InvalidArgumentError(f"enumeration needs n >= 1 and t >= 0, got n={self.n}, t={self.t}")
        if self.require_perfect_matching and self.n % 2:
            raise InvalidArgumentError(f"perfect matchings need an even vertex count, got n={self.n}")

    @property
    def feasible(self) -> bool:
        return self.n >= 2 * self.t + 1


class CactusEnumerator:
    """Levels H(n,t) are built from H(n-1,t) by a pendant vertex and from
    H(n-k+1,t-1) by a k-cycle, attached at every vertex; every cactus with
    n >= 2 has such a terminal block, so the levels are complete.
    """

    def __init__(self, max_vertices: int = Config.ENUMERATION_CAP):
        self.max_vertices = max_vertices
        self._levels: Dict[Tuple[int, int], Dict[CanonicalForm, Graph]] = {}

    def _check_cap(self, n: int) -> None:
        if n > self.max_vertices:
            raise UnsupportedSizeError("cactus enumeration", n, self.max_vertices)

    def level(self, n: int, t: int) -> Dict[CanonicalForm, Graph]:
        """Canonical form -> canonical representative for every cactus in H(n,t)."""
        self._check_cap(n)
        key = (n, t)
        if key in self._levels:
            return self._levels[key]

        if n < 1 or t < 0 or n < 2 * t + 1:
            found: Dict[CanonicalForm, Graph] = {}
        elif n == 1:
            found = {canonical_form(Graph(1, frozenset())): Graph(1, frozenset())}
        else:
            found = {}
            for base in self.level(n - 1, t).values():
                for v in range(base.n):
                    self._add(found, self.attach_pendant(base, v))
            if t >= 1:
                for k in range(3, n + 1):
                    for base in self.level(n - k + 1, t - 1).values():
                        for v in range(base.n):
                            self._add(found, self.attach_cycle(base, v, k))

        self._levels[key] = found
        logger.debug(f"Level H({n},{t}): {len(found)} cacti")
        return found

    @staticmethod
    def _add(found: Dict[CanonicalForm, Graph], candidate: Graph) -> None:
        form, representative = canonical_pair(candidate)
        if form not in found:
            found[form] = representative

    @staticmethod
    def attach_pendant(g: Graph, v: int) -> Graph:
        return Graph(g.n + 1, g.edges | {(v, g.n)})

    @staticmethod
    def attach_cycle(g: Graph, v: int, k: int) -> Graph:
        """Glue a k-cycle through v using k-1 new vertices."""
        new = list(range(g.n, g.n + k - 1))
        ring = [v] + new
        added = {(ring[i], ring[(i + 1) % k]) for i in range(k)}
        return Graph(g.n + k - 1, g.edges | frozenset((min(a, b), max(a, b)) for a, b in added))

    def enumerate(self, query: EnumerationQuery) -> Iterator[Graph]:
        """One representative per isomorphism class, in ascending canonical-form order."""
        self._check_cap(query.n)
        level = self.level(query.n, query.t)
        emitted = 0
        for form in sorted(level):
            graph = level[form]
            if query.require_perfect_matching and not has_perfect_matching(graph):
                continue
            emitted += 1
            yield graph
        logger.info(f"Enumerated {emitted} cacti for n={query.n}, t={query.t}"
                    f"{' with perfect matchings' if query.require_perfect_matching else ''}")

    def canonical_forms(self, query: EnumerationQuery) -> List[CanonicalForm]:
        """Canonical forms of every graph matching the query, in stream order."""
        return [canonical_form(graph) for graph in self.enumerate(query)]


_default_enumerator: Optional[CactusEnumerator] = None


def get_enumerator() -> CactusEnumerator:
    """Process-wide enumerator so memoized levels are shared between callers."""
    global _default_enumerator
    if _default_enumerator is None:
        _default_enumerator = CactusEnumerator()
    return _default_enumerator


def enumerate_cacti(query: EnumerationQuery, enumerator: Optional[CactusEnumerator] = None) -> Iterator[Graph]:
    """Stream the non-isomorphic cacti matching the query, sorted by canonical form."""
    return (enumerator or get_enumerator()).enumerate(query)
