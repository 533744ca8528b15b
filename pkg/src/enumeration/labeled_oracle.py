"""Brute-force labeled-graph oracle used to cross-check the cactus generator."""
from itertools import combinations
from typing import FrozenSet, Optional, Tuple
from loguru import logger
from src.configurations.config import Config
from src.core.canonical import canonical_form
from src.core.graph_structure import is_cactus, is_connected
from src.enumeration.cactus_generator import EnumerationQuery
from src.invariants.matching import has_perfect_matching
from src.models.errors import UnsupportedSizeError
from src.models.graph import CanonicalForm, Graph


def _degrees_non_increasing(n: int, edge_set) -> bool:
    degrees = [0] * n
    for u, v in edge_set:
        degrees[u] += 1
        degrees[v] += 1
    return all(degrees[i] >= degrees[i + 1] for i in range(n - 1))


def labeled_oracle(query: EnumerationQuery, cap: Optional[int] = None) -> Tuple[int, FrozenSet[CanonicalForm]]:
    """Scan every labeled edge set with m = n-1+t edges and collect cactus classes.

    Only labelings whose degrees are non-increasing in vertex id are kept;
    every graph has such a labeling, so no class is lost.
    """
    cap = Config.ORACLE_CAP if cap is None else cap
    if query.n > cap:
        raise UnsupportedSizeError("labeled oracle", query.n, cap)

    m = query.n - 1 + query.t
    pairs = list(combinations(range(query.n), 2))
    forms = set()
    scanned = 0
    if 0 <= m <= len(pairs):
        for edge_set in combinations(pairs, m):
            scanned += 1
            if not _degrees_non_increasing(query.n, edge_set):
                continue
            g = Graph(query.n, frozenset(edge_set))
            if not is_connected(g) or not is_cactus(g):
                continue
            if query.require_perfect_matching and not has_perfect_matching(g):
                continue
            forms.add(canonical_form(g))

    logger.info(f"Oracle scanned {scanned} labeled edge sets for n={query.n}, t={query.t}: {len(forms)} classes")
    return len(forms), frozenset(forms)
