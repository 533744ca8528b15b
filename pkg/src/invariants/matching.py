"""Exact maximum matchings by memoized backtracking over covered-vertex sets."""
from functools import lru_cache
from typing import Optional, Tuple
from loguru import logger
from src.configurations.config import Config
from src.models.errors import UnsupportedSizeError
from src.models.graph import Edge, Graph
from src.models.invariants import Matching


def maximum_matching(g: Graph) -> Matching:
    """Exact maximum matching by search over covered-vertex bitmasks."""
    if g.n > Config.MATCHING_SIZE_CAP:
        raise UnsupportedSizeError("maximum matching", g.n, Config.MATCHING_SIZE_CAP)

    adjacency = [sorted(nbrs) for nbrs in g.adjacency]
    full = (1 << g.n) - 1

    @lru_cache(maxsize=None)
    def best(covered: int) -> Tuple[Edge, ...]:
        if covered == full:
            return ()
        # lowest vertex not yet decided
        v = (~covered & (covered + 1)).bit_length() - 1
        # leave v unmatched
        result = best(covered | (1 << v))
        for w in adjacency[v]:
            if not covered >> w & 1:
                candidate = ((v, w),) + best(covered | (1 << v) | (1 << w))
                if len(candidate) > len(result):
                    result = candidate
                    if 2 * len(result) >= g.n - bin(covered).count("1"):
                        break
        return result

    pairs = best(0)
    logger.debug(f"Maximum matching of size {len(pairs)} on n={g.n}")
    return Matching(frozenset(pairs))


def has_perfect_matching(g: Graph, matching: Optional[Matching] = None) -> bool:
    """True when a maximum matching covers every vertex."""
    if g.n % 2:
        if g.n > Config.MATCHING_SIZE_CAP:
            raise UnsupportedSizeError("maximum matching", g.n, Config.MATCHING_SIZE_CAP)
        return False
    matching = matching or maximum_matching(g)
    return 2 * matching.size == g.n
