"""Sombor index: the sum over edges of sqrt(d_u^2 + d_v^2)."""
import math
from collections import Counter
from typing import Callable, Iterable, Optional, Tuple
from src.configurations.config import Config
from src.models.errors import InvalidArgumentError
from src.models.graph import Graph
from src.models.invariants import DegreePair, IndexValue

DegreePairWeight = Callable[[int, int], float]


def edge_term(du: int, dv: int) -> float:
    """sqrt(du^2 + dv^2) for one edge."""
    if du < 1 or dv < 1:
        raise InvalidArgumentError(f"edge endpoints have degree >= 1, got ({du}, {dv})")
    return math.sqrt(du * du + dv * dv)


def degree_pair_multiset(g: Graph) -> Tuple[DegreePair, ...]:
    """Sorted (larger, smaller) degree pairs, one per edge."""
    degrees = [len(nbrs) for nbrs in g.adjacency]
    return tuple(sorted(
        (max(degrees[u], degrees[v]), min(degrees[u], degrees[v])) for u, v in g.edges
    ))


def index_from_degree_pairs(pairs: Iterable[DegreePair], weight: DegreePairWeight = edge_term) -> float:
    """Compensated sum of the weight over a degree-pair multiset."""
    return math.fsum(weight(du, dv) for du, dv in pairs)


def sombor_index(g: Graph, weight: Optional[DegreePairWeight] = None) -> IndexValue:
    """Sum the per-edge terms in lexicographic edge order.

    A different weight turns this into any other degree-pair index; the
    multiset is reported either way.
    """
    weight = weight or edge_term
    degrees = [len(nbrs) for nbrs in g.adjacency]
    value = math.fsum(weight(degrees[u], degrees[v]) for u, v in g.sorted_edges())
    return IndexValue(value=value, term_count=g.m, degree_pairs=degree_pair_multiset(g))


def values_close(a: float, b: float, tolerance: float = Config.TOLERANCE) -> bool:
    """Relative comparison scaled by max(1, |a|, |b|)."""
    return abs(a - b) <= tolerance * max(1.0, abs(a), abs(b))


def index_values_equal(a: IndexValue, b: IndexValue, tolerance: float = Config.TOLERANCE) -> bool:
    """Exact when the degree-pair multisets agree, tolerance-based otherwise."""
    if a.degree_pairs == b.degree_pairs:
        return True
    return values_close(a.value, b.value, tolerance)
