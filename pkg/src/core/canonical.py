"""Canonical forms for small graphs.

The canonical labeling minimizes the graph6 adjacency bit string over the
vertex orderings reachable by individualization and refinement. Cells are
refined by iterated neighbour-colour counting, starting from degrees, so the
search tree depends only on the isomorphism class. Branching skips twins
(vertices with identical neighbourhoods up to each other), since swapping
two twins is an automorphism that fixes the current partition.
"""
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple
from loguru import logger
from src.configurations.config import Config
from src.data_processing.graph6_codec import encode_graph6
from src.models.errors import UnsupportedSizeError
from src.models.graph import CanonicalForm, Graph

Colouring = Tuple[int, ...]


def _rank(signatures: Sequence) -> Colouring:
    order = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
    return tuple(order[sig] for sig in signatures)


def _refine(g: Graph, colours: Colouring) -> Colouring:
    """Refine to the coarsest equitable partition below the given one."""
    cell_count = len(set(colours))
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[w] for w in g.adjacency[v])))
            for v in range(g.n)
        ]
        refined = _rank(signatures)
        refined_count = len(set(refined))
        if refined_count == cell_count:
            return refined
        colours, cell_count = refined, refined_count


def _individualize(colours: Colouring, v: int) -> Colouring:
    return _rank([(c, 0 if x == v else 1) for x, c in enumerate(colours)])


def _branch_candidates(g: Graph, cell: List[int]) -> List[int]:
    """One representative per twin class inside the target cell."""
    chosen: List[int] = []
    for v in cell:
        open_v = g.adjacency[v]
        closed_v = open_v | {v}
        twin = any(
            g.adjacency[u] == open_v or (g.adjacency[u] | {u}) == closed_v
            for u in chosen
        )
        if not twin:
            chosen.append(v)
    return chosen


def _bit_value(g: Graph, position: Colouring) -> int:
    """Integer whose binary digits are the relabeled graph6 bit string."""
    total_bits = g.n * (g.n - 1) // 2
    value = 0
    for u, v in g.edges:
        i, j = sorted((position[u], position[v]))
        value |= 1 << (total_bits - 1 - (j * (j - 1) // 2 + i))
    return value


def canonical_labeling(g: Graph) -> Tuple[int, ...]:
    """Return perm with perm[v] = canonical position of vertex v."""
    if g.n > Config.CANONICAL_SIZE_CAP:
        raise UnsupportedSizeError("canonical form", g.n, Config.CANONICAL_SIZE_CAP)
    if g.n == 0:
        return ()

    best_value: Optional[int] = None
    best_position: Optional[Colouring] = None
    leaves = 0
    stack = [_refine(g, _rank([len(nbrs) for nbrs in g.adjacency]))]

    while stack:
        colours = stack.pop()
        if len(set(colours)) == g.n:
            leaves += 1
            value = _bit_value(g, colours)
            if best_value is None or value < best_value:
                best_value, best_position = value, colours
            continue

        # first non-singleton cell in colour order
        counts = {}
        for c in colours:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(g.n) if colours[v] == target]
        for v in reversed(_branch_candidates(g, cell)):
            stack.append(_refine(g, _individualize(colours, v)))

    logger.debug(f"Canonical search on n={g.n}, m={g.m} visited {leaves} leaves")
    return best_position


@lru_cache(maxsize=200_000)
def canonical_form(g: Graph) -> CanonicalForm:
    """graph6 key of the canonical relabeling; equal keys mean isomorphic graphs."""
    return canonical_pair(g)[0]


def canonical_pair(g: Graph) -> Tuple[CanonicalForm, Graph]:
    """Canonical form together with the relabeled representative it encodes."""
    representative = canonical_graph(g)
    return CanonicalForm(encode_graph6(representative).encode("ascii")), representative


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled representative of g's isomorphism class."""
    position = canonical_labeling(g)
    return Graph(g.n, frozenset((position[u], position[v]) for u, v in g.edges))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Compare canonical forms after cheap invariant checks."""
    if g1.n != g2.n or g1.m != g2.m:
        # still enforce the size cap on both inputs
        for g in (g1, g2):
            if g.n > Config.CANONICAL_SIZE_CAP:
                raise UnsupportedSizeError("canonical form", g.n, Config.CANONICAL_SIZE_CAP)
        return False
    return canonical_form(g1) == canonical_form(g2)
