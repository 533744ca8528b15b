"""Structural predicates: degrees, connectivity, blocks and the cactus test."""
from typing import FrozenSet, List, Sequence, Tuple
import networkx as nx
from loguru import logger
from src.models.errors import InvalidArgumentError
from src.models.graph import BlockDecomposition, Graph


def degree(g: Graph, v: int) -> int:
    """Number of edges incident to v."""
    if not isinstance(v, int) or not 0 <= v < g.n:
        raise InvalidArgumentError(f"vertex {v!r} out of range 0..{g.n - 1}")
    return len(g.adjacency[v])


def degree_sequence(g: Graph) -> Tuple[int, ...]:
    """Degrees sorted in non-increasing order."""
    return tuple(sorted((len(nbrs) for nbrs in g.adjacency), reverse=True))


def min_degree(g: Graph) -> int:
    """Smallest vertex degree, written delta(G)."""
    if g.n == 0:
        raise InvalidArgumentError("minimum degree of the empty graph is undefined")
    return min(len(nbrs) for nbrs in g.adjacency)


def is_connected(g: Graph) -> bool:
    """networkx connectivity; n <= 1 counts as connected."""
    if g.n <= 1:
        return True
    return nx.is_connected(g.to_networkx())


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components (bridges included as single-edge blocks)."""
    nx_graph = g.to_networkx()
    found = []
    for component in nx.biconnected_component_edges(nx_graph):
        edge_set = frozenset((min(u, v), max(u, v)) for u, v in component)
        vertex_set = frozenset(v for edge in edge_set for v in edge)
        found.append((vertex_set, edge_set))
    # deterministic block order, independent of the DFS start
    found.sort(key=lambda block: sorted(block[1]))
    articulation = frozenset(nx.articulation_points(nx_graph))
    return BlockDecomposition(blocks=tuple(found), articulation_vertices=articulation)


def is_cactus(g: Graph) -> bool:
    """Connected, and every block is a single edge or a cycle."""
    if not is_connected(g):
        return False
    # a cactus has at most floor(3(n-1)/2) edges; cheap rejection before the block pass
    if 2 * g.m > 3 * max(g.n - 1, 0):
        return False
    for vertex_set, edge_set in blocks(g).blocks:
        if len(edge_set) > 1 and len(edge_set) != len(vertex_set):
            return False
    return True


def cycle_count(g: Graph) -> int:
    """Cyclomatic number m - n + 1 of a connected graph."""
    if not is_connected(g):
        raise InvalidArgumentError("cycle count requires a connected graph")
    if g.n == 0:
        return 0
    return g.m - g.n + 1


def cycle_lengths(g: Graph) -> List[int]:
    """Lengths of the cycle blocks, ascending."""
    return sorted(len(vs) for vs, _ in blocks(g).cycle_blocks())


def pendant_vertices(g: Graph) -> FrozenSet[int]:
    """Vertices of degree one."""
    return frozenset(v for v in range(g.n) if len(g.adjacency[v]) == 1)


def support_vertices(g: Graph) -> FrozenSet[int]:
    """Vertices adjacent to at least one pendant vertex."""
    return frozenset(next(iter(g.adjacency[v])) for v in pendant_vertices(g))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the vertex permutation v -> perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidArgumentError(f"not a permutation of 0..{g.n - 1}: {list(perm)}")
    logger.debug(f"Relabeling graph with {g.n} vertices")
    return Graph(g.n, frozenset((perm[u], perm[v]) for u, v in g.edges))
