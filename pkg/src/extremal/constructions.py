"""Constructors for the extremal cacti H(n,t) and H*(2β,t)."""
from loguru import logger
from src.models.errors import InvalidArgumentError
from src.models.graph import Graph


def build_H(n: int, t: int) -> Graph:
    """Star on n vertices centred at 0, plus t disjoint edges among leaves 1..2t."""
    if t < 0 or n < 1:
        raise InvalidArgumentError(f"H(n,t) requires n >= 1 and t >= 0, got n={n}, t={t}")
    if n < 2 * t + 1:
        raise InvalidArgumentError(f"H(n,t) requires n >= 2t+1, got n={n}, t={t}")

    edges = [(0, leaf) for leaf in range(1, n)]
    edges += [(2 * i + 1, 2 * i + 2) for i in range(t)]
    logger.debug(f"Built H({n},{t}) with {len(edges)} edges")
    return Graph.from_edges(n, edges)


def build_Hstar(beta: int, t: int) -> Graph:
    """Centre 0 carrying one pendant vertex, t triangles and beta-t-1 pendant 2-paths."""
    if t < 0 or beta < 1:
        raise InvalidArgumentError(f"H*(2β,t) requires β >= 1 and t >= 0, got β={beta}, t={t}")
    if beta < t + 1:
        raise InvalidArgumentError(f"H*(2β,t) requires β >= t+1, got β={beta}, t={t}")

    centre = 0
    edges = [(centre, 1)]
    next_vertex = 2
    for _ in range(t):
        a, b = next_vertex, next_vertex + 1
        edges += [(centre, a), (centre, b), (a, b)]
        next_vertex += 2
    for _ in range(beta - t - 1):
        a, b = next_vertex, next_vertex + 1
        edges += [(centre, a), (a, b)]
        next_vertex += 2

    logger.debug(f"Built H*({2 * beta},{t}) with {len(edges)} edges")
    return Graph.from_edges(2 * beta, edges)
