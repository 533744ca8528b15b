"""Tests for degrees, connectivity, block decomposition and the cactus test."""
import networkx as nx
import numpy as np
import pytest
from src.core.graph_structure import (
    blocks, cycle_count, cycle_lengths, degree, degree_sequence, is_cactus, is_connected,
    min_degree, pendant_vertices, relabel, support_vertices,
)
from src.enumeration.cactus_generator import EnumerationQuery, get_enumerator
from src.models.errors import InvalidArgumentError
from src.models.graph import Graph


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


TRIANGLE_WITH_PENDANT = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
BUTTERFLY = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def test_graph_normalizes_and_validates_edges():
    g = Graph(3, frozenset({(2, 0), (1, 2)}))
    assert g.edges == frozenset({(0, 2), (1, 2)})
    assert g.neighbors(2) == frozenset({0, 1})

    with pytest.raises(InvalidArgumentError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(InvalidArgumentError):
        Graph(3, frozenset({(0, 3)}))
    with pytest.raises(InvalidArgumentError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_networkx_conversion_keeps_edges():
    g = Graph.from_networkx(nx.petersen_graph())
    assert (g.n, g.m) == (10, 15)
    assert Graph.from_networkx(g.to_networkx()) == g


def test_degrees():
    assert degree(TRIANGLE_WITH_PENDANT, 0) == 3
    assert degree_sequence(TRIANGLE_WITH_PENDANT) == (3, 2, 2, 1)
    assert min_degree(cycle(5)) == 2
    with pytest.raises(InvalidArgumentError):
        degree(TRIANGLE_WITH_PENDANT, 4)
    with pytest.raises(InvalidArgumentError):
        min_degree(Graph(0, frozenset()))


def test_connectivity():
    assert is_connected(Graph(0, frozenset()))
    assert is_connected(Graph(1, frozenset()))
    assert is_connected(path(6))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_blocks_of_butterfly():
    decomposition = blocks(BUTTERFLY)
    assert len(decomposition.blocks) == 2
    assert decomposition.articulation_vertices == frozenset({0})
    assert len(decomposition.cycle_blocks()) == 2


def test_bridges_are_single_edge_blocks():
    decomposition = blocks(TRIANGLE_WITH_PENDANT)
    sizes = sorted(len(edges) for _, edges in decomposition.blocks)
    assert sizes == [1, 3]


@pytest.mark.parametrize("g, expected", [
    (path(5), True),
    (cycle(6), True),
    (BUTTERFLY, True),
    (TRIANGLE_WITH_PENDANT, True),
    (Graph.from_networkx(nx.complete_graph(4)), False),
    (Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]), False),  # diamond
    (Graph.from_edges(4, [(0, 1), (2, 3)]), False),
    (Graph(1, frozenset()), True),
])
def test_is_cactus(g, expected):
    assert is_cactus(g) is expected


def test_two_cycles_sharing_an_edge_is_not_a_cactus():
    # theta graph: two 4-cycles glued along the path 0-1
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 0)])
    assert not is_cactus(g)


def test_cycle_count_and_lengths():
    assert cycle_count(path(4)) == 0
    assert cycle_count(BUTTERFLY) == 2
    assert cycle_lengths(BUTTERFLY) == [3, 3]
    four_and_three = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 0)])
    assert cycle_lengths(four_and_three) == [3, 4]
    with pytest.raises(InvalidArgumentError):
        cycle_count(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_pendant_and_support_vertices():
    assert pendant_vertices(TRIANGLE_WITH_PENDANT) == frozenset({3})
    assert support_vertices(TRIANGLE_WITH_PENDANT) == frozenset({0})
    assert pendant_vertices(cycle(4)) == frozenset()
    assert support_vertices(path(4)) == frozenset({1, 2})


def test_relabel():
    g = relabel(TRIANGLE_WITH_PENDANT, [3, 2, 1, 0])
    assert g.edges == frozenset({(2, 3), (1, 3), (1, 2), (0, 3)})
    with pytest.raises(InvalidArgumentError):
        relabel(TRIANGLE_WITH_PENDANT, [0, 0, 1, 2])


def small_cacti():
    enumerator = get_enumerator()
    for n in range(1, 9):
        for t in range(0, (n - 1) // 2 + 1):
            yield from enumerator.enumerate(EnumerationQuery(n, t))


RANDOM_GRAPHS = [Graph.from_networkx(nx.gnm_random_graph(n, m, seed=seed))
                 for n, m, seed in [(6, 4, 1), (8, 10, 2), (9, 8, 3), (10, 20, 4), (12, 11, 5)]]


def test_handshake():
    for g in list(small_cacti()) + RANDOM_GRAPHS:
        assert sum(degree(g, v) for v in range(g.n)) == 2 * g.m


def test_cycle_blocks_match_cycle_count():
    for g in small_cacti():
        assert len(blocks(g).cycle_blocks()) == cycle_count(g), g


def test_cactus_test_ignores_labels():
    rng = np.random.default_rng(7)
    for g in list(small_cacti()) + RANDOM_GRAPHS:
        perm = rng.permutation(g.n).tolist()
        assert is_cactus(relabel(g, perm)) == is_cactus(g)


def test_connectivity_agrees_with_networkx():
    for g in RANDOM_GRAPHS:
        assert is_connected(g) == nx.is_connected(g.to_networkx())
