"""Tests for the Sombor index."""
import math
import networkx as nx
import numpy as np
import pytest
from src.enumeration.cactus_generator import EnumerationQuery, get_enumerator
from src.invariants.sombor import (
    degree_pair_multiset, edge_term, index_from_degree_pairs, index_values_equal, sombor_index, values_close,
)
from src.models.errors import InvalidArgumentError
from src.models.graph import Graph


@pytest.mark.parametrize("du, dv, expected", [
    (1, 1, math.sqrt(2)),
    (3, 4, 5.0),
    (2, 2, 2 * math.sqrt(2)),
])
def test_edge_term(du, dv, expected):
    assert edge_term(du, dv) == pytest.approx(expected, rel=1e-15)
    assert edge_term(dv, du) == edge_term(du, dv)


def test_edge_term_rejects_zero_degree():
    with pytest.raises(InvalidArgumentError):
        edge_term(0, 3)


@pytest.mark.parametrize("g, expected", [
    (Graph.from_edges(2, [(0, 1)]), math.sqrt(2)),
    (Graph.from_networkx(nx.cycle_graph(3)), 6 * math.sqrt(2)),
    (Graph.from_networkx(nx.star_graph(4)), 4 * math.sqrt(17)),
    (Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]), math.sqrt(10) + 2 * math.sqrt(13) + math.sqrt(8)),
])
def test_sombor_index_examples(g, expected):
    result = sombor_index(g)
    assert result.value == pytest.approx(expected, rel=1e-12)
    assert result.term_count == g.m


def test_empty_graphs_have_zero_index():
    assert sombor_index(Graph(3, frozenset())).value == 0.0


def test_degree_pairs_determine_the_value():
    paw = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    pairs = degree_pair_multiset(paw)
    assert pairs == ((2, 2), (3, 1), (3, 2), (3, 2))
    assert index_from_degree_pairs(pairs) == pytest.approx(sombor_index(paw).value, rel=1e-15)


def test_custom_weight_turns_into_another_index():
    # first Zagreb-like weight d_u + d_v sums to sum of squared degrees
    g = Graph.from_networkx(nx.petersen_graph())
    assert sombor_index(g, weight=lambda a, b: a + b).value == pytest.approx(90.0)


def test_value_is_independent_of_labeling():
    g = Graph.from_networkx(nx.gnm_random_graph(10, 18, seed=5))
    h = Graph.from_networkx(nx.relabel_nodes(g.to_networkx(), {v: 9 - v for v in range(10)}))
    assert index_values_equal(sombor_index(g), sombor_index(h))
    assert sombor_index(g).degree_pairs == sombor_index(h).degree_pairs


def test_values_close_is_relative():
    assert values_close(1e6, 1e6 + 1e-4)
    assert not values_close(1.0, 1.0 + 1e-8)
    assert values_close(0.0, 1e-10)


def small_graphs():
    enumerator = get_enumerator()
    for n in range(2, 9):
        for t in range(0, (n - 1) // 2 + 1):
            yield from enumerator.enumerate(EnumerationQuery(n, t))
    for n, m, seed in [(7, 9, 1), (10, 15, 2), (12, 30, 3)]:
        yield Graph.from_networkx(nx.gnm_random_graph(n, m, seed=seed))


def test_value_is_independent_of_edge_order():
    rng = np.random.default_rng(11)
    for g in small_graphs():
        pairs = list(degree_pair_multiset(g))
        shuffled = [pairs[i] for i in rng.permutation(len(pairs))]
        assert index_from_degree_pairs(shuffled) == pytest.approx(sombor_index(g).value, rel=1e-12, abs=1e-12)


def test_value_stays_inside_the_degree_envelope():
    for g in small_graphs():
        value = sombor_index(g).value
        assert math.sqrt(2) * g.m - 1e-12 <= value <= math.sqrt(2) * (g.n - 1) * g.m + 1e-12, g
