import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from unitcodes.graph import (
    ACYCLIC,
    INFINITE,
    GraphNotConnected,
    Shape,
    UnitGraph,
    bfs_distances,
    build_unit_graph,
    diameter,
    edge_connectivity,
    edge_count_predicted,
    format_graph,
    girth,
    invariants,
    parse_graph,
    predict,
)


def test_small_edge_lists():
    assert build_unit_graph(2).edges == ((0, 1),)
    assert build_unit_graph(4).edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    g5 = build_unit_graph(5)
    assert g5.edge_count == 8
    missing = {(x, y) for x in range(5) for y in range(x + 1, 5)} - set(g5.edges)
    assert missing == {(1, 4), (2, 3)}


def test_rejects_small_n():
    with pytest.raises(ValueError):
        build_unit_graph(1)


@given(st.integers(min_value=2, max_value=150))
def test_edges_match_gcd_enumeration(n):
    assert list(build_unit_graph(n).edges) == oracles.unit_graph_edges(n)


@given(st.integers(min_value=2, max_value=1000))
@settings(deadline=None, max_examples=60)
def test_edge_count_formula(n):
    assert build_unit_graph(n).edge_count == edge_count_predicted(n)


def test_edge_count_examples():
    assert edge_count_predicted(5) == 8
    assert edge_count_predicted(8) == 16
    assert build_unit_graph(105).edge_count == 2496


def test_invariants_small():
    inv = invariants(build_unit_graph(4))
    assert (inv.connected, inv.diameter, inv.girth, inv.min_degree, inv.edge_connectivity) == (True, 2, 4, 2, 2)
    assert set(inv.bipartition) == {frozenset({0, 2}), frozenset({1, 3})}

    inv = invariants(build_unit_graph(6))
    assert (inv.connected, inv.diameter, inv.girth, inv.min_degree, inv.edge_connectivity) == (True, 3, 6, 2, 2)

    inv = invariants(build_unit_graph(3))
    assert inv.connected and inv.diameter == 2 and inv.girth is ACYCLIC


def test_edge_connectivity_examples():
    assert edge_connectivity(build_unit_graph(4)) == 2
    assert edge_connectivity(build_unit_graph(5)) == 3
    assert edge_connectivity(build_unit_graph(9)) == 5


@pytest.mark.parametrize("n", list(range(2, 41)) + [45, 48, 60])
def test_invariants_match_networkx(n):
    g = build_unit_graph(n)
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(range(n))
    inv = invariants(g)
    assert inv.diameter == nx.diameter(h)
    expected_girth = nx.girth(h)
    assert inv.girth == (ACYCLIC if expected_girth == float("inf") else expected_girth)
    assert inv.edge_connectivity == nx.edge_connectivity(h)
    assert inv.bipartite == nx.is_bipartite(h)
    assert inv.min_degree == min(d for _, d in h.degree())


@pytest.mark.parametrize("n", [5, 6, 8, 9, 10, 12, 14, 15])
def test_oracles_agree_on_small_graphs(n):
    edges = oracles.unit_graph_edges(n)
    adj = oracles.adjacency(n, edges)
    g = build_unit_graph(n)
    assert diameter(g) == oracles.diameter(adj)
    assert girth(g) == oracles.girth(n, edges)
    assert edge_connectivity(g) == oracles.edge_connectivity(n, edges)


def test_disconnected_graph_sentinels():
    g = UnitGraph(4, np.array([[0, 1], [2, 3]]))
    assert diameter(g) is INFINITE
    assert list(bfs_distances(g, 0)) == [0, 1, -1, -1]
    with pytest.raises(GraphNotConnected):
        edge_connectivity(g)
    inv = invariants(g)
    assert not inv.connected and inv.edge_connectivity is None and inv.girth is ACYCLIC


def test_girth_of_triangle_with_tail_and_hexagon():
    assert girth(UnitGraph(4, np.array([[0, 1], [0, 2], [1, 2], [2, 3]]))) == 3
    hexagon = [[i, (i + 1) % 6] for i in range(6)]
    assert girth(UnitGraph(6, np.sort(np.array(hexagon), axis=1))) == 6


def test_predict_examples():
    p = predict(25)
    assert (p.shape, p.edge_connectivity, p.diameter_bound, p.girth, p.edge_count) == (
        Shape.ODD_PRIME_POWER, 19, 2, 3, 240)
    p = predict(12)
    assert (p.shape, p.edge_connectivity, p.diameter_bound, p.girth, p.edge_count) == (
        Shape.TWO_WITH_EVEN, 4, 3, 4, 24)
    p = predict(210)
    assert p.shape is Shape.GENERAL and p.edge_count == 5040
    assert p.edge_connectivity is None and p.diameter_bound is None and p.girth is None


@pytest.mark.parametrize("n,shape", [
    (2, Shape.POWER_OF_TWO), (16, Shape.POWER_OF_TWO), (27, Shape.ODD_PRIME_POWER),
    (35, Shape.TWO_ODD_PRIMES), (20, Shape.TWO_WITH_EVEN), (105, Shape.THREE_ODD_PRIMES),
    (60, Shape.THREE_WITH_EVEN), (1155, Shape.GENERAL),
])
def test_shapes(n, shape):
    assert predict(n).shape is shape


def test_graph_format_round_trip():
    g = build_unit_graph(7)
    text = format_graph(g)
    assert text.splitlines()[0] == f"n 7 {g.edge_count}"
    assert parse_graph(text) == g
    assert format_graph(build_unit_graph(2)) == "n 2 1\n0 1\n"


def test_parse_graph_rejects_bad_header():
    with pytest.raises(ValueError):
        parse_graph("m 2 1\n0 1\n")
    with pytest.raises(ValueError):
        parse_graph("n 2 2\n0 1\n")
