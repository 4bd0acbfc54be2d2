"""Graph value type and basic algorithms."""

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from cyclemod.errors import InvalidArgument
from cyclemod.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    components,
    contract_set,
    cycle_graph,
    edges_between,
    format_graph,
    induced,
    is_bipartite,
    is_connected,
    parse_graph,
    shortest_path,
)


def random_graph(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, picks)


graphs = st.composite(random_graph)()


def test_construction_and_adjacency():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (1, 2)])  # duplicate merged
    assert g.m == 3
    assert g.has_edge(2, 1)
    assert not g.has_edge(0, 3)
    assert g.degree(1) == 2
    assert g.min_degree() == 1


def test_rejects_bad_edges():
    with pytest.raises(InvalidArgument):
        Graph(3, [(0, 3)])
    with pytest.raises(InvalidArgument):
        Graph(3, [(1, 1)])


def test_with_and_without_edge_are_persistent():
    g = complete_graph(3)
    g2 = g.without_edge(0, 1)
    assert g.has_edge(0, 1) and not g2.has_edge(0, 1)
    assert g2.with_edge(0, 1) == g


def test_induced_relabels_and_maps_back():
    g = complete_graph(5)
    sub, to_orig = induced(g, {1, 3, 4})
    assert sub.n == 3 and sub.m == 3
    assert to_orig == [1, 3, 4]


def test_contract_set_merges_parallel_edges():
    g = cycle_graph(5)
    h, to_new, s = contract_set(g, {1, 2})
    assert h.n == 4
    assert to_new[1] == to_new[2] == s
    assert h.has_edge(to_new[0], s) and h.has_edge(to_new[3], s)


def test_bipartite_detection():
    assert is_bipartite(complete_bipartite(2, 3)) is not None
    assert is_bipartite(cycle_graph(5)) is None
    sides = is_bipartite(cycle_graph(6))
    assert sorted(len(s) for s in sides) == [3, 3]


def test_connectivity_and_components():
    g = Graph(5, [(0, 1), (2, 3)])
    assert not is_connected(g)
    comps = components(g)
    assert sorted(map(sorted, comps)) == [[0, 1], [2, 3], [4]]
    assert is_connected(complete_graph(4), ignore=(0,))


def test_shortest_path_with_forbidden():
    g = cycle_graph(6)
    assert shortest_path(g, 0, 3) in ((0, 1, 2, 3), (0, 5, 4, 3))
    assert shortest_path(g, 0, 3, forbidden=(1,)) == (0, 5, 4, 3)
    assert shortest_path(g, 0, 2, forbidden=(1,), forbidden_edges=((3, 4),)) is None


def test_edges_between():
    g = complete_bipartite(2, 3)
    assert edges_between(g, {0, 1}, {2, 3, 4})[0] == 6
    assert edges_between(g, {0}, {1}) == (0, [])


def test_parse_format_round_trip_explicit():
    text = "p 4 3\n0 1\n1 2\n2 3\n"
    g = parse_graph(text)
    assert g == Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert parse_graph(format_graph(g)) == g


def test_parse_rejects_garbage():
    with pytest.raises(InvalidArgument):
        parse_graph("p x y\n")
    with pytest.raises(InvalidArgument):
        parse_graph("p 2 1\n0 5\n")


@given(graphs)
def test_parse_format_round_trip(g):
    assert parse_graph(format_graph(g)) == g


@given(graphs)
def test_components_match_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    ours = sorted(sorted(c) for c in components(g))
    theirs = sorted(sorted(c) for c in nx.connected_components(G))
    assert ours == theirs


@given(graphs)
def test_bipartite_matches_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    assert (is_bipartite(g) is not None) == nx.is_bipartite(G)
