"""Small-graph enumeration and its independent cross-check."""

from cyclemod.graph import Graph
from cyclemod.smallgraphs import (
    brute_force_two_connected,
    canonical_key,
    connected_graphs,
    two_connected_graphs,
)

# numbers of 2-connected graphs up to isomorphism, by order
EXPECTED_2CONN = {3: 1, 4: 3, 5: 10, 6: 56, 7: 468}


def test_two_connected_counts():
    for n in range(3, 8):
        assert len(two_connected_graphs(n)) == EXPECTED_2CONN[n]


def test_connected_counts_small():
    assert len(connected_graphs(3)) == 2
    assert len(connected_graphs(4)) == 6
    assert len(connected_graphs(5)) == 21


def test_canonical_key_isomorphism_invariant():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    h = Graph(4, [(0, 2), (2, 1), (1, 3), (0, 3)])  # relabeled 4-cycle
    assert canonical_key(g) == canonical_key(h)
    square_plus = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    assert canonical_key(g) != canonical_key(square_plus)


def test_brute_force_cross_checks_atlas():
    for n in (3, 4, 5):
        ours = {canonical_key(g) for g in brute_force_two_connected(n)}
        atlas = {canonical_key(g) for g in two_connected_graphs(n)}
        assert ours == atlas
