"""Cycle-family extraction: witness finding, branch dispatch, residues."""

import pytest

from cyclemod.errors import HypothesisNotMet
from cyclemod.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
)
from cyclemod.cycles import (
    OddCycleWitness,
    all_residues_mod_k,
    branch_of,
    check_witness,
    cycle_spectrum,
    cycles_2conn_not_3conn,
    cycles_bipartite_oracle,
    cycles_with_odd_cycle,
    find_k_cycles,
    find_nonsep_induced_odd_cycle,
    oracle_cycles,
    split_parity,
)
from cyclemod.families import CONSECUTIVE, LENGTH
from cyclemod.paths import ExtractionTrace


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def wheel5():
    """C5 plus a hub (vertex 5)."""
    rim = [(i, (i + 1) % 5) for i in range(5)]
    return Graph(6, rim + [(i, 5) for i in range(5)])


def two_k4_glued_on_edge():
    e1 = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    verts = [0, 1, 4, 5]
    e2 = [(verts[i], verts[j]) for i in range(4) for j in range(i + 1, 4)]
    return Graph(6, e1 + e2)


def circulant_13_1_5():
    return Graph(13, [(min(i, (i + s) % 13), max(i, (i + s) % 13))
                      for i in range(13) for s in (1, 5)])


def test_split_parity():
    for k in range(1, 10):
        l, phi = split_parity(k)
        assert k == 2 * l - 1 + phi
        assert phi + k % 2 == 1


def test_cycle_spectrum_frozen_values():
    assert cycle_spectrum(cycle_graph(5)) == {5}
    assert cycle_spectrum(complete_graph(4)) == {3, 4}
    assert cycle_spectrum(complete_graph(5)) == {3, 4, 5}
    assert cycle_spectrum(wheel5()) == {3, 4, 5, 6}
    assert cycle_spectrum(petersen()) == {5, 6, 8, 9}
    assert cycle_spectrum(complete_bipartite(4, 4)) == {4, 6, 8}


def test_oracle_cycles_prefers_consecutive():
    fam = oracle_cycles(complete_graph(5), 3)
    assert fam.cls.kind == CONSECUTIVE and sorted(fam.lengths()) == [3, 4, 5]
    fam = oracle_cycles(complete_bipartite(4, 4), 3)
    assert fam.cls.kind == LENGTH and sorted(fam.lengths()) == [4, 6, 8]
    assert oracle_cycles(cycle_graph(5), 2) is None


# -- the odd-cycle witness ---------------------------------------------------


def test_witness_on_k4():
    w = find_nonsep_induced_odd_cycle(complete_graph(4))
    assert w.kind == "triangle" and len(w.cycle) == 3
    assert check_witness(complete_graph(4), w) == (True, None)


def test_witness_on_wheel():
    w = find_nonsep_induced_odd_cycle(wheel5())
    assert len(w.cycle) == 3 and 5 in w.cycle  # hub triangles come first


def test_witness_absent_on_bipartite():
    assert find_nonsep_induced_odd_cycle(complete_bipartite(3, 3)) is None


def test_witness_long_cycles():
    w = find_nonsep_induced_odd_cycle(petersen())
    assert len(w.cycle) == 5
    w = find_nonsep_induced_odd_cycle(circulant_13_1_5())
    assert len(w.cycle) == 5
    assert check_witness(circulant_13_1_5(), w) == (True, None)


def test_check_witness_rejections():
    g = complete_graph(5)
    ok, reason = check_witness(g, OddCycleWitness((0, 1, 2, 3), "triangle"))
    assert not ok and "odd" in reason
    ok, reason = check_witness(g, OddCycleWitness((0, 1, 2), "two-neighbor"))
    assert not ok  # triangle declared as the wrong kind
    # separating cycle: two triangles sharing one path
    h = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (5, 0)])
    ok, reason = check_witness(h, OddCycleWitness((0, 3, 4, 5), "triangle"))
    assert not ok


# -- branch extractors -------------------------------------------------------


def test_branch_of():
    assert branch_of(two_k4_glued_on_edge()) == "I"
    assert branch_of(complete_graph(4)) == "II"
    assert branch_of(complete_bipartite(3, 3)) == "III"


def test_branch_i_glued_k4s():
    fam = cycles_2conn_not_3conn(two_k4_glued_on_edge(), 2)
    assert fam.cls.kind == LENGTH
    assert sorted(fam.lengths()) == [4, 6]


def test_branch_i_rejects_3_connected():
    with pytest.raises(HypothesisNotMet):
        cycles_2conn_not_3conn(complete_graph(4), 2)


def test_branch_i_k1_cycle():
    fam = cycles_2conn_not_3conn(cycle_graph(5), 1)
    assert fam.k == 1 and fam.lengths() == [5]


def test_branch_ii_examples():
    fam = cycles_with_odd_cycle(complete_graph(4), 2)
    assert sorted(fam.lengths()) == [3, 4]
    fam = cycles_with_odd_cycle(complete_graph(5), 3)
    assert fam.cls.kind in (CONSECUTIVE, LENGTH) and fam.k == 3
    fam = cycles_with_odd_cycle(wheel5(), 2)
    a, b = sorted(fam.lengths())
    assert b - a in (1, 2)


def test_branch_ii_long_witness_constructive():
    trace = ExtractionTrace()
    fam = cycles_with_odd_cycle(circulant_13_1_5(), 3, trace=trace)
    assert fam.k == 3 and not trace.constructive_gap


def test_branch_iii_examples():
    fam = cycles_bipartite_oracle(complete_bipartite(4, 4), 3)
    assert fam.cls.kind == LENGTH and sorted(fam.lengths()) == [4, 6, 8]
    with pytest.raises(HypothesisNotMet):
        cycles_bipartite_oracle(complete_bipartite(3, 3), 3)  # degree 3 < 4
    with pytest.raises(HypothesisNotMet):
        cycles_bipartite_oracle(complete_graph(4), 2)  # not bipartite


# -- dispatcher and residues -------------------------------------------------


def test_find_k_cycles_branches():
    fam, branch = find_k_cycles(complete_graph(4), 2)
    assert branch == "II" and sorted(fam.lengths()) == [3, 4]
    fam, branch = find_k_cycles(two_k4_glued_on_edge(), 2)
    assert branch == "I" and sorted(fam.lengths()) == [4, 6]
    fam, branch = find_k_cycles(complete_bipartite(4, 4), 3)
    assert branch == "III" and sorted(fam.lengths()) == [4, 6, 8]


def test_find_k_cycles_hypothesis():
    with pytest.raises(HypothesisNotMet):
        find_k_cycles(complete_graph(4), 3)  # degree 3 < 4
    with pytest.raises(HypothesisNotMet):
        find_k_cycles(Graph(4, [(0, 1), (1, 2), (2, 3)]), 1)  # not 2-connected


def test_all_residues_k5():
    out = all_residues_mod_k(complete_graph(5), 3)
    assert sorted(out.keys()) == [0, 1, 2]
    for r, cyc in out.items():
        assert len(cyc) % 3 == r


def test_all_residues_even_k_rejected():
    with pytest.raises(HypothesisNotMet):
        all_residues_mod_k(complete_graph(6), 4)
