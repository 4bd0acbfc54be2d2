"""Families of k cycles with controlled lengths in 2-connected graphs of
minimum degree >= k + 1: every graph yields either k cycles of consecutive
lengths or k cycles satisfying the length condition.

Dispatch:

* k = 1: any cycle.
* not 3-connected: split along a 2-cut, extract path families on both
  sides, and glue them into cycles (branch I).
* 3-connected and non-bipartite: find a non-separating induced odd cycle
  witness and fan path families around it (branch II).
* 3-connected bipartite: the exhaustive oracle assembles the family from
  the cycle spectrum (branch III; by design, not a constructive gap).

With k odd, either output covers every residue class of cycle lengths
modulo k, which all_residues_mod_k packages up.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    HypothesisNotMet,
    InvalidArgument,
    InvalidWitness,
)
from .graph import components, contract_set, induced, is_bipartite, is_connected
from .decompose import (
    block_cut_tree,
    is_2_connected,
    vertex_connectivity_at_least,
)
from .families import (
    CONSECUTIVE,
    LENGTH,
    SEMI,
    FamilyClass,
    close_cycle,
    glue_two_sided_length,
    glue_two_sided_semilength,
    join_paths,
    make_cycle_family,
    make_path_family,
    odd_cycle_fan,
    odd_cycle_x_fan,
    residues_mod_k,
    validate_cycle_family,
)
from .oraclekern import cycle_length_set, find_cycle_with_length
from .paths import (
    ExtractionTrace,
    _BRANCH_ERRORS,
    _engine,
    _fits,
    _map_family,
    _path_within,
    find_paths_flex,
)

BRANCH_TWO_CUT = "two-cut"
BRANCH_ODD_CYCLE = "odd-cycle"
BRANCH_BIPARTITE = "bipartite-oracle"


def split_parity(k):
    """(l, phi) with k = 2l - 1 + phi, phi = 0 for odd k and 1 for even k."""
    if k < 1:
        raise InvalidArgument("k must be positive")
    phi = 0 if k % 2 == 1 else 1
    return (k + 1 - phi) // 2, phi


def cycle_spectrum(g, budget=None):
    """Exact set of cycle lengths of g."""
    return cycle_length_set(g, budget=budget)


def oracle_cycles(g, k, budget=None):
    """k cycles of consecutive lengths (preferred) or satisfying the length
    condition, assembled from the exact cycle spectrum; None if neither
    pattern is realizable."""
    lengths = cycle_spectrum(g, budget=budget)
    top = max(lengths, default=0)
    pick = None
    for a in range(3, top + 1):
        if all(a + i in lengths for i in range(k)):
            pick = (CONSECUTIVE, [a + i for i in range(k)])
            break
    if pick is None:
        for a in range(3, top + 1):
            if all(a + 2 * i in lengths for i in range(k)):
                pick = (LENGTH, [a + 2 * i for i in range(k)])
                break
    if pick is None:
        return None
    kind, want = pick
    members = []
    for length in want:
        c = find_cycle_with_length(g, length)
        if c is None:
            raise InvalidWitness(f"cycle length {length} in the spectrum but not realizable")
        members.append(c)
    fam = make_cycle_family(members, cls=FamilyClass(kind))
    return validate_cycle_family(g, fam)


# -- the odd-cycle witness ---------------------------------------------------

WITNESS_TRIANGLE = "triangle"
WITNESS_TWO_NEIGHBOR = "two-neighbor"


@dataclass(frozen=True)
class OddCycleWitness:
    """A non-separating induced odd cycle, in cyclic vertex order, together
    with which property makes it usable: a triangle, or the rule that every
    non-cut vertex of G - V(C) sends at most 2 edges to C, with equality
    only toward the two neighbors u+, u- of a common vertex u."""

    cycle: tuple
    kind: str


def _cyclic_order(g, verts):
    """Vertices of an induced cycle in cyclic order (or None)."""
    verts = sorted(verts)
    vset = set(verts)
    for v in verts:
        if len(g.adj[v] & vset) != 2:
            return None
    start = verts[0]
    order = [start]
    prev = None
    cur = start
    while True:
        nxts = sorted(w for w in g.adj[cur] & vset if w != prev)
        if not nxts:
            return None
        prev, cur = cur, nxts[0]
        if cur == start:
            break
        order.append(cur)
        if len(order) > len(verts):
            return None
    return tuple(order) if len(order) == len(verts) else None


def _nonseparating(g, verts):
    rest = set(range(g.n)) - set(verts)
    if not rest:
        return True
    return is_connected(g, ignore=verts)


def check_witness(g, w):
    """(True, None) or (False, reason) for an OddCycleWitness."""
    c = w.cycle
    if len(c) < 3 or len(c) % 2 == 0:
        return False, "not an odd cycle"
    cset = set(c)
    if len(cset) != len(c):
        return False, "repeated vertex"
    closed = list(c) + [c[0]]
    for a, b in zip(closed, closed[1:]):
        if not g.has_edge(a, b):
            return False, f"missing cycle edge {a}-{b}"
    for v in cset:
        if len(g.adj[v] & cset) != 2:
            return False, f"not induced at {v}"
    if not _nonseparating(g, c):
        return False, "separating"
    if w.kind == WITNESS_TRIANGLE:
        if len(c) != 3:
            return False, "triangle witness of length != 3"
        return True, None
    if w.kind != WITNESS_TWO_NEIGHBOR:
        return False, f"unknown witness kind {w.kind!r}"
    rest = set(range(g.n)) - cset
    if rest:
        sub, to_orig = induced(g, rest)
        cuts = set()
        if is_connected(sub):
            cuts = {to_orig[v] for v in block_cut_tree(sub).cut_vertices}
        else:
            for comp in components(sub):
                if len(comp) >= 2:
                    csub, cto = induced(sub, comp)
                    cuts |= {to_orig[cto[v]] for v in block_cut_tree(csub).cut_vertices}
        n_c = len(c)
        for v in rest - cuts:
            hits = g.adj[v] & cset
            if len(hits) > 2:
                return False, f"vertex {v} sends {len(hits)} edges to the cycle"
            if len(hits) == 2:
                i, j = sorted(c.index(h) for h in hits)
                if (j - i) % n_c != 2 and (i - j) % n_c != 2:
                    return False, f"vertex {v} hits two non-antipodal-of-a-common-u vertices"
    return True, None


def find_nonsep_induced_odd_cycle(g):
    """Smallest (by length, then lexicographic vertex set) non-separating
    induced odd cycle satisfying the triangle or two-neighbor property,
    or None (e.g. for bipartite inputs).

    A usable witness exists whenever G is 3-connected, non-bipartite and
    delta(G) >= 4.
    """
    for length in range(3, g.n + 1, 2):
        for verts in combinations(range(g.n), length):
            order = _cyclic_order(g, verts)
            if order is None or not _nonseparating(g, verts):
                continue
            kind = WITNESS_TRIANGLE if length == 3 else WITNESS_TWO_NEIGHBOR
            w = OddCycleWitness(order, kind)
            ok, _reason = check_witness(g, w)
            if ok:
                return w
    return None


# -- branch I: 2-connected but not 3-connected -------------------------------


def _two_separations(g):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            comps = components(g, ignore=(u, v))
            if len(comps) > 1:
                a = set(comps[0]) | {u, v}
                b = (set(range(g.n)) - set(comps[0])) | {u, v}
                yield a, b, u, v


def cycles_2conn_not_3conn(g, k, trace=None):
    """k cycles satisfying the length condition, glued across a 2-cut."""
    if trace is None:
        trace = ExtractionTrace()
    if not is_2_connected(g):
        raise HypothesisNotMet("need a 2-connected graph")
    if g.n >= 4 and vertex_connectivity_at_least(g, 3):
        raise HypothesisNotMet("graph is 3-connected; no 2-cut to split at")
    if g.min_degree() < k + 1:
        raise HypothesisNotMet(f"need minimum degree {k + 1}, got {g.min_degree()}")
    l, phi = split_parity(k)
    last_error = None
    for a_verts, b_verts, x, y in _two_separations(g):
        try:
            fam = _glue_sides(g, k, l, phi, a_verts, b_verts, x, y, trace)
        except _BRANCH_ERRORS as exc:
            last_error = exc
            continue
        trace.record("two-cut-glue")
        return validate_cycle_family(g, fam, allowed=(LENGTH,))
    raise HypothesisNotMet(f"no 2-separation admits the glue ({last_error})")


def _side(g, verts, x, y, k_side, flex, trace):
    sub, to_orig = induced(g, verts)
    inv = {v: j for j, v in enumerate(to_orig)}
    fam = _engine(sub, inv[x], inv[y], k_side, flex, trace)
    return _map_family(fam, to_orig)


def _glue_sides(g, k, l, phi, a_verts, b_verts, x, y, trace):
    if phi == 0:
        p_fam = _side(g, a_verts, x, y, l, False, trace)
        q_fam = _side(g, b_verts, x, y, l, False, trace)
        return glue_two_sided_length(p_fam, q_fam)
    p_fam = _side(g, a_verts, x, y, l + 1, True, trace)
    if p_fam.cls.kind == LENGTH:
        q_fam = _side(g, b_verts, x, y, l, False, trace)
        return glue_two_sided_length(p_fam, q_fam)
    q_fam = _side(g, b_verts, x, y, l + 1, True, trace)
    if q_fam.cls.kind == LENGTH:
        p_short = _side(g, a_verts, x, y, l, False, trace)
        return glue_two_sided_length(q_fam, p_short)
    return glue_two_sided_semilength(p_fam, q_fam)


# -- branch II: 3-connected with an odd-cycle witness -------------------------


def cycles_with_odd_cycle(g, k, w=None, trace=None):
    """k cycles of consecutive lengths or satisfying the length condition
    in a graph with delta >= k + 1 holding a usable odd-cycle witness."""
    if trace is None:
        trace = ExtractionTrace()
    if g.min_degree() < k + 1:
        raise HypothesisNotMet(f"need minimum degree {k + 1}, got {g.min_degree()}")
    if k == 1:
        return _any_cycle(g, trace)
    if k == 2:
        fam = _two_cycles_from_edge(g, trace)
        if fam is not None:
            return fam
        return _odd_fallback(g, k, trace)
    if w is None:
        w = find_nonsep_induced_odd_cycle(g)
    if w is None:
        return _odd_fallback(g, k, trace)
    ok, reason = check_witness(g, w)
    if not ok:
        raise InvalidWitness(f"bad odd-cycle witness: {reason}")
    c = w.cycle
    if len(c) == 3:
        fam = _triangle_fans(g, k, c, trace)
        if fam is not None:
            return fam
        return _odd_fallback(g, k, trace)
    fam = _long_witness(g, k, c, trace)
    if fam is not None:
        return fam
    return _odd_fallback(g, k, trace)


def _odd_fallback(g, k, trace):
    fam = oracle_cycles(g, k)
    if fam is None:
        raise HypothesisNotMet(f"no family of {k} cycles exists at all")
    trace.constructive_gap = True
    trace.record("oracle-fallback")
    return fam


def _any_cycle(g, trace):
    spectrum = cycle_spectrum(g)
    c = find_cycle_with_length(g, min(spectrum))
    trace.record("single-cycle")
    return make_cycle_family([c], cls=FamilyClass(CONSECUTIVE))


def _two_cycles_from_edge(g, trace):
    for x, y in g.edges():
        try:
            fam = find_paths_flex(g, x, y, 2, trace=trace)
        except _BRANCH_ERRORS:
            continue
        cycles = [close_cycle(m, (x, y)) for m in fam.members]
        kind = LENGTH if fam.cls.kind == LENGTH else CONSECUTIVE
        trace.record("edge-pair")
        return make_cycle_family(cycles, cls=FamilyClass(kind))
    return None


def _rotations(c):
    """All (rotation starting at u, for each u) in both orientations."""
    out = []
    n = len(c)
    rev = tuple(reversed(c))
    for i in range(n):
        out.append(tuple(c[i:]) + tuple(c[:i]))
        out.append(tuple(rev[i:]) + tuple(rev[:i]))
    return out


def _triangle_fans(g, k, c, trace):
    """|C| = 3: contract the two non-u vertices and fan l paths around C."""
    l, phi = split_parity(k)
    for rot in _rotations(c):
        u, up, um = rot[0], rot[1], rot[2]
        gstar, to_new, u_star = contract_set(g, {up, um})
        orig_of = {w: v for v, w in to_new.items() if w != u_star}
        u_new = to_new[u]
        if not _fits(gstar, u_new, u_star, l, phi == 0):
            continue
        try:
            inner = _engine(gstar, u_new, u_star, l, phi == 0, trace)
        except _BRANCH_ERRORS:
            continue
        try:
            members = []
            for m in inner.members:
                real = [orig_of[w] for w in m[:-1]]
                last = real[-1]
                end = up if g.has_edge(last, up) else um
                members.append(tuple(real) + (end,))
            att = make_path_family(members, cls=inner.cls)
            fam = odd_cycle_fan(c, u, att, phi)
        except _BRANCH_ERRORS:
            continue
        trace.record("triangle-fan")
        return make_cycle_family(fam.members[:k], cls=fam.cls)
    return None


def _long_witness(g, k, c, trace):
    """|C| >= 5 and the two-neighbor property: fan through the blocks of
    G - V(C), or close length-condition cycles around C from two blocks."""
    l, phi = split_parity(k)
    cset = set(c)
    rest = sorted(set(range(g.n)) - cset)
    if not rest:
        return None
    sub, to_orig = induced(g, rest)
    if not is_connected(sub):
        return None

    # candidate (block, cut-vertex) pairs; the whole of G - V(C) when it is
    # 2-connected (any anchor vertex works as the degenerate cut)
    cands = []
    end_blocks = []
    if is_2_connected(sub) or sub.n <= 2:
        for b in rest:
            cands.append((set(rest), b))
    else:
        bct = block_cut_tree(sub)
        for i in bct.end_blocks:
            blk = {to_orig[v] for v in bct.blocks[i]}
            bs = [to_orig[v] for j, v in bct.incidence if j == i]
            if bs:
                cands.append((blk, bs[0]))
                end_blocks.append((blk, bs[0]))

    for blk, b in cands:
        fam = _fan_from_block(g, k, l, phi, c, blk, b, rest, trace)
        if fam is not None:
            return fam

    if len(end_blocks) >= 2:
        fam = _two_block_closure(g, k, l, phi, c, end_blocks, rest, trace)
        if fam is not None:
            return fam
    return None


def _fan_from_block(g, k, l, phi, c, blk, b, rest, trace):
    """Consecutive cycles via a fan anchored in one block."""
    n_c = len(c)
    m = (n_c - 1) // 2
    interior = blk - {b}
    outside = set(rest) - interior
    quiet = all(len(g.adj[v] & set(c)) <= 1 for v in interior)
    for rot in _rotations(c):
        u, up, um = rot[0], rot[1], rot[-1]
        apex = rot[m]
        y_opts = sorted(v for v in outside if g.has_edge(v, apex))
        if not y_opts:
            continue
        for x in sorted(interior):
            hits = g.adj[x] & set(c)
            if up in hits and um in hits:
                fam = _attempt_x_fan(g, k, l, c, rot, u, x, blk, b, y_opts, rest, trace)
                if fam is not None:
                    return fam
            if quiet and u in hits:
                fam = _attempt_u_fan(g, k, l, phi, c, rot, u, x, blk, b, y_opts, rest, trace)
                if fam is not None:
                    return fam
    return None


def _block_paths(g, blk, b, x, kk, flex, trace):
    sub, to_orig = induced(g, blk)
    inv = {v: j for j, v in enumerate(to_orig)}
    if not _fits(sub, inv[x], inv[b], kk, flex):
        return None
    try:
        fam = _engine(sub, inv[x], inv[b], kk, flex, trace)
    except _BRANCH_ERRORS:
        return None
    return _map_family(fam, to_orig)


def _bridge_out(g, b, blk, rest, y):
    if y == b:
        return (b,)
    return _path_within(g, b, y, (set(rest) - blk) | {b, y})


def _attempt_x_fan(g, k, l, c, rot, u, x, blk, b, y_opts, rest, trace):
    """x adjacent to both u+ and u-: l - 1 length-condition (x, apex)-paths."""
    m = (len(c) - 1) // 2
    apex = rot[m]
    if l - 1 < 1:
        return None
    fam = _block_paths(g, blk, b, x, l - 1, False, trace)
    if fam is None or fam.cls.kind != LENGTH:
        return None
    for y in y_opts:
        bridge = _bridge_out(g, b, blk, rest, y)
        if bridge is None:
            continue
        try:
            members = [join_paths(p, bridge, (y, apex)) if y != b else join_paths(p, (b, apex))
                       for p in fam.members]
            att = make_path_family(members, cls=fam.cls)
            cyc = odd_cycle_x_fan(tuple(rot), u, x, att, l)
        except _BRANCH_ERRORS:
            continue
        trace.record("antipode-x-fan")
        return make_cycle_family(cyc.members[:k], cls=cyc.cls)
    return None


def _attempt_u_fan(g, k, l, phi, c, rot, u, x, blk, b, y_opts, rest, trace):
    """x adjacent to u, block vertices near-disjoint from C: l (u, apex)-paths."""
    m = (len(c) - 1) // 2
    apex = rot[m]
    fam = _block_paths(g, blk, b, x, l, phi == 0, trace)
    if fam is None:
        return None
    if phi == 1 and fam.cls.kind != LENGTH:
        return None
    for y in y_opts:
        bridge = _bridge_out(g, b, blk, rest, y)
        if bridge is None:
            continue
        try:
            members = [
                join_paths((u,) + p, bridge, (y, apex)) if y != b else join_paths((u,) + p, (b, apex))
                for p in fam.members
            ]
            att = make_path_family(members, cls=fam.cls)
            cyc = odd_cycle_fan(tuple(rot), u, att, phi)
        except _BRANCH_ERRORS:
            continue
        trace.record("antipode-fan")
        return make_cycle_family(cyc.members[:k], cls=cyc.cls)
    return None


def _two_block_closure(g, k, l, phi, c, end_blocks, rest, trace):
    """Two end blocks anchored at distinct cycle vertices: 2l - 3 + phi
    (x1, x2)-paths of length condition closed around C three ways."""
    n_c = len(c)
    m = (n_c - 1) // 2
    for (blk1, b1), (blk2, b2) in combinations(end_blocks, 2):
        for swap in (False, True):
            ba, ca, bb, cb = (blk1, b1, blk2, b2) if not swap else (blk2, b2, blk1, b1)
            for rot in _rotations(c):
                fam = _closure_rotation(g, k, l, phi, rot, ba, ca, bb, cb, rest, trace)
                if fam is not None:
                    return fam
    return None


def _closure_rotation(g, k, l, phi, rot, blk1, b1, blk2, b2, rest, trace):
    u1, u1p, u1m = rot[0], rot[1], rot[-1]
    x1_opts = sorted(v for v in blk1 - {b1} if {u1p, u1m} <= g.adj[v])
    if not x1_opts:
        return None
    n_c = len(rot)
    for a in range(2, n_c - 2):
        u2, u2p, u2m = rot[a], rot[a + 1], rot[a - 1]
        x2_opts = sorted(v for v in blk2 - {b2} if {u2p, u2m} <= g.adj[v])
        if not x2_opts:
            continue
        for x1 in x1_opts:
            for x2 in x2_opts:
                paths = _cross_block_paths(g, l, phi, blk1, b1, x1, blk2, b2, x2, rest, trace)
                if paths is None:
                    continue
                fam = _close_around(g, k, rot, a, paths, trace)
                if fam is not None:
                    return fam
    return None


def _cross_block_paths(g, l, phi, blk1, b1, x1, blk2, b2, x2, rest, trace):
    """2l - 3 + phi (x1, x2)-paths satisfying the length condition in
    G - V(C), concatenated across the trunk between the two blocks."""
    bridge = _path_within(g, b1, b2, (set(rest) - (blk1 - {b1}) - (blk2 - {b2})))
    if bridge is None:
        return None

    def closed(p_fam, q_fam):
        # rows (P1, Qi) then (Pi, Q_last): lengths step by 2 throughout
        rows = [join_paths(p_fam.members[0], bridge, q) for q in q_fam.members]
        rows += [
            join_paths(p, bridge, q_fam.members[-1]) for p in p_fam.members[1:]
        ]
        return make_path_family(rows, cls=FamilyClass(LENGTH))

    if phi == 0:
        p_fam = _block_paths(g, blk1, b1, x1, l - 1, False, trace)
        q_fam = _reverse_side(g, blk2, b2, x2, l - 1, False, trace)
        if p_fam is None or q_fam is None:
            return None
        return closed(p_fam, q_fam)

    p_fam = _block_paths(g, blk1, b1, x1, l, True, trace)
    if p_fam is None:
        return None
    if p_fam.cls.kind == LENGTH:
        q_fam = _reverse_side(g, blk2, b2, x2, l - 1, False, trace)
        if q_fam is None:
            return None
        return closed(p_fam, q_fam)
    q_fam = _reverse_side(g, blk2, b2, x2, l, True, trace)
    if q_fam is None:
        return None
    if q_fam.cls.kind == LENGTH:
        p_short = _block_paths(g, blk1, b1, x1, l - 1, False, trace)
        if p_short is None:
            return None
        rows = [join_paths(p_short.members[0], bridge, q) for q in q_fam.members]
        rows += [join_paths(p, bridge, q_fam.members[-1]) for p in p_short.members[1:]]
        return make_path_family(rows, cls=FamilyClass(LENGTH))
    return _double_semi_rows(p_fam, q_fam, bridge)


def _reverse_side(g, blk, b, x, kk, flex, trace):
    """(b, x)-paths oriented from the cut vertex outward."""
    fam = _block_paths(g, blk, b, x, kk, flex, trace)
    if fam is None:
        return None
    if flex and kk > 1 and fam.cls.kind not in (LENGTH, SEMI):
        return None
    members = [tuple(reversed(m)) for m in fam.members]
    return make_path_family(members, cls=fam.cls)


def _double_semi_rows(p_fam, q_fam, bridge):
    """Both sides semi-length with l members and switches q, r: 2l - 2 rows
    whose unit steps cancel into a length-condition family.  Schedule:
    (Q1,Ri) i<=r, (Qi,Rr) 2<=i<=q, (Q_{q+1},R_{r+1}),
    (Q_{q+1},Ri) r+2<=i<=l, (Qi,Rl) q+2<=i<=l."""
    q = p_fam.cls.switch
    r = q_fam.cls.switch
    p, w = p_fam.members, q_fam.members
    l = len(p)
    rows = [(p[0], w[i - 1]) for i in range(1, r + 1)]
    rows += [(p[i - 1], w[r - 1]) for i in range(2, q + 1)]
    rows += [(p[q], w[r])]
    rows += [(p[q], w[i - 1]) for i in range(r + 2, l + 1)]
    rows += [(p[i - 1], w[l - 1]) for i in range(q + 2, l + 1)]
    members = [join_paths(a, bridge, b) for a, b in rows]
    return make_path_family(members, cls=FamilyClass(LENGTH))


def _arc_desc(rot, i, j):
    """Arc walking positions downward (mod n) from i to j, inclusive."""
    n = len(rot)
    out = [rot[i]]
    pos = i
    while pos != j:
        pos = (pos - 1) % n
        out.append(rot[pos])
    return tuple(out)


def _close_around(g, k, rot, a, paths, trace):
    """Close (x1, x2)-paths around the cycle: all paths via the short
    u2- -> u1+ arc, the longest also via the two longer arcs through u1."""
    n_c = len(rot)
    if len(paths.members) != k - 2:
        return None
    short = _arc_desc(rot, a - 1, 1)          # u2- down to u1+: a - 2 edges
    mid = _arc_desc(rot, a - 1, n_c - 1)      # u2- through u1 to u1-: a edges
    long_ = _arc_desc(rot, a + 1, n_c - 1)    # u2+ through u2, u1 to u1-: a + 2 edges
    # close each path x1..x2 with an arc of C; lengths p_i + a, then the
    # longest path again with the two longer arcs: + a + 2 and + a + 4
    rows = [tuple(p) + short for p in paths.members]
    last = paths.members[-1]
    rows.append(tuple(last) + mid)
    rows.append(tuple(last) + long_)
    try:
        fam = make_cycle_family(rows, cls=FamilyClass(LENGTH))
        validate_cycle_family(g, fam, allowed=(LENGTH,))
    except _BRANCH_ERRORS:
        return None
    trace.record("two-block-closure")
    return fam


# -- branch III and the dispatcher --------------------------------------------


def cycles_bipartite_oracle(g, k, trace=None):
    """Bipartite case: assembled from the exact cycle spectrum (by design,
    not counted as a constructive gap)."""
    if trace is None:
        trace = ExtractionTrace()
    if is_bipartite(g) is None:
        raise HypothesisNotMet("need a bipartite graph")
    if g.min_degree() < k + 1:
        raise HypothesisNotMet(f"need minimum degree {k + 1}, got {g.min_degree()}")
    fam = oracle_cycles(g, k)
    if fam is None:
        raise HypothesisNotMet(f"no family of {k} cycles exists at all")
    trace.record(BRANCH_BIPARTITE)
    return validate_cycle_family(g, fam, allowed=(LENGTH, CONSECUTIVE))


def branch_of(g):
    """Which branch of the dispatch handles g: "I" (2-connected but not
    3-connected), "II" (3-connected non-bipartite), "III" (bipartite)."""
    if g.n < 4 or not vertex_connectivity_at_least(g, 3):
        return "I"
    if is_bipartite(g) is None:
        return "II"
    return "III"


def find_k_cycles(g, k, trace=None):
    """(family, branch): k cycles of consecutive lengths or satisfying the
    length condition; needs G 2-connected with minimum degree >= k + 1."""
    if trace is None:
        trace = ExtractionTrace()
    if k < 1:
        raise InvalidArgument("k must be positive")
    if not is_2_connected(g):
        raise HypothesisNotMet("need a 2-connected graph")
    if g.min_degree() < k + 1:
        raise HypothesisNotMet(f"need minimum degree {k + 1}, got {g.min_degree()}")
    branch = branch_of(g)
    trace.record(f"branch-{branch}")
    if k == 1:
        fam = _any_cycle(g, trace)
    elif branch == "I":
        fam = cycles_2conn_not_3conn(g, k, trace=trace)
    elif branch == "II":
        fam = cycles_with_odd_cycle(g, k, trace=trace)
    else:
        fam = cycles_bipartite_oracle(g, k, trace=trace)
    if fam.k != k:
        raise InvalidWitness(f"expected {k} cycles, produced {fam.k}")
    return validate_cycle_family(g, fam), branch


def residue_map(fam, k):
    """Map each residue class modulo k to a member cycle of that length."""
    out = {}
    for m in fam.members:
        out.setdefault(len(m) % k, m)
    return out


def all_residues_mod_k(g, k, trace=None):
    """Cycles of every length modulo k, as a map residue -> cycle.

    Only odd k qualifies: a length-condition family steps by 2, which is a
    unit modulo odd k, and a consecutive family steps by 1; either way the
    k lengths hit every residue class.
    """
    if k % 2 == 0:
        raise HypothesisNotMet("residue coverage needs odd k")
    fam, _branch = find_k_cycles(g, k, trace=trace)
    res, full = residues_mod_k(fam.lengths(), k)
    if not full:
        raise InvalidWitness(
            f"family of class {fam.cls.kind} does not cover all residues mod {k}"
        )
    return residue_map(fam, k)
