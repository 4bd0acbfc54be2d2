"""Complete-bipartite cores and the path-manufacturing machinery around them.

An l-core of (G, x, y) is H = G[S, T] with:

  C1: G[S, T] complete bipartite, |T| >= |S| = l + 1 >= 2
  C2: x in S, y not in S u T
  C3: e_G(v, S) <= l      for every v outside V(H) u {y}
  C4: e_G(v, T - v) <= l+1 for every v outside S u {y}

C denotes the component of G - V(H) containing y.  The complete bipartite
structure supplies "ladders": (S, T)-paths of every odd length 1..2l+1,
and S-S / T-T paths of every even length 2..2l, which is what converts a
handful of attachment paths into a full family stepping by 2.
"""

from __future__ import annotations

from itertools import combinations
from dataclasses import dataclass

from .errors import HypothesisNotMet, InvalidArgument, InvalidWitness, NotRooted2Connected
from .decompose import is_rooted_2_connected
from .families import (
    LENGTH,
    SEMI,
    FamilyClass,
    join_paths,
    make_path_family,
    validate_path_family,
)
from .graph import components, shortest_path


@dataclass(frozen=True)
class Core:
    s: tuple           # sorted, contains x
    t: tuple           # sorted
    x: int
    y: int
    component_c: tuple  # sorted: component of G - V(H) containing y

    @property
    def l(self):
        return len(self.s) - 1

    def h_vertices(self):
        return set(self.s) | set(self.t)


def _common_neighbors(g, s_set):
    it = iter(s_set)
    acc = set(g.adj[next(it)])
    for v in it:
        acc &= g.adj[v]
    return acc


def _y_component(g, h_verts, y):
    for comp in components(g, ignore=h_verts):
        if y in comp:
            return tuple(comp)
    raise AssertionError("y vanished from its own graph")


def find_core(g, x, y):
    """Best core of (G, x, y) under: |S| max, then |T| max, then |C| max,
    then |N(C) & S| min; ties broken by lexicographically smallest S.

    Returns None exactly when G - y has no 4-cycle through x.  With S of
    maximum size and T equal to *all* common neighbors of S (minus y), the
    caps C3/C4 hold automatically: a vertex adjacent to all of S would
    belong to T, and a vertex with l + 2 neighbors in T would extend S.
    """
    if not is_rooted_2_connected(g, x, y):
        raise NotRooted2Connected("find_core needs (g, x, y) rooted 2-connected")
    others = [v for v in range(g.n) if v != x and v != y]
    best = None
    best_key = None
    max_size = (g.n - 1) // 2
    for size in range(2, max_size + 1):
        for extra in combinations(others, size - 1):
            s_set = (x,) + extra
            t_set = _common_neighbors(g, s_set) - set(s_set) - {y}
            if len(t_set) < size:
                continue
            h_verts = set(s_set) | t_set
            comp = _y_component(g, h_verts, y)
            ncs = sum(1 for v in s_set if any(g.has_edge(v, c) for c in comp))
            key = (size, len(t_set), len(comp), -ncs, tuple(-v for v in sorted(s_set)))
            if best_key is None or key > best_key:
                best_key = key
                best = Core(
                    s=tuple(sorted(s_set)),
                    t=tuple(sorted(t_set)),
                    x=x,
                    y=y,
                    component_c=comp,
                )
    if best is not None:
        ok, report = verify_core(g, best)
        assert ok, f"maximal core fails its own conditions: {report}"
    return best


def verify_core(g, core):
    """(True, None) or (False, "<condition>: <witness vertex>")."""
    s_set, t_set = set(core.s), set(core.t)
    l = core.l
    if len(s_set) < 2 or len(t_set) < len(s_set):
        return False, f"C1: |T|={len(t_set)} < |S|={len(s_set)} or |S| < 2"
    for u in core.s:
        for v in core.t:
            if not g.has_edge(u, v):
                return False, f"C1: missing edge {u}-{v}"
    if core.x not in s_set or core.y in s_set | t_set:
        return False, "C2: roots misplaced"
    if s_set & t_set:
        return False, "C2: S and T overlap"
    h = s_set | t_set
    for v in range(g.n):
        if v in h or v == core.y:
            continue
        if len(g.adj[v] & s_set) > l:
            return False, f"C3: vertex {v}"
    for v in range(g.n):
        if v in s_set or v == core.y:
            continue
        if len(g.adj[v] & (t_set - {v})) > l + 1:
            return False, f"C4: vertex {v}"
    return True, None


# -- ladder construction inside H -----------------------------------------


def h_ladder_path(core, a, b, length, avoid=()):
    """Deterministic path of `length` edges from a to b inside H = G[S, T],
    alternating sides, interior avoiding `avoid`.

    Available lengths: odd 1..2l+1 between opposite sides, even 2..2l
    within a side (given enough unused vertices; raises otherwise).
    """
    s_set, t_set = set(core.s), set(core.t)
    avoid = set(avoid) | {a, b}
    side = lambda v: "S" if v in s_set else "T"
    if a not in s_set | t_set or b not in s_set | t_set:
        raise InvalidArgument("endpoints must lie in the core")
    if length < 1 or a == b:
        raise InvalidArgument("need distinct endpoints and length >= 1")
    want_odd = side(a) != side(b)
    if (length % 2 == 1) != want_odd:
        raise InvalidArgument("parity of length does not match the sides")
    free_s = [v for v in core.s if v not in avoid]
    free_t = [v for v in core.t if v not in avoid]
    # interior alternates starting from the side opposite a and ending
    # opposite b; pull vertices in ascending order
    seq = [a]
    cur = side(a)
    for _ in range(length - 1):
        nxt = "T" if cur == "S" else "S"
        pool = free_t if nxt == "T" else free_s
        if not pool:
            raise InvalidArgument("not enough unused core vertices for this length")
        seq.append(pool.pop(0))
        cur = nxt
    seq.append(b)
    return tuple(seq)


def _exit_to_y(g, core, via="any"):
    """A path from some w in V(H) - x to y, internally avoiding V(H) u {x}.

    via="T": w must be in T and the exit leaves through an edge of E(T, C);
    via vertex s: the exit starts s, c for the smallest C-neighbor c of s.
    Deterministic; raises HypothesisNotMet when the requested exit is absent.
    """
    h = core.h_vertices()
    c_set = set(core.component_c)
    if via == "T":
        cands = [
            (t, c)
            for t in core.t
            for c in sorted(g.adj[t] & c_set)
        ]
        if not cands:
            raise HypothesisNotMet("no edge between T and C")
        t, c = min(cands)
        if c == core.y:
            return (t, core.y)
        tail = shortest_path(g, c, core.y, forbidden=set(range(g.n)) - c_set)
        return (t,) + tail
    if isinstance(via, int):
        s = via
        cs = sorted(g.adj[s] & c_set)
        if not cs:
            raise HypothesisNotMet(f"no edge between {s} and C")
        c = cs[0]
        if c == core.y:
            return (s, core.y)
        tail = shortest_path(g, c, core.y, forbidden=set(range(g.n)) - c_set)
        return (s,) + tail
    # any exit from V(H) - x: BFS from y avoiding x, stop at the first
    # H-vertex reached (preferring a T attachment among equals)
    best = None
    for w in list(core.t) + [v for v in core.s if v != core.x]:
        p = shortest_path(g, w, core.y, forbidden=(h - {w}) | {core.x})
        if p is not None and (best is None or len(p) < len(best)):
            best = p
    if best is None:
        raise HypothesisNotMet("no exit from the core to y")
    return best


def core_paths_big_l(g, core, k):
    """k (x, y)-paths satisfying the length condition, when l >= k or
    (l = k - 1 and some T-C edge exists): ladder through H, one exit to y."""
    l = core.l
    if l < 1:
        raise HypothesisNotMet("core has no ladder (l = 0)")
    x, y = core.x, core.y
    c_set = set(core.component_c)
    t_c_edge = any(g.adj[t] & c_set for t in core.t)
    if not (l >= k or (l == k - 1 and t_c_edge)):
        raise HypothesisNotMet("need l >= k, or l = k - 1 with a T-C edge")
    if l >= k:
        exit_path = _exit_to_y(g, core, via="any")
    else:
        exit_path = _exit_to_y(g, core, via="T")
    w = exit_path[0]
    members = []
    if w in core.t:
        for i in range(1, k + 1):  # odd ladders 1, 3, ..., 2k - 1
            lad = h_ladder_path(core, x, w, 2 * i - 1)
            members.append(join_paths(lad, exit_path))
    else:
        for i in range(1, k + 1):  # even ladders 2, 4, ..., 2k  (needs l >= k)
            lad = h_ladder_path(core, x, w, 2 * i)
            members.append(join_paths(lad, exit_path))
    fam = make_path_family(members, cls=FamilyClass(LENGTH))
    return validate_path_family(g, fam, x, y, allowed=(LENGTH,))


def core_paths_semilength(g, core, k):
    """k (x, y)-paths satisfying the semi-length condition, when l = k - 1,
    some (S - x)-C edge exists and T spans an edge: even ladders 2..2l plus
    one path of length 2l + 1 that uses the T-T edge, all exiting via s."""
    l = core.l
    x, y = core.x, core.y
    if l < 1 or l != k - 1:
        raise HypothesisNotMet("need l = k - 1 >= 1")
    c_set = set(core.component_c)
    s_cands = [s for s in core.s if s != x and (g.adj[s] & c_set)]
    if not s_cands:
        raise HypothesisNotMet("no edge between S - x and C")
    tt_edges = sorted(
        (u, v) for u in core.t for v in core.t if u < v and g.has_edge(u, v)
    )
    if not tt_edges:
        raise HypothesisNotMet("no edge inside T")
    s = s_cands[0]
    exit_path = _exit_to_y(g, core, via=s)
    members = []
    for i in range(1, l + 1):  # even ladders 2, ..., 2l
        lad = h_ladder_path(core, x, s, 2 * i)
        members.append(join_paths(lad, exit_path))
    t1, t2 = tt_edges[0]
    # one (x, s)-path of length 2l + 1: x t1 t2 then alternate back to s
    seq = [x, t1, t2]
    free_s = [v for v in core.s if v not in (x, s)]
    free_t = [v for v in core.t if v not in (t1, t2)]
    for j in range(l - 1):
        seq.append(free_s[j])
        seq.append(free_t[j])
    seq.append(s)
    members.append(join_paths(tuple(seq), exit_path))
    sw = k - 1 if k >= 2 else None
    if sw is None:
        raise HypothesisNotMet("semi-length families need k >= 2")
    fam = make_path_family(members, cls=FamilyClass(SEMI, sw))
    return validate_path_family(g, fam, x, y, allowed=(SEMI,))


# -- turning attachment families into (x, y)-families ----------------------

T_PATHS = "TPaths"
TXS_PATHS = "TxSPaths"
TS_PATHS = "TSPaths"
TY_PATHS = "TyPaths"
SY_PATHS = "SyPaths"

_REQUIRED_COUNT = {
    T_PATHS: lambda k, l: k - l + 1,
    TXS_PATHS: lambda k, l: k - l + 1,
    TS_PATHS: lambda k, l: k - l + 2,
    TY_PATHS: lambda k, l: k - l,
    SY_PATHS: lambda k, l: k - l + 1,
}


def extend_from_core(g, core, attachment, fam, k):
    """Convert an attachment family into k (x, y)-paths of the same class.

    attachment names where the supplied paths run (all internally disjoint
    from V(H)): between two T vertices; from T to {x, s}; from T to
    S - {x, s}; from T to y; from S - {x} to y.  Each member gets a fixed
    hook through H; the longest member is additionally re-routed through
    ladder detours of lengths stepping by 2, which tops the family up to k.
    """
    l = core.l
    x, y = core.x, core.y
    if l < 1:
        raise HypothesisNotMet("core has no ladder (l = 0)")
    if attachment not in _REQUIRED_COUNT:
        raise InvalidArgument(f"unknown attachment kind {attachment!r}")
    need = _REQUIRED_COUNT[attachment](k, l)
    if need < 1:
        raise HypothesisNotMet("k too small relative to l for this attachment")
    if len(fam.members) != need or fam.cls.kind not in (LENGTH, SEMI):
        raise HypothesisNotMet(
            f"{attachment} needs {need} members with a length or semi-length class"
        )
    h = core.h_vertices()
    s_set, t_set = set(core.s), set(core.t)
    for m in fam.members:
        if set(m[1:-1]) & h:
            raise InvalidWitness("attachment member passes through the core")

    c_set = set(core.component_c)
    needs_s = attachment in (T_PATHS, TXS_PATHS, TS_PATHS)
    s = None
    exit_path = None
    if needs_s:
        s_cands = [v for v in core.s if v != x and (g.adj[v] & c_set)]
        if not s_cands:
            raise HypothesisNotMet("no vertex s in S - x with an edge into C")
        s = s_cands[0]
        exit_path = _exit_to_y(g, core, via=s)

    members = []
    last = fam.members[-1]

    if attachment == T_PATHS:
        for m in fam.members:
            if m[0] not in t_set or m[-1] not in t_set:
                raise InvalidWitness("T-path endpoints must lie in T")
            members.append(join_paths((x, m[0]), m, (m[-1], s), exit_path))
        for j in range(1, l):
            lad = h_ladder_path(core, last[-1], s, 2 * j + 1, avoid=(last[0], x))
            members.append(join_paths((x, last[0]), last, lad, exit_path))

    elif attachment == TXS_PATHS:
        oriented = []
        for m in fam.members:
            if m[0] in (x, s):
                m = tuple(reversed(m))
            if m[0] not in t_set or m[-1] not in (x, s):
                raise InvalidWitness("member must join T to {x, s}")
            oriented.append(m)
            if m[-1] == s:
                members.append(join_paths((x, m[0]), m, exit_path))
            else:  # ends at x: flip so x leads, then hook the T end to s
                members.append(join_paths(tuple(reversed(m)), (m[0], s), exit_path))
        last = oriented[-1]
        for j in range(1, l):
            if last[-1] == s:
                lad = h_ladder_path(core, x, last[0], 2 * j + 1, avoid=(s,))
                members.append(join_paths(lad, last, exit_path))
            else:
                lad = h_ladder_path(core, last[0], s, 2 * j + 1, avoid=(x,))
                members.append(join_paths(tuple(reversed(last)), lad, exit_path))

    elif attachment == TS_PATHS:
        for m in fam.members:
            if m[0] in s_set:
                m = tuple(reversed(m))
            if m[0] not in t_set or m[-1] not in s_set or m[-1] in (x, s):
                raise InvalidWitness("member must join T to S - {x, s}")
            hook_t = min(t_set - {m[0]} - set(m))
            members.append(join_paths((x, m[0]), m, (m[-1], hook_t, s), exit_path))
        if last[0] in s_set:
            last = tuple(reversed(last))
        for j in range(2, l):
            lad = h_ladder_path(core, last[-1], s, 2 * j, avoid=(x, last[0]))
            members.append(join_paths((x, last[0]), last, lad, exit_path))

    elif attachment == TY_PATHS:
        for m in fam.members:
            if m[0] == y:
                m = tuple(reversed(m))
            if m[0] not in t_set or m[-1] != y:
                raise InvalidWitness("member must join T to y")
            members.append(join_paths((x, m[0]), m))
        if last[0] == y:
            last = tuple(reversed(last))
        for j in range(1, l + 1):
            lad = h_ladder_path(core, x, last[0], 2 * j + 1)
            members.append(join_paths(lad, last))

    elif attachment == SY_PATHS:
        for m in fam.members:
            if m[0] == y:
                m = tuple(reversed(m))
            if m[0] not in s_set or m[0] == x or m[-1] != y:
                raise InvalidWitness("member must join S - x to y")
            hook_t = min(t_set - set(m))
            members.append(join_paths((x, hook_t, m[0]), m))
        if last[0] == y:
            last = tuple(reversed(last))
        for j in range(2, l + 1):
            lad = h_ladder_path(core, x, last[0], 2 * j)
            members.append(join_paths(lad, last))

    if len(members) != k:
        raise HypothesisNotMet(f"construction yields {len(members)} paths, not {k}")
    fam_out = make_path_family(members, cls=fam.cls)
    return validate_path_family(g, fam_out, x, y, allowed=(fam.cls.kind,))
