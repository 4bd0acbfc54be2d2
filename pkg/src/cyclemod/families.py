"""Length classification of path/cycle families and the arithmetic
row-schedule combinators that turn path families into cycle families.

Conditions on an ordered list of lengths (first length always >= 2):

* consecutive      — successive differences all 1
* length condition — successive differences all 2
* semi-length      — exactly one difference of 1 (at the "switch" index j,
  counted 1-based: len[j+1] - len[j] == 1), all others 2

A single-length list, and a 2-member list with difference 1, satisfy more
than one reading; ``classify`` resolves with the fixed priority
length > consecutive > semi-length, and callers that need the semi reading
of an ambiguous family use ``semi_switch`` directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidArgument, InvalidWitness

LENGTH = "length"
CONSECUTIVE = "consecutive"
SEMI = "semi"
UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class FamilyClass:
    kind: str
    switch: int | None = None  # only for SEMI

    def __post_init__(self):
        if self.kind == SEMI and self.switch is None:
            raise InvalidArgument("semi-length class needs a switch index")
        if self.kind != SEMI and self.switch is not None:
            raise InvalidArgument("only semi-length has a switch")


def semi_switch(lengths):
    """Switch index if lengths fit the semi-length condition, else None."""
    if not lengths or lengths[0] < 2:
        return None
    diffs = [b - a for a, b in zip(lengths, lengths[1:])]
    ones = [i for i, d in enumerate(diffs) if d == 1]
    if len(ones) == 1 and all(d == 2 for i, d in enumerate(diffs) if i != ones[0]):
        return ones[0] + 1  # 1-based switch
    return None


def classify(lengths):
    """FamilyClass of a length list, or FamilyClass(UNCLASSIFIED)."""
    lengths = list(lengths)
    if not lengths:
        raise InvalidArgument("classify needs a nonempty list")
    if lengths[0] < 2:
        return FamilyClass(UNCLASSIFIED)
    diffs = [b - a for a, b in zip(lengths, lengths[1:])]
    if all(d == 2 for d in diffs):
        return FamilyClass(LENGTH)
    if all(d == 1 for d in diffs):
        return FamilyClass(CONSECUTIVE)
    sw = semi_switch(lengths)
    if sw is not None:
        return FamilyClass(SEMI, sw)
    return FamilyClass(UNCLASSIFIED)


def class_holds(lengths, cls):
    """Does the declared class hold for these lengths?  (A list may admit
    several readings; this checks the specific one, unlike classify.)"""
    lengths = list(lengths)
    if not lengths or lengths[0] < 2:
        return False
    diffs = [b - a for a, b in zip(lengths, lengths[1:])]
    if cls.kind == LENGTH:
        return all(d == 2 for d in diffs)
    if cls.kind == CONSECUTIVE:
        return all(d == 1 for d in diffs)
    if cls.kind == SEMI:
        return semi_switch(lengths) == cls.switch
    return False


# -- witnesses -----------------------------------------------------------


def path_ok(g, seq):
    """seq is a simple path in g (>= 1 vertex)."""
    if len(seq) != len(set(seq)):
        return False
    if not all(0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def cycle_ok(g, seq):
    """seq (no repeated start) is a simple cycle in g of length >= 3."""
    if len(seq) < 3 or len(seq) != len(set(seq)):
        return False
    if not all(0 <= v < g.n for v in seq):
        return False
    closed = list(seq) + [seq[0]]
    return all(g.has_edge(a, b) for a, b in zip(closed, closed[1:]))


def path_len(seq):
    return len(seq) - 1


def cycle_len(seq):
    return len(seq)


@dataclass(frozen=True)
class Family:
    """Ordered family of path witnesses (vertex tuples) or cycle witnesses
    (vertex tuples without the repeated start), plus its classification.

    Members are stored shortest-first / longest-last."""

    members: tuple
    cls: FamilyClass
    is_cycles: bool = False

    @property
    def k(self):
        return len(self.members)

    def lengths(self):
        f = cycle_len if self.is_cycles else path_len
        return [f(m) for m in self.members]


def make_path_family(members, cls=None):
    """Path family; classification auto-derived unless an explicit (valid)
    reading is supplied."""
    members = tuple(tuple(m) for m in members)
    lengths = [path_len(m) for m in members]
    if cls is None:
        cls = classify(lengths)
    elif not class_holds(lengths, cls):
        raise InvalidWitness(f"lengths {lengths} do not admit the reading {cls}")
    return Family(members, cls, False)


def make_cycle_family(members, cls=None):
    members = tuple(tuple(m) for m in members)
    lengths = [cycle_len(m) for m in members]
    if cls is None:
        cls = classify(lengths)
    elif not class_holds(lengths, cls):
        raise InvalidWitness(f"lengths {lengths} do not admit the reading {cls}")
    return Family(members, cls, True)


def validate_path_family(g, fam, x=None, y=None, allowed=(LENGTH, SEMI, CONSECUTIVE)):
    """Every member a simple path in g (shared endpoints x, y when given),
    and the declared class holds and is allowed.  Returns the family."""
    if fam.is_cycles:
        raise InvalidWitness("expected a path family")
    for m in fam.members:
        if not path_ok(g, m):
            raise InvalidWitness(f"not a path in the host graph: {m}")
        if x is not None and m[0] != x:
            raise InvalidWitness(f"member does not start at {x}: {m}")
        if y is not None and m[-1] != y:
            raise InvalidWitness(f"member does not end at {y}: {m}")
    if not class_holds(fam.lengths(), fam.cls):
        raise InvalidWitness(f"declared class {fam.cls} fails for lengths {fam.lengths()}")
    if fam.cls.kind not in allowed:
        raise InvalidWitness(f"class {fam.cls.kind} not allowed here")
    return fam


def validate_cycle_family(g, fam, allowed=(LENGTH, CONSECUTIVE)):
    if not fam.is_cycles:
        raise InvalidWitness("expected a cycle family")
    for m in fam.members:
        if not cycle_ok(g, m):
            raise InvalidWitness(f"not a cycle in the host graph: {m}")
    if not class_holds(fam.lengths(), fam.cls):
        raise InvalidWitness(f"declared class {fam.cls} fails for lengths {fam.lengths()}")
    if fam.cls.kind not in allowed:
        raise InvalidWitness(f"class {fam.cls.kind} not allowed here")
    return fam


# -- path surgery helpers ------------------------------------------------


def join_paths(*segments):
    """Concatenate path segments that overlap in exactly their junction
    vertex: (a..b)(b..c)(c..d) -> a..d.  Raises on repeated vertices."""
    out = list(segments[0])
    for seg in segments[1:]:
        if not seg or seg[0] != out[-1]:
            raise InvalidWitness("segments do not share a junction vertex")
        out.extend(seg[1:])
    if len(out) != len(set(out)):
        raise InvalidWitness("joined segments repeat a vertex")
    return tuple(out)


def close_cycle(p, q):
    """Cycle from two (x, y)-paths meeting only at their endpoints."""
    if p[0] != q[0] or p[-1] != q[-1]:
        raise InvalidWitness("paths do not share endpoints")
    if set(p[1:-1]) & set(q[1:-1]):
        raise InvalidWitness("paths share an interior vertex")
    if len(p) < 2 or len(q) < 2 or (len(p) == 2 and len(q) == 2):
        raise InvalidWitness("degenerate cycle")
    return tuple(list(p) + list(reversed(q[1:-1])))


def reverse_family(fam):
    return Family(tuple(tuple(reversed(m)) for m in fam.members), fam.cls, fam.is_cycles)


def combine_across_cut(fam, bridge, side="suffix"):
    """Extend every member of a path family by one fixed bridge path.

    side="suffix": members end where the bridge starts; "prefix": the bridge
    ends where members start.  All lengths shift by the bridge length, so
    the classification is preserved.
    """
    bridge = tuple(bridge)
    if side not in ("prefix", "suffix"):
        raise InvalidArgument("side must be 'prefix' or 'suffix'")
    new = []
    for m in fam.members:
        if side == "suffix":
            new.append(join_paths(m, bridge))
        else:
            new.append(join_paths(bridge, m))
    # all lengths shift by the same constant, so the declared reading survives
    return make_path_family(new, cls=fam.cls)


# -- cycle-family combinators (explicit row schedules) --------------------


def glue_two_sided_length(p_fam, q_fam):
    """Cycles from two length-condition path families over the same (x, y)
    on the two sides of a 2-cut: with |p| = l + phi and |q| = l, the rows

        (P1, Qi)  i = 1..l        then  (Pi, Ql)  i = 2..l+phi

    give k = 2l - 1 + phi cycles satisfying the length condition.
    """
    if p_fam.cls.kind != LENGTH or q_fam.cls.kind != LENGTH:
        raise InvalidArgument("both sides must satisfy the length condition")
    p, q = p_fam.members, q_fam.members
    rows = [(p[0], q[i]) for i in range(len(q))]
    rows += [(p[i], q[-1]) for i in range(1, len(p))]
    fam = make_cycle_family([close_cycle(a, b) for a, b in rows])
    if fam.cls.kind != LENGTH:
        raise InvalidWitness("glued cycles do not satisfy the length condition")
    return fam


def glue_two_sided_semilength(p_fam, q_fam):
    """Cycles from two semi-length families of l + 1 members each (the even-k
    case), switches p^ and q^.  Row schedule, five groups left to right:

        (P1, Qi)      i = 1..q^
        (Pi, Qq^)     i = 2..p^
        (Pp^+1, Qq^+1)
        (Pp^+1, Qi)   i = q^+2..l+1
        (Pi, Ql+1)    i = p^+2..l+1

    giving 2l cycles satisfying the length condition (the two unit steps
    cancel pairwise).
    """
    ps = p_fam.cls.switch if p_fam.cls.kind == SEMI else semi_switch(p_fam.lengths())
    qs = q_fam.cls.switch if q_fam.cls.kind == SEMI else semi_switch(q_fam.lengths())
    if ps is None or qs is None:
        raise InvalidArgument("both sides must satisfy the semi-length condition")
    if len(p_fam.members) != len(q_fam.members):
        raise InvalidArgument("sides must have equally many members (l + 1)")
    p, q = p_fam.members, q_fam.members
    l = len(p) - 1
    rows = [(p[0], q[i - 1]) for i in range(1, qs + 1)]
    rows += [(p[i - 1], q[qs - 1]) for i in range(2, ps + 1)]
    rows += [(p[ps], q[qs])]
    rows += [(p[ps], q[i - 1]) for i in range(qs + 2, l + 2)]
    rows += [(p[i - 1], q[l]) for i in range(ps + 2, l + 2)]
    fam = make_cycle_family([close_cycle(a, b) for a, b in rows])
    if len(rows) != 2 * l or fam.cls.kind != LENGTH:
        raise InvalidWitness("semi-length glue did not produce 2l length-condition cycles")
    return fam


def _cycle_positions(c, u):
    """Rotation of cycle witness c starting at u, following c's orientation."""
    i = c.index(u)
    return tuple(c[i:]) + tuple(c[:i])


def _arc(rot, i, j, forward):
    """Arc of the rotated cycle from position i to position j (inclusive),
    walking forward (increasing positions) or backward."""
    n = len(rot)
    out = [rot[i]]
    pos = i
    step = 1 if forward else -1
    while pos != j:
        pos = (pos + step) % n
        out.append(rot[pos])
    return tuple(out)


def odd_cycle_fan(c, u, paths_fam, phi):
    """Consecutive-length cycles from an odd cycle C (|C| = 2m + 1) plus a
    fan of (u, {u^{+m}, u^{-m}})-paths internally disjoint from V(C).

    Each path ends at an antipodal vertex v of u, reachable around C by a
    short arc Q (m edges) and a long arc R (m + 1 edges).  Length-condition
    fan (any phi): rows (Pi + Qi, Pi + Ri) for all i -> 2l cycles.
    Semi-length fan (phi = 0 only, switch j): pairs for i <= j, then only
    Pi + Ri at i = j + 1, then pairs again -> 2l - 1 cycles.
    """
    c = tuple(c)
    m = (len(c) - 1) // 2
    if len(c) % 2 == 0 or m < 1:
        raise InvalidArgument("need an odd cycle of length >= 3")
    rot = _cycle_positions(c, u)
    cls = paths_fam.cls
    if cls.kind == SEMI and phi == 1:
        raise InvalidArgument("semi-length fan only available when phi = 0")
    if cls.kind not in (LENGTH, SEMI):
        raise InvalidArgument("fan needs a length or semi-length family")
    cset = set(c)
    rows = []
    for idx, pth in enumerate(paths_fam.members):
        if pth[0] != u or pth[-1] not in (rot[m], rot[m + 1]):
            raise InvalidWitness("fan member must run from u to an antipode of u")
        if set(pth[1:-1]) & cset:
            raise InvalidWitness("fan member not internally disjoint from the cycle")
        vpos = m if pth[-1] == rot[m] else m + 1
        # short arc (m edges) and long arc (m+1 edges) from the antipode back to u
        q_arc = _arc(rot, vpos, 0, forward=(vpos == m + 1))
        r_arc = _arc(rot, vpos, 0, forward=(vpos == m))
        short = tuple(pth) + q_arc[1:-1]
        long_ = tuple(pth) + r_arc[1:-1]
        sw = cls.switch if cls.kind == SEMI else None
        if sw is not None and idx == sw:  # idx is 0-based; member j+1 drops its short row
            rows.append(long_)
        else:
            rows.append(short)
            rows.append(long_)
    fam = make_cycle_family(rows)
    if fam.cls.kind != CONSECUTIVE:
        raise InvalidWitness("fan rows are not consecutive lengths")
    return fam


def odd_cycle_x_fan(c, u, x, paths_fam, l):
    """Consecutive-length cycles from an odd cycle C (|C| = 2m + 1, m >= 2),
    a vertex x off C adjacent to both u+ and u-, and l - 1 length-condition
    (x, u^{+m})-paths internally disjoint from V(C) and x-free inside.

    Four return arcs from u^{+m}: to u+ short (m - 1), to u- short (m),
    to u- long (m + 1), to u+ long (m + 2); rows

        (Pi + short(u+) + u+x, Pi + short(u-) + u-x)   i = 1..l-1
        (Pl-1 + long(u-) + u-x, Pl-1 + long(u+) + u+x)

    give 2l consecutive-length cycles.
    """
    c = tuple(c)
    m = (len(c) - 1) // 2
    if len(c) % 2 == 0:
        raise InvalidArgument("need an odd cycle")
    if m < 2:
        raise InvalidArgument("need |C| >= 5 here")
    if paths_fam.cls.kind != LENGTH or len(paths_fam.members) != l - 1:
        raise InvalidArgument("need l - 1 paths satisfying the length condition")
    rot = _cycle_positions(c, u)
    up, um = rot[1], rot[-1]          # u+ and u-
    apex = rot[m]                     # u^{+m}
    cset = set(c)
    for pth in paths_fam.members:
        if pth[0] != x or pth[-1] != apex:
            raise InvalidWitness("member must run from x to the antipode u^{+m}")
        if set(pth[1:-1]) & (cset | {x}):
            raise InvalidWitness("member interior touches the cycle or x")
    # arcs from position m back toward u's neighbors
    a_up_short = _arc(rot, m, 1, forward=False)        # m - 1 edges
    a_um_short = _arc(rot, m, len(rot) - 1, forward=True)   # m edges
    a_um_long = _arc(rot, m, len(rot) - 1, forward=False)   # m + 1 edges
    a_up_long = _arc(rot, m, 1, forward=True)               # m + 2 edges
    rows = []
    for pth in paths_fam.members:
        rows.append(tuple(pth) + a_up_short[1:])
        rows.append(tuple(pth) + a_um_short[1:])
    last = paths_fam.members[-1]
    rows.append(tuple(last) + a_um_long[1:])
    rows.append(tuple(last) + a_up_long[1:])
    fam = make_cycle_family(rows)
    if len(rows) != 2 * l or fam.cls.kind != CONSECUTIVE:
        raise InvalidWitness("x-fan rows are not 2l consecutive lengths")
    return fam


def residues_mod_k(lengths, k):
    """(residue set of the lengths mod k, full-coverage flag)."""
    if k < 1:
        raise InvalidArgument("k must be positive")
    res = {length % k for length in lengths}
    return res, len(res) == k
