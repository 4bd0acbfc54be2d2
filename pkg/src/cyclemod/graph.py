"""Immutable simple undirected graphs with the set/edge-count primitives.

Vertices are dense integer ids 0..n-1.  Every "mutation" (adding the xy edge,
deleting vertices, contracting a set) returns a new graph, usually together
with an id mapping so witnesses found in the derived graph can be pulled back
to the original one.

Text format (used by the CLI): optional header line ``p <n> <m>``, then one
``u v`` pair per line, 0-based.  Duplicate and reversed pairs are merged;
self-loops are rejected.
"""

from __future__ import annotations

from .errors import InvalidArgument


class Graph:
    """Simple undirected graph; adjacency sets, no loops or multi-edges."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n, edges=()):
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidArgument(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)
        self._hash = None

    # -- basic queries ---------------------------------------------------

    def degree(self, v):
        return len(self.adj[v])

    def neighbors(self, v):
        return self.adj[v]

    def has_edge(self, u, v):
        return v in self.adj[u]

    def vertices(self):
        return range(self.n)

    def edges(self):
        """Sorted list of edges as (u, v) with u < v."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self):
        return sum(len(s) for s in self.adj) // 2

    def min_degree(self):
        if self.n == 0:
            raise InvalidArgument("empty graph has no minimum degree")
        return min(len(s) for s in self.adj)

    def rooted_min_degree(self, x, y):
        """min degree over V \\ {x, y}; infinity when no other vertex exists."""
        degs = [len(self.adj[v]) for v in range(self.n) if v != x and v != y]
        return min(degs) if degs else float("inf")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs --------------------------------------------------

    def with_edge(self, u, v):
        """Copy with edge uv added (no-op copy if already present)."""
        if u == v:
            raise InvalidArgument("cannot add a self-loop")
        return Graph(self.n, self.edges() + [(u, v)])

    def without_edge(self, u, v):
        if not self.has_edge(u, v):
            raise InvalidArgument(f"edge ({u},{v}) not present")
        return Graph(self.n, [e for e in self.edges() if e != (min(u, v), max(u, v))])


def edges_between(g, s, t):
    """E_G(S, T) for disjoint vertex sets: (count, sorted edge list)."""
    s, t = set(s), set(t)
    if s & t:
        raise InvalidArgument("edges_between needs disjoint sets")
    out = []
    for u in sorted(s):
        for v in sorted(g.adj[u]):
            if v in t:
                out.append((u, v))
    return len(out), out


def induced(g, s):
    """Induced subgraph G[S], relabeled 0..|S|-1.

    Returns (subgraph, to_orig) where to_orig[i] is the original id of
    vertex i in the subgraph.
    """
    to_orig = sorted(set(s))
    for v in to_orig:
        if not 0 <= v < g.n:
            raise InvalidArgument(f"vertex {v} out of range")
    inv = {o: i for i, o in enumerate(to_orig)}
    edges = [
        (inv[u], inv[v])
        for u in to_orig
        for v in g.adj[u]
        if v in inv and u < v
    ]
    return Graph(len(to_orig), edges), to_orig


def bipartite_subgraph(g, s, t):
    """G[S, T]: vertex set S u T, keeping only the S-T edges.

    Returns (subgraph, to_orig) relabeled like induced().
    """
    s, t = set(s), set(t)
    if s & t:
        raise InvalidArgument("bipartite_subgraph needs disjoint sets")
    to_orig = sorted(s | t)
    inv = {o: i for i, o in enumerate(to_orig)}
    edges = [
        (inv[u], inv[v])
        for u in sorted(s)
        for v in g.adj[u]
        if v in t
    ]
    return Graph(len(to_orig), edges), to_orig


def contract_set(g, s):
    """Contract vertex set s into one super-vertex, merging parallel edges.

    Returns (graph, to_new, super_id): to_new maps original ids to new ids
    (members of s all map to super_id).  The kept vertices occupy ids
    0..n-|s|-1 in their original order; the super-vertex is the last id.
    """
    s = set(s)
    if not s:
        raise InvalidArgument("contract_set needs a nonempty set")
    for v in s:
        if not 0 <= v < g.n:
            raise InvalidArgument(f"vertex {v} out of range")
    kept = [v for v in range(g.n) if v not in s]
    super_id = len(kept)
    to_new = {}
    for i, v in enumerate(kept):
        to_new[v] = i
    for v in s:
        to_new[v] = super_id
    edges = set()
    for u, v in g.edges():
        nu, nv = to_new[u], to_new[v]
        if nu != nv:
            edges.add((min(nu, nv), max(nu, nv)))
    return Graph(super_id + 1, sorted(edges)), to_new, super_id


def is_bipartite(g):
    """A proper 2-coloring as (side0, side1) sorted lists, or None."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return (
        sorted(v for v in range(g.n) if color[v] == 0),
        sorted(v for v in range(g.n) if color[v] == 1),
    )


def is_connected(g, ignore=()):
    """Connectivity of G - ignore (vertex deletion)."""
    ignore = set(ignore)
    verts = [v for v in range(g.n) if v not in ignore]
    if not verts:
        return True
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v not in ignore and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(verts)


def components(g, ignore=()):
    """Connected components of G - ignore, each a sorted list."""
    ignore = set(ignore)
    seen = set(ignore)
    out = []
    for root in range(g.n):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        seen.add(root)
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.add(v)
                    stack.append(v)
        out.append(sorted(comp))
    return out


def shortest_path(g, src, dst, forbidden=(), forbidden_edges=()):
    """Shortest src-dst path avoiding `forbidden` vertices (BFS), or None.

    forbidden_edges is an iterable of (u, v) pairs (either orientation).
    Endpoints must not be forbidden.
    """
    forbidden = set(forbidden)
    bad_edges = set()
    for u, v in forbidden_edges:
        bad_edges.add((u, v))
        bad_edges.add((v, u))
    if src in forbidden or dst in forbidden:
        raise InvalidArgument("endpoint is forbidden")
    if src == dst:
        return (src,)
    prev = {src: None}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for v in sorted(g.adj[u]):
                if v in forbidden or v in prev or (u, v) in bad_edges:
                    continue
                prev[v] = u
                if v == dst:
                    path = [v]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return tuple(path)
                nxt.append(v)
        frontier = nxt
    return None


def parse_graph(text):
    """Parse the plain edge-list text format (see module docstring)."""
    n_declared = None
    edges = set()
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 2:
                raise InvalidArgument(f"line {lineno}: malformed header")
            try:
                n_declared = int(parts[1])
            except ValueError:
                raise InvalidArgument(f"line {lineno}: malformed header") from None
            continue
        if len(parts) != 2:
            raise InvalidArgument(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidArgument(f"line {lineno}: expected integers") from None
        if u < 0 or v < 0:
            raise InvalidArgument(f"line {lineno}: negative vertex id")
        if u == v:
            raise InvalidArgument(f"line {lineno}: self-loop")
        edges.add((min(u, v), max(u, v)))
        max_seen = max(max_seen, u, v)
    n = n_declared if n_declared is not None else max_seen + 1
    if max_seen >= n:
        raise InvalidArgument(f"vertex id {max_seen} exceeds declared n={n}")
    return Graph(max(n, 0), sorted(edges))


def format_graph(g):
    """Serialize in the text format (deterministic)."""
    lines = [f"p {g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- small constructors used all over the tests -------------------------


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
