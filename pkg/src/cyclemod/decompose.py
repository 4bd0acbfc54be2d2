"""Connectivity structure: blocks, cut vertices, end blocks, 2-separations,
and the rooted 2-connectivity test for a graph with two roots (x, y).

(G, x, y) is rooted 2-connected iff G + xy is 2-connected; equivalently
(cross-asserted here) G is connected of order >= 3, has at most two end
blocks, and every end block contains x or y as a non-cut vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Disconnected, InvalidArgument
from .graph import components, is_connected


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple          # tuple of sorted vertex tuples
    cut_vertices: tuple    # sorted
    incidence: tuple       # (block index, cut vertex) pairs
    end_blocks: tuple      # indices of blocks with <= 1 incident cut vertex


@dataclass(frozen=True)
class Separation2:
    a: tuple
    b: tuple
    cut: tuple  # the two shared vertices


def _biconnected_edge_components(g):
    """Edge sets of the biconnected components (iterative low-link DFS)."""
    visited = set()
    comps = []
    for start in range(g.n):
        if start in visited:
            continue
        discovery = {start: 0}
        low = {start: 0}
        visited.add(start)
        edge_stack = []
        stack = [(start, start, iter(sorted(g.adj[start])))]
        while stack:
            grandparent, parent, children = stack[-1]
            child = next(children, None)
            if child is not None:
                if child == grandparent:
                    continue
                if child in visited:
                    if discovery[child] <= discovery[parent]:
                        low[parent] = min(low[parent], discovery[child])
                        edge_stack.append((parent, child))
                else:
                    low[child] = discovery[child] = len(discovery)
                    visited.add(child)
                    stack.append((parent, child, iter(sorted(g.adj[child]))))
                    edge_stack.append((parent, child))
                continue
            stack.pop()
            if len(stack) > 1:
                if low[parent] >= discovery[grandparent]:
                    ind = edge_stack.index((grandparent, parent))
                    comps.append(tuple(edge_stack[ind:]))
                    del edge_stack[ind:]
                low[grandparent] = min(low[parent], low[grandparent])
            elif stack:
                ind = edge_stack.index((start, parent))
                comps.append(tuple(edge_stack[ind:]))
                del edge_stack[ind:]
    return comps


def block_cut_tree(g):
    """Blocks, cut vertices, incidence, end blocks of a connected graph."""
    if g.n == 0:
        raise InvalidArgument("empty graph")
    if not is_connected(g):
        raise Disconnected("block_cut_tree needs a connected graph")
    edge_comps = _biconnected_edge_components(g)
    blocks = []
    for comp in edge_comps:
        verts = set()
        for u, v in comp:
            verts.add(u)
            verts.add(v)
        blocks.append(tuple(sorted(verts)))
    if not blocks and g.n == 1:
        blocks = [(0,)]
    blocks.sort()
    membership = {}
    for i, blk in enumerate(blocks):
        for v in blk:
            membership.setdefault(v, []).append(i)
    cut_vertices = tuple(sorted(v for v, bs in membership.items() if len(bs) > 1))
    incidence = tuple(
        sorted((i, v) for v in cut_vertices for i in membership[v])
    )
    cuts_per_block = {i: 0 for i in range(len(blocks))}
    for i, _v in incidence:
        cuts_per_block[i] += 1
    end_blocks = tuple(i for i in range(len(blocks)) if cuts_per_block[i] <= 1)
    return BlockCutTree(tuple(blocks), cut_vertices, incidence, end_blocks)


def cut_vertices(g):
    return block_cut_tree(g).cut_vertices


def is_2_connected(g):
    """n >= 3, connected, no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    return not block_cut_tree(g).cut_vertices


def _rooted_via_blocks(g, x, y):
    """R1/R2 reading: connected, order >= 3, <= 2 end blocks, every end
    block contains x or y as a non-cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    bct = block_cut_tree(g)
    if len(bct.end_blocks) > 2:
        return False
    cuts = set(bct.cut_vertices)
    for i in bct.end_blocks:
        blk = set(bct.blocks[i])
        if not ((x in blk and x not in cuts) or (y in blk and y not in cuts)):
            return False
    return True


def is_rooted_2_connected(g, x, y):
    """True iff G + xy is 2-connected (cross-asserted with the end-block test)."""
    if x == y:
        raise InvalidArgument("roots must differ")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise InvalidArgument("root out of range")
    direct = is_2_connected(g.with_edge(x, y)) if not g.has_edge(x, y) else is_2_connected(g)
    via_blocks = _rooted_via_blocks(g, x, y)
    assert direct == via_blocks, (
        f"rooted-2-connectivity tests disagree on n={g.n}, x={x}, y={y}"
    )
    return direct


def vertex_connectivity_at_least(g, t):
    """Decide kappa(G) >= t for t in {2, 3} (brute-force pair deletion)."""
    if t not in (2, 3):
        raise InvalidArgument("t must be 2 or 3")
    if g.n < t + 1:
        raise InvalidArgument(f"graph too small to ask about {t}-connectivity")
    if not is_2_connected(g):
        return False
    if t == 2:
        return True
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.n - 2 >= 2 and not is_connected(g, ignore=(u, v)):
                return False
    return True


def find_2_separation(g):
    """A 2-separation (A, B) with |A|, |B| >= 3, or None if 3-connected.

    Deterministic: lexicographically smallest cut pair; side A is the one
    containing the smallest remaining vertex id.
    """
    if g.n < 4:
        return None
    if not is_2_connected(g):
        raise InvalidArgument("find_2_separation expects a 2-connected graph")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            comps = components(g, ignore=(u, v))
            if len(comps) > 1:
                a_side = set(comps[0]) | {u, v}
                b_side = set().union(*comps[1:]) | {u, v}
                return Separation2(
                    a=tuple(sorted(a_side)),
                    b=tuple(sorted(b_side)),
                    cut=(u, v),
                )
    return None


def feasible_end_blocks(c, y):
    """End blocks B (with cut vertex b) of c such that y is not in B - b.

    Returns (list of (block_vertices, b), is_single_block).  When c has just
    one block there is no cut structure and the list is empty with the flag
    set.  Results sorted by smallest contained vertex id.
    """
    if not is_connected(c):
        raise Disconnected("feasible_end_blocks needs a connected graph")
    if not (0 <= y < c.n):
        raise InvalidArgument("y out of range")
    bct = block_cut_tree(c)
    if len(bct.blocks) == 1:
        return [], True
    cut_of = {}
    for i, v in bct.incidence:
        cut_of.setdefault(i, []).append(v)
    out = []
    for i in bct.end_blocks:
        blk = bct.blocks[i]
        b = cut_of[i][0]
        if y in blk and y != b:
            continue
        out.append((blk, b))
    out.sort(key=lambda item: min(item[0]))
    return out, False
