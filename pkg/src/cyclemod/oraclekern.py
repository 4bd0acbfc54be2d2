"""Exhaustive-search kernels: the exact set of simple (x, y)-path lengths
and the exact set of cycle lengths of a graph.

These are the hot loops of the oracle layer.  Two interchangeable
implementations exist:

* a numba @njit kernel over int64 adjacency bitmasks (n <= 63), used when
  numba is importable and CYCLEMOD_NO_NUMBA is unset;
* a pure-Python fallback over arbitrary-width int bitmasks (any n),
  semantically identical.

Both count DFS node expansions against a budget (default 10**7, override
with the CYCLEMOD_BUDGET environment variable) and raise BudgetExceeded
rather than returning a partial answer.
"""

from __future__ import annotations

import os

from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**7

try:  # pragma: no cover - import probing
    if os.environ.get("CYCLEMOD_NO_NUMBA"):
        raise ImportError("numba disabled by CYCLEMOD_NO_NUMBA")
    import numpy as _np
    from numba import njit as _njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False


def default_budget():
    raw = os.environ.get("CYCLEMOD_BUDGET")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return DEFAULT_BUDGET


def using_numba():
    return _HAVE_NUMBA and not os.environ.get("CYCLEMOD_NO_NUMBA")


def _adj_masks(g):
    return [sum(1 << v for v in g.adj[u]) for u in range(g.n)]


# -- pure-Python kernels ---------------------------------------------------


def _path_lengths_py(adj, n, x, y, budget):
    """(bitmask of realizable simple x-y path lengths, nodes, truncated)."""
    lengths = 0
    nodes = 0
    visited = 1 << x
    stack_v = [x]
    stack_rem = [adj[x]]
    while stack_v:
        rem = stack_rem[-1]
        if rem == 0:
            visited &= ~(1 << stack_v[-1])
            stack_v.pop()
            stack_rem.pop()
            continue
        b = rem & -rem
        stack_rem[-1] = rem & ~b
        v = b.bit_length() - 1
        nodes += 1
        if nodes > budget:
            return lengths, nodes, True
        if v == y:
            lengths |= 1 << len(stack_v)
            continue
        if visited & b:
            continue
        visited |= b
        stack_v.append(v)
        stack_rem.append(adj[v] & ~visited & ~(0))
    return lengths, nodes, False


def _cycle_lengths_py(adj, n, budget):
    """(bitmask of realizable cycle lengths, nodes, truncated).

    Each cycle is found rooted at its smallest vertex; only vertices above
    the root are explored."""
    lengths = 0
    nodes = 0
    for s in range(n):
        above = ~((1 << (s + 1)) - 1)
        visited = 1 << s
        stack_v = [s]
        stack_rem = [adj[s] & above]
        while stack_v:
            rem = stack_rem[-1]
            if rem == 0:
                visited &= ~(1 << stack_v[-1])
                stack_v.pop()
                stack_rem.pop()
                continue
            b = rem & -rem
            stack_rem[-1] = rem & ~b
            v = b.bit_length() - 1
            nodes += 1
            if nodes > budget:
                return lengths, nodes, True
            if visited & b:
                continue
            if len(stack_v) >= 2 and (adj[v] >> s) & 1:
                lengths |= 1 << (len(stack_v) + 1)
            visited |= b
            stack_v.append(v)
            stack_rem.append(adj[v] & above & ~visited)
        # (visited reset per root via the loop above)
    return lengths, nodes, False


# -- numba kernels ---------------------------------------------------------

if _HAVE_NUMBA:  # pragma: no branch

    @_njit(cache=True)
    def _path_lengths_nb(adj, n, x, y, budget):  # pragma: no cover - jitted
        lengths = 0
        nodes = 0
        visited = 1 << x
        stack_v = _np.empty(n + 1, dtype=_np.int64)
        stack_rem = _np.empty(n + 1, dtype=_np.int64)
        top = 0
        stack_v[0] = x
        stack_rem[0] = adj[x]
        while top >= 0:
            rem = stack_rem[top]
            if rem == 0:
                visited &= ~(1 << stack_v[top])
                top -= 1
                continue
            b = rem & -rem
            stack_rem[top] = rem & ~b
            v = 0
            bb = b
            while bb > 1:
                bb >>= 1
                v += 1
            nodes += 1
            if nodes > budget:
                return lengths, nodes, True
            if v == y:
                lengths |= 1 << (top + 1)
                continue
            if visited & b:
                continue
            visited |= b
            top += 1
            stack_v[top] = v
            stack_rem[top] = adj[v] & ~visited
        return lengths, nodes, False

    @_njit(cache=True)
    def _cycle_lengths_nb(adj, n, budget):  # pragma: no cover - jitted
        lengths = 0
        nodes = 0
        stack_v = _np.empty(n + 1, dtype=_np.int64)
        stack_rem = _np.empty(n + 1, dtype=_np.int64)
        for s in range(n):
            above = ~((1 << (s + 1)) - 1)
            visited = 1 << s
            top = 0
            stack_v[0] = s
            stack_rem[0] = adj[s] & above
            while top >= 0:
                rem = stack_rem[top]
                if rem == 0:
                    visited &= ~(1 << stack_v[top])
                    top -= 1
                    continue
                b = rem & -rem
                stack_rem[top] = rem & ~b
                v = 0
                bb = b
                while bb > 1:
                    bb >>= 1
                    v += 1
                nodes += 1
                if nodes > budget:
                    return lengths, nodes, True
                if visited & b:
                    continue
                if top >= 1 and (adj[v] >> s) & 1:
                    lengths |= 1 << (top + 2)
                visited |= b
                top += 1
                stack_v[top] = v
                stack_rem[top] = adj[v] & above & ~visited
        return lengths, nodes, False


def _mask_to_set(mask):
    out = set()
    i = 0
    while mask:
        if mask & 1:
            out.add(i)
        mask >>= 1
        i += 1
    return out


def path_length_set(g, x, y, budget=None):
    """Exact set of lengths of simple (x, y)-paths in g."""
    if budget is None:
        budget = default_budget()
    adj = _adj_masks(g)
    if using_numba() and g.n <= 62:
        arr = _np.array(adj, dtype=_np.int64)
        mask, nodes, truncated = _path_lengths_nb(arr, g.n, x, y, budget)
        mask = int(mask)
    else:
        mask, nodes, truncated = _path_lengths_py(adj, g.n, x, y, budget)
    if truncated:
        raise BudgetExceeded(f"path enumeration exceeded {budget} nodes")
    return _mask_to_set(mask)


def cycle_length_set(g, budget=None):
    """Exact set of cycle lengths of g (its cycle spectrum)."""
    if budget is None:
        budget = default_budget()
    adj = _adj_masks(g)
    if using_numba() and g.n <= 62:
        arr = _np.array(adj, dtype=_np.int64)
        mask, nodes, truncated = _cycle_lengths_nb(arr, g.n, budget)
        mask = int(mask)
    else:
        mask, nodes, truncated = _cycle_lengths_py(adj, g.n, budget)
    if truncated:
        raise BudgetExceeded(f"cycle enumeration exceeded {budget} nodes")
    return _mask_to_set(mask)


# -- witness materialization (deterministic first-found DFS) ---------------


def find_path_with_length(g, x, y, length, avoid=()):
    """First (lex by neighbor order) simple (x, y)-path with exactly
    `length` edges avoiding `avoid`, or None."""
    avoid = set(avoid)
    if x in avoid or y in avoid:
        return None
    path = [x]
    onpath = {x}

    def rec():
        u = path[-1]
        if len(path) - 1 == length:
            return u == y
        if u == y:
            return False
        # simple depth pruning: must still be able to reach the length
        for v in sorted(g.adj[u]):
            if v in onpath or v in avoid:
                continue
            path.append(v)
            onpath.add(v)
            if rec():
                return True
            onpath.discard(v)
            path.pop()
        return False

    if rec():
        return tuple(path)
    return None


def find_cycle_with_length(g, length, avoid=()):
    """First simple cycle with exactly `length` edges, or None."""
    avoid = set(avoid)
    for s in range(g.n):
        if s in avoid:
            continue
        path = [s]
        onpath = {s}

        def rec():
            u = path[-1]
            if len(path) == length:
                return g.has_edge(u, s)
            for v in sorted(g.adj[u]):
                if v <= s or v in onpath or v in avoid:
                    continue
                path.append(v)
                onpath.add(v)
                if rec():
                    return True
                onpath.discard(v)
                path.pop()
            return False

        if length >= 3 and rec():
            return tuple(path)
    return None
