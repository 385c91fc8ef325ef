"""Planarity decision via the left-right (LR partition) criterion.

The test runs on a plain ``(n, edge list)`` description so the solver can
call it on throwaway planarizations without building graph objects.  Two
cheap screens run first: a graph with at most 8 distinct edges is always
planar (the smallest non-planar subdivisions need 9), and a simple graph
with m > 3n - 6 never is.

The LR test itself is the standard two-pass DFS: an orientation pass
computing lowpoints and nesting depths, then a testing pass maintaining a
stack of conflict pairs of return-edge intervals.  Only the decision is
produced; no embedding is constructed.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .graphs import Multigraph


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None


class _ConflictPair:
    __slots__ = ("L", "R")

    def __init__(self, left: Optional[_Interval] = None, right: Optional[_Interval] = None):
        self.L = left if left is not None else _Interval()
        self.R = right if right is not None else _Interval()

    def swap(self) -> None:
        self.L, self.R = self.R, self.L


def lr_planar(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    """Planarity of the simple graph underlying ``edges`` on vertices 0..n-1."""
    seen = set()
    for u, v in edges:
        if u > v:
            u, v = v, u
        if u != v:
            seen.add((u, v))
    m = len(seen)
    if m <= 8:
        return True
    if n >= 3 and m > 3 * n - 6:
        return False

    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)

    height: list[Optional[int]] = [None] * n
    parent_edge: list[Optional[tuple[int, int]]] = [None] * n
    lowpt: dict = {}
    lowpt2: dict = {}
    nesting_depth: dict = {}
    oriented: set = set()
    out: list[list[int]] = [[] for _ in range(n)]

    # --- orientation pass ---------------------------------------------
    roots = []
    for s in range(n):
        if height[s] is not None or not adj[s]:
            continue
        height[s] = 0
        roots.append(s)
        dfs_stack = [s]
        ind = {s: 0}
        skip_init: set = set()
        while dfs_stack:
            v = dfs_stack.pop()
            e = parent_edge[v]
            descended = False
            neighbors = adj[v]
            i = ind[v]
            while i < len(neighbors):
                w = neighbors[i]
                vw = (v, w)
                if vw not in skip_init:
                    if vw in oriented or (w, v) in oriented:
                        i += 1
                        continue
                    oriented.add(vw)
                    out[v].append(w)
                    lowpt[vw] = height[v]
                    lowpt2[vw] = height[v]
                    if height[w] is None:
                        parent_edge[w] = vw
                        height[w] = height[v] + 1
                        ind[v] = i
                        ind[w] = 0
                        dfs_stack.append(v)
                        dfs_stack.append(w)
                        skip_init.add(vw)
                        descended = True
                        break
                    lowpt[vw] = height[w]

                nesting_depth[vw] = 2 * lowpt[vw]
                if lowpt2[vw] < height[v]:
                    nesting_depth[vw] += 1

                if e is not None:
                    if lowpt[vw] < lowpt[e]:
                        lowpt2[e] = min(lowpt[e], lowpt2[vw])
                        lowpt[e] = lowpt[vw]
                    elif lowpt[vw] > lowpt[e]:
                        lowpt2[e] = min(lowpt2[e], lowpt[vw])
                    else:
                        lowpt2[e] = min(lowpt2[e], lowpt2[vw])
                i += 1
            if not descended:
                ind[v] = i

    ordered: list[list[int]] = [
        sorted(out[v], key=lambda w: nesting_depth[(v, w)]) for v in range(n)
    ]

    # --- testing pass --------------------------------------------------
    S: list[_ConflictPair] = []
    stack_bottom: dict = {}
    lowpt_edge: dict = {}
    ref: dict = {}

    def top() -> Optional[_ConflictPair]:
        return S[-1] if S else None

    def conflicting(interval: _Interval, b) -> bool:
        return not interval.empty() and lowpt[interval.high] > lowpt[b]

    def lowest(pair: _ConflictPair) -> int:
        if pair.L.empty():
            return lowpt[pair.R.low]
        if pair.R.empty():
            return lowpt[pair.L.low]
        return min(lowpt[pair.L.low], lowpt[pair.R.low])

    def add_constraints(ei, e) -> bool:
        pair = _ConflictPair()
        # merge return edges of ei into pair.R
        while True:
            q = S.pop()
            if not q.L.empty():
                q.swap()
            if not q.L.empty():
                return False
            if lowpt[q.R.low] > lowpt[e]:
                if pair.R.empty():
                    pair.R.high = q.R.high
                else:
                    ref[pair.R.low] = q.R.high
                pair.R.low = q.R.low
            else:
                ref[q.R.low] = lowpt_edge[e]
            if top() is stack_bottom[ei]:
                break
        # merge return edges conflicting with ei into pair.L
        while conflicting(top().L, ei) or conflicting(top().R, ei):
            q = S.pop()
            if conflicting(q.R, ei):
                q.swap()
            if conflicting(q.R, ei):
                return False
            ref[pair.R.low] = q.R.high
            if q.R.low is not None:
                pair.R.low = q.R.low
            if pair.L.empty():
                pair.L.high = q.L.high
            else:
                ref[pair.L.low] = q.L.high
            pair.L.low = q.L.low
        if not (pair.L.empty() and pair.R.empty()):
            S.append(pair)
        return True

    def remove_back_edges(e) -> None:
        u = e[0]
        while S and lowest(S[-1]) == height[u]:
            pair = S.pop()
        if S:
            pair = S.pop()
            while pair.L.high is not None and pair.L.high[1] == u:
                pair.L.high = ref.get(pair.L.high)
            if pair.L.high is None and pair.L.low is not None:
                ref[pair.L.low] = pair.R.low
                pair.L.low = None
            while pair.R.high is not None and pair.R.high[1] == u:
                pair.R.high = ref.get(pair.R.high)
            if pair.R.high is None and pair.R.low is not None:
                ref[pair.R.low] = pair.L.low
                pair.R.low = None
            S.append(pair)
        if lowpt[e] < height[u]:
            hl = S[-1].L.high
            hr = S[-1].R.high
            if hl is not None and (hr is None or lowpt[hl] > lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr

    for s in roots:
        dfs_stack = [s]
        ind = {s: 0}
        skip_init = set()
        while dfs_stack:
            v = dfs_stack.pop()
            e = parent_edge[v]
            order_v = ordered[v]
            descended = False
            i = ind[v]
            while i < len(order_v):
                w = order_v[i]
                ei = (v, w)
                if ei not in skip_init:
                    stack_bottom[ei] = top()
                    if ei == parent_edge[w]:
                        ind[v] = i
                        ind[w] = 0
                        dfs_stack.append(v)
                        dfs_stack.append(w)
                        skip_init.add(ei)
                        descended = True
                        break
                    lowpt_edge[ei] = ei
                    S.append(_ConflictPair(right=_Interval(ei, ei)))
                if lowpt[ei] < height[v]:
                    if w == order_v[0]:
                        lowpt_edge[e] = lowpt_edge[ei]
                    elif not add_constraints(ei, e):
                        return False
                i += 1
            if not descended:
                ind[v] = i
                if e is not None:
                    remove_back_edges(e)
    return True


def is_planar(g: Multigraph) -> bool:
    """True iff the underlying simple graph of ``g`` is planar.

    Parallel edges never affect planarity of a loopless multigraph, so the
    input is deduplicated first.  Disconnected graphs are handled.
    """
    return lr_planar(g.n, g.simple_pairs())
