"""Maximum cuts of simple graphs, exact and Edwards-guaranteed heuristic.

Functions here work on a plain ``(n, edges)`` view: n vertices labelled
0..n-1 and an iterable of endpoint pairs, no parallel edges.  Callers pass
``g.n, g.simple_pairs()`` for a Multigraph or ``cg.n_vertices, cg.edges``
for a circle graph.

The Edwards bound says every connected graph with m edges has a cut of
size at least m/2 + (sqrt(8m+1)-1)/8.  Comparisons against it are done in
exact integer arithmetic, never through floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, sqrt
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Cut:
    """A bipartition: side[v] is 0 or 1; size counts edges across."""

    side: tuple[int, ...]
    size: int


def cut_value(edges: Iterable[tuple[int, int]], side: Sequence[int]) -> int:
    return sum(1 for u, v in edges if side[u] != side[v])


@dataclass(frozen=True)
class EdwardsBound:
    """The guarantee m/2 + (sqrt(8m+1)-1)/8 for a connected graph with m edges."""

    m: int

    def approx(self) -> float:
        return self.m / 2 + (sqrt(8 * self.m + 1) - 1) / 8

    def met_by(self, size: int) -> bool:
        """Is size >= m/2 + (sqrt(8m+1)-1)/8, decided exactly?

        size >= bound  iff  8*size + 1 - 4m >= sqrt(8m+1), so the test is
        s >= 0 and s*s >= 8m+1 with s = 8*size + 1 - 4m.
        """
        s = 8 * size + 1 - 4 * self.m
        return s >= 0 and s * s >= 8 * self.m + 1

    def minimum_met(self) -> int:
        """Smallest integer cut size meeting the bound."""
        c = max(0, (4 * self.m - 1 + isqrt(8 * self.m + 1)) // 8 - 1)
        while not self.met_by(c):
            c += 1
        return c


def edwards_bound(m: int) -> EdwardsBound:
    if m < 0:
        raise ValueError("edge count must be non-negative")
    return EdwardsBound(m)


EXACT_LIMIT = 32


def _components(n: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def _exact_connected(n: int, edges: Sequence[tuple[int, int]]) -> Cut:
    """Branch and bound over side assignments in vertex order.

    Vertex 0 is pinned to side 0 and branches try side 0 before side 1, so
    the first optimum reached is the lexicographically smallest indicator
    vector among all maximum cuts with 0 on side A.  Pruning with
    bound <= best is safe for that tie-break: any equal-value cut in a
    pruned subtree is lexicographically later than the incumbent.
    """
    if n == 0:
        return Cut((), 0)
    adj_below: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj_below[max(u, v)].append(min(u, v))
    # suffix[i] = edges whose larger endpoint is >= i: still winnable after
    # vertices 0..i-1 have been fixed.
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + len(adj_below[i])

    side = [0] * n
    best_side: list[int] | None = None
    best = -1

    def walk(i: int, cut: int) -> None:
        nonlocal best, best_side
        if cut + suffix[i] <= best:
            return
        if i == n:
            best = cut
            best_side = side[:]
            return
        for s in (0, 1) if i > 0 else (0,):
            side[i] = s
            gain = sum(1 for u in adj_below[i] if side[u] != s)
            walk(i + 1, cut + gain)

    walk(0, 0)
    assert best_side is not None
    return Cut(tuple(best_side), best)


def maxcut_exact(n: int, edges: Iterable[tuple[int, int]]) -> Cut:
    """Maximum cut, exact, for up to 32 vertices.

    Solves each connected component separately; the lexicographic
    tie-break then anchors every component's smallest vertex on side A.
    """
    edge_list = [tuple(e) for e in edges]
    if n > EXACT_LIMIT:
        raise ValueError(f"exact max-cut is limited to {EXACT_LIMIT} vertices, got {n}")
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"bad edge ({u}, {v})")
    side = [0] * n
    total = 0
    for comp in _components(n, edge_list):
        index = {v: i for i, v in enumerate(comp)}
        local = [(index[u], index[v]) for u, v in edge_list if u in index and v in index]
        cut = _exact_connected(len(comp), local)
        for v, i in index.items():
            side[v] = cut.side[i]
        total += cut.size
    return Cut(tuple(side), total)


def _greedy_local(n: int, edges: Sequence[tuple[int, int]], order: Sequence[int]) -> list[int]:
    """Place vertices greedily in the given order, then flip to local optimum."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    side = [-1] * n
    for v in order:
        placed0 = sum(1 for u in adj[v] if side[u] == 0)
        placed1 = sum(1 for u in adj[v] if side[u] == 1)
        side[v] = 1 if placed0 > placed1 else 0
    improved = True
    while improved:
        improved = False
        for v in range(n):
            same = sum(1 for u in adj[v] if side[u] == side[v])
            other = len(adj[v]) - same
            if same > other:
                side[v] = 1 - side[v]
                improved = True
    return side


def _bfs_order(n: int, edges: Sequence[tuple[int, int]], comp: Sequence[int]) -> list[int]:
    adj: dict[int, list[int]] = {v: [] for v in comp}
    for u, v in edges:
        if u in adj and v in adj:
            adj[u].append(v)
            adj[v].append(u)
    seen = {comp[0]}
    queue = [comp[0]]
    for v in queue:
        for u in sorted(adj[v]):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return queue


def maxcut_edwards(n: int, edges: Iterable[tuple[int, int]]) -> Cut:
    """A cut meeting the Edwards bound on every connected component.

    Greedy placement along a BFS order plus single-flip local search gets
    there on its own in practice; the postcondition is still checked per
    component, with exact search as the fallback so the guarantee is
    unconditional for components of at most 32 vertices.
    """
    edge_list = [tuple(e) for e in edges]
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"bad edge ({u}, {v})")
    side = [0] * n
    total = 0
    for comp in _components(n, edge_list):
        comp_edges = [(u, v) for u, v in edge_list if u in set(comp)]
        bound = edwards_bound(len(comp_edges))
        order = _bfs_order(n, comp_edges, comp)
        local_side = _greedy_local(n, comp_edges, order)
        size = cut_value(comp_edges, local_side)
        if not bound.met_by(size):
            if len(comp) > EXACT_LIMIT:
                raise RuntimeError(
                    "heuristic missed the Edwards bound on a component too large "
                    f"for exact fallback ({len(comp)} vertices)"
                )
            index = {v: i for i, v in enumerate(comp)}
            local = [(index[u], index[v]) for u, v in comp_edges]
            cut = _exact_connected(len(comp), local)
            for v, i in index.items():
                local_side[v] = cut.side[i]
            size = cut.size
        if local_side[comp[0]] == 1:
            for v in comp:
                local_side[v] = 1 - local_side[v]
        for v in comp:
            side[v] = local_side[v]
        total += size
    return Cut(tuple(side), total)
