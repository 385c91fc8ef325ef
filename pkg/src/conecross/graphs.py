"""Loopless undirected multigraphs and the graph families used throughout.

Vertices are integers 0..n-1.  Parallel edges are stored compressed as
(u, v, multiplicity) entries but every downstream consumer works with
*edge instances*: copy j of pair (u, v) is one instance, and instances
are numbered 0..M-1 in sorted (u, v, copy) order.  That numbering is

the identity that crossing certificates and book drawings refer to, so
it must be stable under serialization round-trips.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

GRAPH_FORMAT = "conecross-graph-v1"


@dataclass(frozen=True)
class Multigraph:
    """Immutable loopless multigraph.

    ``edges`` holds one ``(u, v, mult)`` triple per unordered pair with
    u < v, sorted by (u, v).  Use :meth:`build` instead of the raw
    constructor when the input may contain duplicates or (v, u) pairs.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        prev = None
        for u, v, mult in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if u > v:
                raise ValueError(f"edge ({u},{v}) not normalized (need u < v)")
            if mult < 1:
                raise ValueError(f"edge ({u},{v}) has multiplicity {mult}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges not sorted or pair repeated")
            prev = (u, v)

    @staticmethod
    def build(n: int, pairs: Iterable[Sequence[int]]) -> "Multigraph":
        """Normalize an edge list: orient pairs, merge duplicates.

        Entries may be (u, v) or (u, v, mult); multiplicities of repeated
        pairs accumulate.
        """
        acc: dict[tuple[int, int], int] = {}
        for entry in pairs:
            if len(entry) == 2:
                u, v = entry
                mult = 1
            else:
                u, v, mult = entry
            if u > v:
                u, v = v, u
            acc[(u, v)] = acc.get((u, v), 0) + mult
        edges = tuple((u, v, m) for (u, v), m in sorted(acc.items()))
        return Multigraph(n, edges)

    # ------------------------------------------------------------------
    # edge instances

    @property
    def m(self) -> int:
        """Number of edge instances (multiplicities counted)."""
        return sum(mult for _, _, mult in self.edges)

    def instances(self) -> list[tuple[int, int, int]]:
        """All (u, v, copy) instances; list index == instance id."""
        out = []
        for u, v, mult in self.edges:
            for copy in range(mult):
                out.append((u, v, copy))
        return out

    def instance_endpoints(self, eid: int) -> tuple[int, int]:
        u, v, _ = self.instances()[eid]
        return u, v

    def instance_id(self, u: int, v: int, copy: int = 0) -> int:
        """Id of copy ``copy`` of pair (u, v); raises KeyError if absent."""
        if u > v:
            u, v = v, u
        eid = 0
        for a, b, mult in self.edges:
            if (a, b) == (u, v):
                if copy >= mult:
                    raise KeyError(f"pair ({u},{v}) has only {mult} copies")
                return eid + copy
            eid += mult
        raise KeyError(f"no edge ({u},{v})")

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        for a, b, mult in self.edges:
            if (a, b) == (u, v):
                return mult
        return 0

    def degree(self, v: int) -> int:
        d = 0
        for a, b, mult in self.edges:
            if a == v or b == v:
                d += mult
        return d

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b, _ in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(set(out))

    def simple_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, _ in self.edges]

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists (isolated included)."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack = [start]
            comp = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Apply the bijection v -> perm[v] to the vertex set."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a bijection on 0..n-1")
        return Multigraph.build(
            self.n, [(perm[u], perm[v], mult) for u, v, mult in self.edges]
        )

    # ------------------------------------------------------------------
    # serialization

    def to_json_dict(self) -> dict:
        return {
            "format": GRAPH_FORMAT,
            "n": self.n,
            "edges": [[u, v, mult] for u, v, mult in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: dict) -> "Multigraph":
        if data.get("format") != GRAPH_FORMAT:
            raise ValueError(f"not a {GRAPH_FORMAT} object")
        return Multigraph(
            int(data["n"]),
            tuple((int(u), int(v), int(m)) for u, v, m in data["edges"]),
        )

    @staticmethod
    def from_json(text: str) -> "Multigraph":
        return Multigraph.from_json_dict(json.loads(text))

    def to_dot(self, name: str = "g") -> str:
        """DOT export; parallel edges appear once per instance."""
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            lines.append(f"  {v};")
        for u, v, mult in self.edges:
            for _ in range(mult):
                lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# generators


def complete_graph(n: int) -> Multigraph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    return Multigraph(n, tuple((u, v, 1) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    pairs = [(i, (i + 1) % n) for i in range(n)]
    return Multigraph.build(n, pairs)


def empty_graph(n: int) -> Multigraph:
    return Multigraph(n, ())


def cone(g: Multigraph) -> Multigraph:
    """Add an apex vertex (id = g.n) joined by a simple edge to every vertex."""
    apex = g.n
    pairs = [(u, v, mult) for u, v, mult in g.edges]
    pairs += [(v, apex, 1) for v in range(g.n)]
    return Multigraph.build(g.n + 1, pairs)


def multiply_edges(g: Multigraph, r: int) -> Multigraph:
    if r < 1:
        raise ValueError("multiplicity factor must be >= 1")
    return Multigraph(g.n, tuple((u, v, mult * r) for u, v, mult in g.edges))


def disjoint_union(g: Multigraph, h: Multigraph) -> Multigraph:
    shift = g.n
    pairs = [(u, v, mult) for u, v, mult in g.edges]
    pairs += [(u + shift, v + shift, mult) for u, v, mult in h.edges]
    return Multigraph.build(g.n + h.n, pairs)


def subdivide_edge(g: Multigraph, eid: int, t: int = 1) -> Multigraph:
    """Replace edge instance ``eid`` by a path of t+1 edges through t new vertices."""
    insts = g.instances()
    if not (0 <= eid < len(insts)):
        raise ValueError(f"no edge instance {eid}")
    if t < 1:
        raise ValueError("subdivision needs t >= 1")
    u, v, _ = insts[eid]
    pairs = []
    for i, (a, b, _copy) in enumerate(insts):
        if i != eid:
            pairs.append((a, b))
    chain = [u] + [g.n + i for i in range(t)] + [v]
    pairs += list(zip(chain, chain[1:]))
    return Multigraph.build(g.n + t, pairs)


def clone_vertex(g: Multigraph, v: int, with_edge: bool = False) -> Multigraph:
    """Add a twin of v (id = g.n): one copy of (new, u) per instance (v, u).

    With ``with_edge`` the twin is also joined to v itself by a single edge.
    """
    if not (0 <= v < g.n):
        raise ValueError(f"no vertex {v}")
    twin = g.n
    pairs = [(u, w, mult) for u, w, mult in g.edges]
    for u, w, mult in g.edges:
        if u == v:
            pairs.append((twin, w, mult))
        elif w == v:
            pairs.append((twin, u, mult))
    if with_edge:
        pairs.append((v, twin, 1))
    return Multigraph.build(g.n + 1, pairs)


def f_graph(k: int) -> Multigraph:
    """Two nested cycles with four consecutive spokes per inner vertex.

    Inner cycle x_0..x_{k-1} gets ids 0..k-1, outer cycle y_0..y_{2k-1}
    gets ids k..3k-1, and x_i is joined to y_{2i-2}, y_{2i-1}, y_{2i},
    y_{2i+1} with y-indices modulo 2k.  3k vertices, 7k edge instances.
    """
    if k < 3:
        raise ValueError("f_graph needs k >= 3")

    def y(j: int) -> int:
        return k + (j % (2 * k))

    pairs = [(i, (i + 1) % k) for i in range(k)]
    pairs += [(y(j), y(j + 1)) for j in range(2 * k)]
    for i in range(k):
        pairs += [(i, y(2 * i - 2)), (i, y(2 * i - 1)), (i, y(2 * i)), (i, y(2 * i + 1))]
    return Multigraph.build(3 * k, pairs)


def fig1_graph() -> Multigraph:
    """The 9-vertex counterexample graph: triangle inside a hexagon.

    Transcription: inner triangle vertices get ids 0, 1, 2 and the hexagon
    vertices ids 3..8 in circular order.  Edges, read off the figure:

    * triangle: 0-1, 0-2, 1-2;
    * hexagon cycle: 3-4, 4-5, 5-6, 6-7, 7-8, 8-3;
    * each triangle vertex joins four consecutive hexagon vertices:
      0 -> {8, 3, 4, 5}, 1 -> {4, 5, 6, 7}, 2 -> {6, 7, 8, 3}.

    21 edges total; isomorphic to f_graph(3) (checked in tests with an
    explicit mapping, not assumed).
    """
    pairs = [
        (0, 1), (0, 2), (1, 2),
        (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 3),
        (0, 8), (0, 3), (0, 4), (0, 5),
        (1, 4), (1, 5), (1, 6), (1, 7),
        (2, 6), (2, 7), (2, 8), (2, 3),
    ]
    return Multigraph.build(9, pairs)


def fig3_graph() -> Multigraph:
    """The 7-vertex wheel-with-chords example.

    Hub 0 is adjacent to every rim vertex 1..6; the rim is the cycle
    1-2-3-4-5-6-1; four chords 1-3, 3-5, 2-4, 4-6.  16 edges.
    """
    pairs = [(0, i) for i in range(1, 7)]
    pairs += [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]
    pairs += [(1, 3), (3, 5), (2, 4), (4, 6)]
    return Multigraph.build(7, pairs)


def random_graph(n: int, m: int, seed: int) -> Multigraph:
    """Deterministic simple random graph with exactly min(m, C(n,2)) edges."""
    import random as _random

    rng = _random.Random(seed)
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(all_pairs)
    return Multigraph.build(n, all_pairs[: min(m, len(all_pairs))])


def iter_instance_pairs(g: Multigraph) -> Iterator[tuple[int, int]]:
    """All unordered non-adjacent instance pairs (the crossable pairs)."""
    insts = g.instances()
    for i in range(len(insts)):
        a, b, _ = insts[i]
        for j in range(i + 1, len(insts)):
            c, d, _ = insts[j]
            if a != c and a != d and b != c and b != d:
                yield i, j
