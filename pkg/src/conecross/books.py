"""Book drawings: spine orders, page assignments, circle graphs, cloning.

A k-page book drawing places the vertices on a circle (the circular model
of the spine) and draws every edge as a chord inside one of k disks.  Two
chords on the same page cross exactly when their endpoints interleave
around the circle.  Everything here is a pure function over immutable
values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import Multigraph, clone_vertex

BOOK_FORMAT = "conecross-book-v1"


@dataclass(frozen=True)
class CyclicOrder:
    """A spine order: ``seq[p]`` is the vertex at position p, read cyclically."""

    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.seq) != list(range(len(self.seq))):
            raise ValueError("order is not a permutation of 0..n-1")

    @staticmethod
    def natural(n: int) -> "CyclicOrder":
        return CyclicOrder(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.seq)

    def position_map(self) -> list[int]:
        pos = [0] * self.n
        for p, v in enumerate(self.seq):
            pos[v] = p
        return pos

    def rotated(self, shift: int) -> "CyclicOrder":
        s = shift % self.n
        return CyclicOrder(self.seq[s:] + self.seq[:s])

    def reflected(self) -> "CyclicOrder":
        return CyclicOrder((self.seq[0],) + tuple(reversed(self.seq[1:])))

    def canonical(self) -> "CyclicOrder":
        """Rotate vertex 0 to position 0; reflect so position 1 < position n-1.

        This kills the rotation/reflection symmetry of the circle: each
        cyclic order class has exactly one canonical representative.
        """
        start = self.seq.index(0)
        rot = self.rotated(start)
        if rot.n >= 3 and rot.seq[1] > rot.seq[-1]:
            rot = rot.reflected()
        return rot


def canonical_orders(n: int) -> Iterator[CyclicOrder]:
    """All canonical cyclic orders of 0..n-1; there are (n-1)!/2 for n >= 3."""
    from itertools import permutations

    if n <= 2:
        yield CyclicOrder.natural(n)
        return
    for perm in permutations(range(1, n)):
        if perm[0] < perm[-1]:
            yield CyclicOrder((0,) + perm)


def interleaves(order: CyclicOrder, e: tuple[int, int], f: tuple[int, int]) -> bool:
    """Do chords with endpoint pairs e and f cross in this cyclic order?

    True iff the chords share no endpoint and exactly one endpoint of f
    lies strictly between the endpoints of e.  Parallel instances share
    both endpoints and therefore never interleave: they nest.
    """
    a, b = e
    c, d = f
    if a == c or a == d or b == c or b == d:
        return False
    pos = order.position_map()
    n = order.n
    span = (pos[b] - pos[a]) % n
    c_in = (pos[c] - pos[a]) % n < span
    d_in = (pos[d] - pos[a]) % n < span
    return c_in != d_in


@dataclass(frozen=True)
class BookDrawing:
    """A spine order plus a page index for every edge instance."""

    graph: Multigraph
    order: CyclicOrder
    pages: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order.n != self.graph.n:
            raise ValueError("order size does not match vertex count")
        if len(self.pages) != self.graph.m:
            raise ValueError("need one page per edge instance")
        if any(p < 0 for p in self.pages):
            raise ValueError("page indices must be non-negative")

    @property
    def page_count(self) -> int:
        return max(self.pages, default=0) + 1 if self.pages else 1

    def crossing_pairs(self) -> list[tuple[int, int]]:
        """Unordered instance-id pairs on a common page that interleave."""
        insts = self.graph.instances()
        pos = self.order.position_map()
        n = self.graph.n
        out = []
        for i in range(len(insts)):
            a, b, _ = insts[i]
            pi = self.pages[i]
            span_a = (pos[b] - pos[a]) % n
            for j in range(i + 1, len(insts)):
                if self.pages[j] != pi:
                    continue
                c, d, _ = insts[j]
                if a == c or a == d or b == c or b == d:
                    continue
                c_in = (pos[c] - pos[a]) % n < span_a
                d_in = (pos[d] - pos[a]) % n < span_a
                if c_in != d_in:
                    out.append((i, j))
        return out

    def to_json_dict(self) -> dict:
        return {
            "format": BOOK_FORMAT,
            "graph": self.graph.to_json_dict(),
            "order": list(self.order.seq),
            "pages": {str(i): p for i, p in enumerate(self.pages)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: dict) -> "BookDrawing":
        if data.get("format") != BOOK_FORMAT:
            raise ValueError(f"not a {BOOK_FORMAT} object")
        graph = Multigraph.from_json_dict(data["graph"])
        order = CyclicOrder(tuple(int(v) for v in data["order"]))
        pages_map = {int(k): int(v) for k, v in data["pages"].items()}
        if sorted(pages_map) != list(range(graph.m)):
            raise ValueError("pages must cover edge ids 0..M-1")
        pages = tuple(pages_map[i] for i in range(graph.m))
        return BookDrawing(graph, order, pages)

    @staticmethod
    def from_json(text: str) -> "BookDrawing":
        return BookDrawing.from_json_dict(json.loads(text))


def one_page_drawing(g: Multigraph, order: CyclicOrder | None = None) -> BookDrawing:
    if order is None:
        order = CyclicOrder.natural(g.n)
    return BookDrawing(g, order, (0,) * g.m)


def count_crossings(d: BookDrawing) -> int:
    return len(d.crossing_pairs())


@dataclass(frozen=True)
class CircleGraph:
    """Interleaving graph of a 1-page drawing: one vertex per edge instance."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)


def circle_graph(g: Multigraph, order: CyclicOrder) -> CircleGraph:
    """Chord interleaving graph; depends on the order only, not on pages."""
    one_page = one_page_drawing(g, order)
    return CircleGraph(g.m, tuple(one_page.crossing_pairs()))


def cut_size(cg: CircleGraph, side: Sequence[int]) -> int:
    return sum(1 for i, j in cg.edges if side[i] != side[j])


def clone_vertex_book(d: BookDrawing, v: int, with_edge: bool = False) -> BookDrawing:
    """Clone v in the drawing: twin inserted on the spine right after v.

    Every edge vu is duplicated as (twin)u on the same page, so each new
    edge reproduces the interleaving pattern of its template.  With
    ``with_edge`` the spine-adjacent edge v-twin is added on page 0, where
    it interleaves nothing.
    """
    g = d.graph
    if not (0 <= v < g.n):
        raise ValueError(f"no vertex {v}")
    new_graph = clone_vertex(g, v, with_edge)
    twin = g.n

    vpos = d.order.seq.index(v)
    new_seq = d.order.seq[: vpos + 1] + (twin,) + d.order.seq[vpos + 1 :]

    page_of: dict[tuple[int, int, int], int] = {}
    for i, (a, b, copy) in enumerate(g.instances()):
        page_of[(a, b, copy)] = d.pages[i]
        if a == v or b == v:
            u = b if a == v else a
            lo, hi = (u, twin) if u < twin else (twin, u)
            page_of[(lo, hi, copy)] = d.pages[i]
    if with_edge:
        page_of[(v, twin, 0)] = 0

    pages = tuple(page_of[inst] for inst in new_graph.instances())
    return BookDrawing(new_graph, CyclicOrder(new_seq), pages)
