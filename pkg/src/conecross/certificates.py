"""Crossing certificates: combinatorial witnesses that cr(G) <= c.

A certificate lists c unordered pairs of edge instances that cross, plus,
for every edge crossed at least twice, the order of its crossings along
the edge (traversed from its smaller endpoint).  Replacing each crossing
by a degree-4 dummy vertex planarizes the drawing, so the certificate is
realizable exactly when that planarization is planar.

Good-drawing restrictions are baked into validity: adjacent edge
instances (sharing an endpoint, which includes parallel copies of one
pair) never cross, and no pair of edges crosses twice.  Some optimal
drawing of any loopless multigraph satisfies both, so searching over such
certificates loses nothing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .books import BookDrawing
from .graphs import Multigraph
from .planarity import lr_planar

CERT_FORMAT = "conecross-cert-v1"


@dataclass(frozen=True)
class CrossingCertificate:
    """crossings: sorted distinct (e, f) instance-id pairs with e < f.

    edge_orders maps an edge-instance id to the indices (into crossings)
    of that edge's crossings, in traversal order from the smaller
    endpoint.  Entries are mandatory for edges crossed twice or more and
    optional otherwise; stored sorted by edge id.
    """

    crossings: tuple[tuple[int, int], ...]
    edge_orders: tuple[tuple[int, tuple[int, ...]], ...] = ()

    @staticmethod
    def build(
        crossings: Iterable[tuple[int, int]],
        edge_orders: Mapping[int, Sequence[int]] | None = None,
    ) -> "CrossingCertificate":
        """Normalize (sort pairs, sort lists) and construct."""
        raw = [(min(e, f), max(e, f)) for e, f in crossings]
        ordered = sorted(raw)
        if edge_orders is None:
            edge_orders = {}
        # Order lists refer to positions in the original sequence; remap.
        remap = {old: ordered.index(pair) for old, pair in enumerate(raw)}
        fixed = {
            eid: tuple(remap[i] for i in order) for eid, order in edge_orders.items()
        }
        return CrossingCertificate(
            tuple(ordered), tuple(sorted(fixed.items()))
        )

    @property
    def count(self) -> int:
        return len(self.crossings)

    def orders(self) -> dict[int, tuple[int, ...]]:
        return dict(self.edge_orders)

    def to_json_dict(self) -> dict:
        return {
            "format": CERT_FORMAT,
            "crossings": [list(pair) for pair in self.crossings],
            "edge_orders": {str(eid): list(seq) for eid, seq in self.edge_orders},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: dict) -> "CrossingCertificate":
        if data.get("format") != CERT_FORMAT:
            raise ValueError(f"not a {CERT_FORMAT} object")
        crossings = tuple((int(e), int(f)) for e, f in data["crossings"])
        orders = {
            int(eid): tuple(int(i) for i in seq)
            for eid, seq in data.get("edge_orders", {}).items()
        }
        return CrossingCertificate(crossings, tuple(sorted(orders.items())))

    @staticmethod
    def from_json(text: str) -> "CrossingCertificate":
        return CrossingCertificate.from_json_dict(json.loads(text))


def certificate_error(g: Multigraph, cert: CrossingCertificate) -> str | None:
    """Why cert is structurally invalid for g, or None if it is fine."""
    m = g.m
    insts = g.instances()
    seen: set[tuple[int, int]] = set()
    prev: tuple[int, int] | None = None
    for e, f in cert.crossings:
        if not (0 <= e < m and 0 <= f < m):
            return f"edge instance out of range in crossing ({e}, {f})"
        if e >= f:
            return f"crossing pair ({e}, {f}) not in sorted form"
        if prev is not None and (e, f) < prev:
            return "crossings not sorted"
        prev = (e, f)
        if (e, f) in seen:
            return f"repeated crossing ({e}, {f})"
        seen.add((e, f))
        ue, ve, _ = insts[e]
        uf, vf, _ = insts[f]
        if ue in (uf, vf) or ve in (uf, vf):
            return f"adjacent edge instances cross in ({e}, {f})"
    hits: dict[int, list[int]] = {}
    for idx, (e, f) in enumerate(cert.crossings):
        hits.setdefault(e, []).append(idx)
        hits.setdefault(f, []).append(idx)
    declared = dict(cert.edge_orders)
    for eid, order in declared.items():
        if not (0 <= eid < m):
            return f"edge order for unknown instance {eid}"
        if sorted(order) != sorted(hits.get(eid, [])):
            return f"edge order for instance {eid} does not list its crossings"
    for eid, indices in hits.items():
        if len(indices) >= 2 and eid not in declared:
            return f"instance {eid} crossed {len(indices)} times but has no order"
    return None


def planarize(g: Multigraph, cert: CrossingCertificate) -> Multigraph:
    """Replace each crossing by a degree-4 dummy vertex (ids n, n+1, ...).

    Each edge is split along its crossing order into consecutive segments.
    Raises ValueError on a malformed certificate.
    """
    reason = certificate_error(g, cert)
    if reason is not None:
        raise ValueError(reason)
    hits: dict[int, list[int]] = {}
    for idx, (e, f) in enumerate(cert.crossings):
        hits.setdefault(e, []).append(idx)
        hits.setdefault(f, []).append(idx)
    order = dict(cert.edge_orders)
    pairs: list[tuple[int, int]] = []
    for eid, (u, v, _) in enumerate(g.instances()):
        along = order.get(eid, hits.get(eid, []))
        chain = [u] + [g.n + idx for idx in along] + [v]
        pairs.extend(zip(chain, chain[1:]))
    return Multigraph.build(g.n + cert.count, pairs)


def verify_certificate(g: Multigraph, cert: CrossingCertificate) -> tuple[int, bool]:
    """(crossing count, realizable?).  Malformed certificates are just invalid."""
    if certificate_error(g, cert) is not None:
        return len(cert.crossings), False
    h = planarize(g, cert)
    return cert.count, lr_planar(h.n, list(h.simple_pairs()))


@dataclass(frozen=True)
class SolveStats:
    nodes: int = 0
    planarity_calls: int = 0
    elapsed_ms: float = 0.0


@dataclass(frozen=True)
class SolveResult:
    """Bracket on a crossing number, exact when the two sides meet."""

    lower: int
    upper: int
    status: str
    certificate: CrossingCertificate | None = None
    stats: SolveStats = field(default_factory=SolveStats)

    def __post_init__(self) -> None:
        if self.status not in ("exact", "bounds-only"):
            raise ValueError(f"unknown status {self.status!r}")
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        if self.status == "exact" and self.lower != self.upper:
            raise ValueError("exact result with open bracket")

    @property
    def value(self) -> int:
        if self.status != "exact":
            raise ValueError("no exact value, bracket is open")
        return self.lower

    def to_json_dict(self) -> dict:
        out: dict = {
            "lower": self.lower,
            "upper": self.upper,
            "status": self.status,
            "stats": {
                "nodes": self.stats.nodes,
                "planarity_calls": self.stats.planarity_calls,
                "elapsed_ms": round(self.stats.elapsed_ms, 3),
            },
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json_dict()
        return out


def _slot_abscissas(d: BookDrawing) -> dict[tuple[int, int], Fraction]:
    """Exact x coordinate of each (instance id, endpoint vertex) chord end.

    Vertices sit at integer positions along a parabola; the chord ends at
    a vertex are fanned out to the right of it, ordered so that chords
    sharing the vertex never cross: targets taken in clockwise cyclic
    order starting just below the vertex get increasing offsets.  Copies
    of a parallel pair nest, copy 0 outermost: ascending copy index at
    the left endpoint, descending at the right.
    """
    g = d.graph
    pos = d.order.position_map()
    n = g.n
    ends: dict[int, list[tuple[int, int, int]]] = {v: [] for v in range(n)}
    for eid, (u, v, copy) in enumerate(g.instances()):
        ends[u].append((eid, v, copy))
        ends[v].append((eid, u, copy))

    out: dict[tuple[int, int], Fraction] = {}
    for v, incident in ends.items():
        pv = pos[v]

        def slot_key(item: tuple[int, int, int]) -> tuple[int, int]:
            eid, target, copy = item
            back = (pv - pos[target]) % n
            at_right_end = pos[target] < pv
            nest = -copy if at_right_end else copy
            return (back, nest)

        incident.sort(key=slot_key)
        width = len(incident) + 1
        for j, (eid, _, _) in enumerate(incident):
            out[(eid, v)] = Fraction(pv) + Fraction(j + 1, 2 * width)
    return out


def _sorted_orders(
    g: Multigraph,
    xs: dict[tuple[int, int], Fraction],
    crossings: list[tuple[int, int]],
    rank: dict[int, int] | None = None,
) -> tuple[dict[int, list[int]], set[int]]:
    """Each edge's crossings ordered along it via exact chord geometry.

    Chord ends lie on the parabola y = x^2, so the chord through abscissas
    a, b is the line y = (a+b)x - ab and two interleaving chords meet at
    x* = (ab - cd) / ((a+b) - (c+d)), the denominator nonzero because
    interleaving forces distinct endpoint sums.  Equal positions mean
    concurrent crossings; ``rank`` perturbs crossing idx by rank[idx]
    infinitesimally along every edge through it.  Returns the orders and
    the crossing indices left tied.
    """
    insts = g.instances()
    span = [(xs[(eid, u)], xs[(eid, v)]) for eid, (u, v, _) in enumerate(insts)]

    def meet(e: int, f: int) -> Fraction:
        a, b = span[e]
        c, d = span[f]
        return (a * b - c * d) / ((a + b) - (c + d))

    per_edge: dict[int, list[tuple[Fraction, int, int]]] = {}
    for idx, (e, f) in enumerate(crossings):
        x_star = meet(e, f)
        tiebreak = 0 if rank is None else rank.get(idx, 0)
        per_edge.setdefault(e, []).append((x_star, tiebreak, idx))
        per_edge.setdefault(f, []).append((x_star, tiebreak, idx))

    orders: dict[int, list[int]] = {}
    tied: set[int] = set()
    for eid, found in per_edge.items():
        u, v, _ = insts[eid]
        if xs[(eid, u)] < xs[(eid, v)]:
            found.sort(key=lambda t: (t[0], t[1]))
        else:
            found.sort(key=lambda t: (-t[0], -t[1]))
        for prev, cur in zip(found, found[1:]):
            if prev[0] == cur[0] and prev[1] == cur[1]:
                tied.update((prev[2], cur[2]))
        orders[eid] = [idx for _, _, idx in found]
    return orders, tied


def certificate_from_book(d: BookDrawing) -> CrossingCertificate:
    """Read a crossing certificate off a book drawing.

    The crossing pairs are the interleaving same-page chords.  Crossing
    orders along each edge come from an exact rational drawing (parabola
    model, one half-plane per page).  In the measure-zero event of
    concurrent crossings the tied crossings are nudged apart in every
    order until the certificate verifies.
    """
    g = d.graph
    crossings = d.crossing_pairs()
    if not crossings:
        return CrossingCertificate.build([])
    xs = _slot_abscissas(d)

    def assemble(orderings: dict[int, list[int]]) -> CrossingCertificate:
        trimmed = {eid: seq for eid, seq in orderings.items() if len(seq) >= 2}
        return CrossingCertificate.build(crossings, trimmed)

    orders, tied = _sorted_orders(g, xs, crossings)
    cert = assemble(orders)
    if not tied:
        return cert
    if verify_certificate(g, cert)[1]:
        return cert
    # Concurrent crossings: try every relative nudge of the tied ones.
    for perm in permutations(sorted(tied)):
        rank = {idx: r for r, idx in enumerate(perm)}
        retry, still_tied = _sorted_orders(g, xs, crossings, rank)
        if still_tied:
            continue
        cand = assemble(retry)
        if verify_certificate(g, cand)[1]:
            return cand
    raise RuntimeError("could not resolve concurrent crossings into a drawing")


def scale_certificate(
    base: Multigraph, cert: CrossingCertificate, target: Multigraph
) -> CrossingCertificate:
    """Lift a certificate of base to target = base with multiplied edges.

    target must have the same vertices and pairs, with each pair's
    multiplicity an integer multiple of its base multiplicity.  Copies of
    an edge run in a narrow tube around it, so a base crossing between
    edges with ratios r and s becomes an r-by-s grid of crossings, the grid
    rows meeting every column in one consistent order.  Crossings of the
    target: sum of r*s over base crossings.
    """
    if target.n != base.n:
        raise ValueError("vertex sets differ")
    base_mult = {(u, v): mult for u, v, mult in base.edges}
    ratio: dict[tuple[int, int], int] = {}
    for u, v, mult in target.edges:
        bm = base_mult.get((u, v))
        if bm is None or mult % bm != 0:
            raise ValueError(f"pair ({u}, {v}) does not scale from the base graph")
        ratio[(u, v)] = mult // bm
    if len(base_mult) != len(ratio):
        raise ValueError("target is missing pairs of the base graph")

    insts = base.instances()

    def group(eid: int) -> list[int]:
        u, v, copy = insts[eid]
        r = ratio[(u, v)]
        return [target.instance_id(u, v, copy * r + i) for i in range(r)]

    new_pairs: list[tuple[int, int]] = []
    grid_of: list[list[list[int]]] = []
    for e, f in cert.crossings:
        ge, gf = group(e), group(f)
        grid = [[-1] * len(gf) for _ in ge]
        for i, te in enumerate(ge):
            for j, tf in enumerate(gf):
                grid[i][j] = len(new_pairs)
                new_pairs.append((min(te, tf), max(te, tf)))
        grid_of.append(grid)

    # Along a copy of e, partner copies are met in ascending index; a base
    # edge crossed several times keeps its base order, each crossing
    # expanded into its row or column of the grid.
    hits: dict[int, list[int]] = {}
    for idx, (e, f) in enumerate(cert.crossings):
        hits.setdefault(e, []).append(idx)
        hits.setdefault(f, []).append(idx)
    base_order = dict(cert.edge_orders)
    new_orders: dict[int, list[int]] = {}
    for eid, indices in hits.items():
        along = list(base_order.get(eid, indices))
        for slot, teid in enumerate(group(eid)):
            seq: list[int] = []
            for idx in along:
                e, f = cert.crossings[idx]
                grid = grid_of[idx]
                if eid == e:
                    seq.extend(grid[slot])
                else:
                    seq.extend(row[slot] for row in grid)
            if len(seq) >= 2:
                new_orders[teid] = seq
    return CrossingCertificate.build(new_pairs, new_orders)


def f_graph_certificate(k: int) -> CrossingCertificate:
    """The k-crossing certificate of f_graph(k) from its standard drawing.

    Drawing the outer cycle as a circle with each x_i inside near its four
    spoke targets, the only crossings are between consecutive spoke fans:
    x_i's last spoke crosses x_{i+1}'s first, cyclically.  Every edge is
    crossed at most once, so no order lists are needed.
    """
    from .graphs import f_graph

    g = f_graph(k)

    def spoke(i: int, j: int) -> int:
        u = i
        v = k + (j % (2 * k))
        return g.instance_id(min(u, v), max(u, v))

    pairs = []
    for i in range(k):
        e = spoke(i, 2 * i + 1)
        f = spoke((i + 1) % k, 2 * i)
        pairs.append((min(e, f), max(e, f)))
    return CrossingCertificate.build(pairs)


def fig1_certificate() -> CrossingCertificate:
    """A 3-crossing certificate for the triangle-hexagon graph.

    Hexagon 3..8 drawn convex, each triangle vertex placed inside near
    its four consecutive neighbors; the fans of adjacent triangle
    vertices overlap in two hexagon vertices and cross exactly once.
    """
    from .graphs import fig1_graph

    g = fig1_graph()

    def eid(u: int, v: int) -> int:
        return g.instance_id(min(u, v), max(u, v))

    pairs = [
        (eid(0, 5), eid(1, 4)),
        (eid(1, 7), eid(2, 6)),
        (eid(2, 3), eid(0, 8)),
    ]
    return CrossingCertificate.build(pairs)


def fig1_cone_certificate() -> CrossingCertificate:
    """A 6-crossing certificate for the coned triangle-hexagon graph.

    Extends fig1_certificate: the apex sits outside the hexagon, reaches
    3..8 freely, and reaches each triangle vertex through the one hexagon
    edge whose endpoints are both neighbors of that vertex.  Three base
    crossings plus three apex crossings; no edge is crossed twice.
    """
    from .graphs import cone, fig1_graph

    cg = cone(fig1_graph())

    def eid(u: int, v: int) -> int:
        return cg.instance_id(min(u, v), max(u, v))

    pairs = [
        (eid(0, 5), eid(1, 4)),
        (eid(1, 7), eid(2, 6)),
        (eid(2, 3), eid(0, 8)),
        (eid(9, 0), eid(3, 4)),
        (eid(9, 1), eid(5, 6)),
        (eid(9, 2), eid(7, 8)),
    ]
    return CrossingCertificate.build(pairs)
