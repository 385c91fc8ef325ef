"""Left-right planarity test, cross-checked against networkx.

networkx ships an independent implementation of the same criterion, so a
seeded sweep over it is a real oracle rather than a mirror of our code.
"""

import itertools
import random

import networkx as nx
import pytest

from conecross import (
    Multigraph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    fig1_graph,
    fig3_graph,
    is_planar,
    multiply_edges,
    subdivide_edge,
)
from conecross.planarity import lr_planar


def nx_planar(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.check_planarity(g)[0]


def test_small_known_cases():
    assert lr_planar(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)])
    assert not lr_planar(5, list(itertools.combinations(range(5), 2)))
    k33 = [(a, b) for a in range(3) for b in range(3, 6)]
    assert not lr_planar(6, k33)
    assert lr_planar(0, [])
    assert lr_planar(1, [])
    assert lr_planar(2, [(0, 1)])


def test_k5_minus_any_edge_is_planar():
    pairs = list(itertools.combinations(range(5), 2))
    for drop in range(len(pairs)):
        kept = [p for i, p in enumerate(pairs) if i != drop]
        assert lr_planar(5, kept)


def test_atlas_agreement():
    """Every graph on at most seven vertices, versus the oracle."""
    for g in nx.graph_atlas_g()[1:]:
        n = g.number_of_nodes()
        edges = [tuple(sorted(e)) for e in g.edges()]
        assert lr_planar(n, edges) == nx.check_planarity(g)[0]


@pytest.mark.parametrize("seed", range(6))
def test_random_sweep_matches_networkx(seed):
    rng = random.Random(seed)
    for _ in range(120):
        n = rng.randint(1, 12)
        max_m = n * (n - 1) // 2
        m = rng.randint(0, max_m)
        pool = list(itertools.combinations(range(n), 2))
        rng.shuffle(pool)
        edges = pool[:m]
        assert lr_planar(n, edges) == nx_planar(n, edges)


def test_subdivided_kuratowski_graphs_stay_nonplanar():
    rng = random.Random(42)
    for base in (complete_graph(5), Multigraph.build(6, [(a, b) for a in range(3) for b in range(3, 6)])):
        g = base
        for _ in range(8):
            g = subdivide_edge(g, rng.randrange(g.m))
            assert not is_planar(g)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert not is_planar(g.relabel(perm))


def test_disconnected_graphs():
    g = disjoint_union(cycle_graph(6), complete_graph(4))
    assert is_planar(g)
    assert not is_planar(disjoint_union(g, complete_graph(5)))
    assert is_planar(empty_graph(40))


def test_multiplicities_do_not_affect_planarity():
    assert is_planar(multiply_edges(complete_graph(4), 3))
    assert not is_planar(multiply_edges(complete_graph(5), 2))


def test_named_graphs_are_nonplanar():
    assert not is_planar(fig1_graph())
    assert not is_planar(fig3_graph())


def test_sparse_graphs_near_the_edge_bound():
    # planar graphs can reach 3n - 6 edges; push random graphs close to it
    rng = random.Random(9)
    for n in range(10, 26, 5):
        pool = list(itertools.combinations(range(n), 2))
        for _ in range(30):
            rng.shuffle(pool)
            m = rng.randint(2 * n, 3 * n - 6)
            edges = pool[:m]
            assert lr_planar(n, edges) == nx_planar(n, edges)
