"""Max-cut solver and the Edwards guarantee.

The exact solver is checked against a direct enumeration of all
2^(n-1) vertex splits, which is slow but independent of the pruning
logic under test.
"""

import itertools
import random

import pytest

from conecross import (
    EdwardsBound,
    complete_graph,
    cycle_graph,
    disjoint_union,
    edwards_bound,
    empty_graph,
    maxcut_edwards,
    maxcut_exact,
    random_graph,
)
from conecross.maxcut import EXACT_LIMIT, cut_value


def brute_force_maxcut(n, edges):
    best = 0
    for bits in itertools.product((0, 1), repeat=max(n - 1, 0)):
        side = (0,) + bits
        best = max(best, cut_value(edges, side))
    return best


def test_exact_matches_brute_force_on_random_graphs():
    rng = random.Random(5)
    for trial in range(30):
        n = rng.randint(1, 9)
        g = random_graph(n, rng.randint(0, n * (n - 1) // 2), seed=trial)
        edges = g.simple_pairs()
        cut = maxcut_exact(n, edges)
        assert cut.size == brute_force_maxcut(n, edges)
        assert cut_value(edges, cut.side) == cut.size


def test_known_small_values():
    assert maxcut_exact(5, cycle_graph(5).simple_pairs()).size == 4
    assert maxcut_exact(6, cycle_graph(6).simple_pairs()).size == 6
    assert maxcut_exact(3, complete_graph(3).simple_pairs()).size == 2
    assert maxcut_exact(4, complete_graph(4).simple_pairs()).size == 4
    assert maxcut_exact(3, []).size == 0


def test_cut_is_reported_lexicographically_first():
    """Vertex 0 is pinned to side 0 and ties break toward smaller vectors."""
    cut = maxcut_exact(4, cycle_graph(4).simple_pairs())
    assert cut.side == (0, 1, 0, 1)
    repeat = maxcut_exact(4, cycle_graph(4).simple_pairs())
    assert repeat.side == cut.side


def test_cut_splits_add_over_components():
    g = disjoint_union(complete_graph(3), complete_graph(3))
    assert maxcut_exact(g.n, g.simple_pairs()).size == 4


def test_exact_solver_rejects_oversized_instances():
    with pytest.raises(ValueError):
        maxcut_exact(EXACT_LIMIT + 1, [])
    with pytest.raises(ValueError):
        maxcut_exact(3, [(0, 3)])


def test_edwards_bound_values():
    b = EdwardsBound(3)
    assert b.met_by(2)
    assert not b.met_by(1)
    assert b.minimum_met() == 2
    assert b.approx() == pytest.approx(2.0)
    assert edwards_bound(0).approx() == pytest.approx(0.0)
    with pytest.raises(ValueError):
        edwards_bound(-1)


def test_edwards_integer_form_brackets_the_float_form():
    # met_by must agree with the real-number inequality away from ties
    for m in range(0, 60):
        b = EdwardsBound(m)
        low = b.minimum_met()
        assert b.met_by(low)
        assert not b.met_by(low - 1)
        assert low - 1 < b.approx() <= low + 1e-9


def test_k3_meets_edwards_with_equality():
    g = complete_graph(3)
    assert maxcut_exact(3, g.simple_pairs()).size == EdwardsBound(3).minimum_met()


def test_heuristic_cut_always_meets_the_guarantee():
    rng = random.Random(17)
    for trial in range(25):
        n = rng.randint(2, 14)
        g = random_graph(n, rng.randint(1, 2 * n), seed=500 + trial)
        edges = g.simple_pairs()
        cut = maxcut_edwards(n, edges)
        assert cut_value(edges, cut.side) == cut.size
        assert EdwardsBound(len(edges)).met_by(cut.size)


def test_heuristic_works_past_the_exact_limit():
    g = random_graph(40, 120, seed=2)
    cut = maxcut_edwards(g.n, g.simple_pairs())
    assert EdwardsBound(g.m).met_by(cut.size)
    assert len(cut.side) == 40


def test_heuristic_handles_the_empty_graph():
    assert maxcut_edwards(empty_graph(4).n, []).size == 0
